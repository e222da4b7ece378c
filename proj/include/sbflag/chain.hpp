#ifndef SBFLAG_CHAIN_HPP
#define SBFLAG_CHAIN_HPP

#include <string>
#include <utility>
#include <vector>

#include "sbflag/algebra.hpp"

namespace sbflag {

// One degree-p^j step in the field-node DAG: a parent node plus the
// relative formal extension over the parent's derived model.
struct ChainEdge {
  int parent = -1;
  FormalExtension rel;
};

// A field node over the p-special base: composita carry two parent
// edges (one per factor, each holding the other factor pushed up), so
// certified subfields are exactly the DAG ancestors.
struct FieldNode {
  int id = -1;
  std::string name;
  unsigned depth = 0;       // log_p of the degree over the base
  Int degree_over_base = 1;
  Int declared_index = 1;   // recomputed by iterated restriction
  std::vector<ChainEdge> parents;  // parents[0] = primary (tower) edge
  std::vector<int> ancestors;      // sorted ids, includes self
};

struct SimpleEquivCertificate {
  int left = -1;
  int right = -1;
  int common_subfield = -1;
  std::string left_generator;   // interpolation note, alpha side
  std::string right_generator;  // gamma side
  int witness = -1;             // splitting witness node
  Int membership_bound = 1;     // p^k
};

struct EquivChain {
  std::vector<int> nodes;  // consecutive nodes are certificate endpoints
  std::vector<SimpleEquivCertificate> certificates;
  // (parent measure, call measure) per recursive call; the measure
  // strictly decreases.
  std::vector<std::pair<unsigned, unsigned>> recursion_trace;
};

struct ChainProblem {
  AlgebraDescriptor algebra;  // carries the class; index p^m
  Int p;
  unsigned m = 0;
  unsigned k = 0;  // Y = SB_{p^k}(D); nodes have degree p^(m-k)
};

struct CertificateDiagnostics {
  bool valid = true;
  std::vector<std::string> issues;
};

// Builds chains of simple-equivalence certificates between degree
// p^(m-k) field nodes, following the intersection-degree induction.
// Each builder owns a private node registry; separate builders are
// independent.
class ChainBuilder {
 public:
  // algebra must carry a field model (global kind; the model itself may
  // be local or global) with index p^m, and 1 <= k <= m-1.
  ChainBuilder(const AlgebraDescriptor& algebra, unsigned k);

  const ChainProblem& problem() const { return problem_; }
  int base_node() const { return 0; }

  // Registers a fixture tower of labeled degree-p steps below the base;
  // shared prefixes share nodes. Returns the top node's id.
  int add_fixture_node(const std::string& name,
                       const std::vector<std::string>& tower_labels);

  // K subset L' subset L with [L' : K] = p; returns L itself when
  // [L : K] = p.
  int subextension_of_degree_p(int l, int K);

  EquivChain build_chain(int l0, int l1);

  const FieldNode& node(int id) const;
  const std::vector<FieldNode>& registry() const { return nodes_; }

 private:
  int intersection(int a, int b) const;
  int make_node(const std::string& name, int parent, FormalExtension rel);
  int make_compositum(int common, int a, int b);
  int power_tail(int top, unsigned steps);
  const GlobalBrauerClass& cls(int id) const { return classes_[id]; }
  void rec(int a, int b, unsigned parent_measure, EquivChain& out);
  void base_case(int a, int b, int common, EquivChain& out);
  const FormalExtension& rel_over(int child, int parent) const;

  ChainProblem problem_;
  unsigned n_ = 0;  // m - k
  std::vector<FieldNode> nodes_;
  std::vector<GlobalBrauerClass> classes_;
  std::map<std::pair<int, std::string>, int> fixture_steps_;
  int fresh_counter_ = 0;
};

// Validation is independent of the builder: everything is recomputed
// from the problem's class and the serialized registry.
CertificateDiagnostics validate_certificate(
    const ChainProblem& problem, const std::vector<FieldNode>& registry,
    const SimpleEquivCertificate& cert);

// Full chain validation: endpoint degrees, A(Y) membership, certificate
// consistency, and the recursion trace's strict decrease.
std::vector<std::string> validate_chain(const ChainProblem& problem,
                                        const std::vector<FieldNode>& registry,
                                        const EquivChain& chain);

// Index of the problem's class restricted along the node's primary
// path.
Int recompute_node_index(const ChainProblem& problem,
                         const std::vector<FieldNode>& registry, int id);

}  // namespace sbflag

#endif
