#ifndef SBFLAG_SB_VARIETY_HPP
#define SBFLAG_SB_VARIETY_HPP

#include <set>
#include <string>
#include <vector>

#include "sbflag/algebra.hpp"

namespace sbflag {

// A Severi-Brauer flag variety: an algebra plus a strictly increasing
// tuple of flag dimensions below the algebra's degree.
struct FlagDescriptor {
  AlgebraDescriptor algebra;
  std::vector<Int> flags;

  void validate() const;
};

// d = gcd(ind(A), n_1, ..., n_k): the index of A over the function field
// of the flag variety.
Int generic_index(const FlagDescriptor& x);

// The index of the variety itself: ind(A) / d.
Int variety_index(const FlagDescriptor& x);

// The variety has an L-point iff ind(A_L) divides d.
bool has_rational_point(const FlagDescriptor& x, const Int& ind_over_l);

struct NormalFormComponent {
  Int prime;
  unsigned exponent;  // v_p(d)
  AlgebraDescriptor component;
};

// Stable-birational normal form: X ~ prod_p SB_{p^b}(D_p) with
// d = prod p^b and D_p the p-primary component of the division algebra.
struct NormalForm {
  Int d;
  std::vector<NormalFormComponent> components;
};

NormalForm normal_form(const FlagDescriptor& x);

// A_0(SB_e(A) x SB_d(A)) reduces to SB_gcd(d,e)(A).
Int product_reduce(const AlgebraDescriptor& a, const Int& e, const Int& d);

enum class FieldKind { Abstract, Local, Global };

struct TorsionHypotheses {
  // Primes p for which A_0(SB_p(D_L)) = 0 is assumed for all finite L.
  std::set<Int> sb_p_vanishing;
};

struct AppliedRule {
  std::string id;
  Int exponent;
  std::string citation;
};

// An annihilation bound for A_0(X): the gcd of every applicable rule's
// exponent, with provenance. exponent == 1 means A_0(X) = 0.
struct TorsionBound {
  Int exponent;
  bool vanishes = false;
  std::vector<AppliedRule> rules;
  std::vector<std::string> conditional_assumptions;
};

TorsionBound torsion_bound(const FlagDescriptor& x, FieldKind field_kind,
                           const TorsionHypotheses& hypotheses = {});

// The per-prime combination step: for components (p_i, a_i, b_i), the
// gcd over all rotations of (prod_{i != r} p_i^{a_i}) * p_r^{b_r}.
Int combine_component_bounds(
    const std::vector<std::tuple<Int, unsigned, unsigned>>& components);

}  // namespace sbflag

#endif
