#ifndef SBFLAG_GLOBAL_FIELD_HPP
#define SBFLAG_GLOBAL_FIELD_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "sbflag/local_field.hpp"
#include "sbflag/qz.hpp"

namespace sbflag {

struct Place {
  std::string label;
  PlaceKind kind = PlaceKind::NonArchimedean;
  std::optional<LocalFieldDescriptor> descriptor;  // non-archimedean only

  void validate() const;
};

// A base field model: either a local field (exactly one place) or a
// global field given by its finitely many named places; places not
// named split completely in every extension and carry no invariant.
struct FieldModel {
  enum class Kind { Local, Global };
  Kind kind = Kind::Global;
  std::vector<Place> places;

  void validate() const;
  bool has_place(const std::string& label) const;
  const Place& place(const std::string& label) const;
};

// A Brauer class as a finite place-indexed invariant tuple. Over a
// global model the invariants must sum to zero in Q/Z; over a local
// model the single invariant is unconstrained.
class GlobalBrauerClass {
 public:
  static GlobalBrauerClass validate_class(
      FieldModel model, const std::map<std::string, QZInvariant>& invariants);

  const FieldModel& model() const { return model_; }
  // Nonzero invariants only.
  const std::map<std::string, QZInvariant>& support() const {
    return support_;
  }
  QZInvariant invariant_at(const std::string& label) const;
  bool is_trivial() const { return support_.empty(); }

 private:
  FieldModel model_;
  std::map<std::string, QZInvariant> support_;
};

// index = period = lcm of the orders of the local invariants.
Int global_index(const GlobalBrauerClass& c);

// One part of a formal extension above a place: a local degree plus an
// optional label naming the local extension (catalog label or a joined
// label path). Labels witness distinctness; unlabeled parts are
// anonymous.
struct ExtensionPart {
  Int degree;
  std::string label;

  friend bool operator==(const ExtensionPart& a, const ExtensionPart& b) {
    return a.degree == b.degree && a.label == b.label;
  }
};

// A degree-n extension of a field model, given per place by a partition
// of n into local degrees. Places absent from local_data split
// completely.
struct FormalExtension {
  Int degree = 1;
  std::map<std::string, std::vector<ExtensionPart>> local_data;
  std::optional<std::string> distinguishing_place;

  void validate(const FieldModel& base) const;
  bool is_inert_at(const std::string& label) const;
  friend bool operator==(const FormalExtension& a, const FormalExtension& b) {
    return a.degree == b.degree && a.local_data == b.local_data;
  }
};

// Two formal extensions are certifiably distinct if their partitions
// differ structurally at some place or they carry different nonempty
// labels at some place.
bool certified_distinct(const FormalExtension& a, const FormalExtension& b);

struct RestrictedClass {
  GlobalBrauerClass cls;  // over the derived model
  // base place label -> labels of the derived places above it
  std::map<std::string, std::vector<std::string>> fibers;
};

// Scales each invariant by the local degrees of E; emits the class over
// the derived model (places labeled "<base>.<i>"). Zero-sum is
// preserved.
RestrictedClass global_restrict(const GlobalBrauerClass& c,
                                const FormalExtension& E);

// Conrad realization: a degree-d extension that is inert of degree d at
// each required place and splits completely elsewhere. All requirement
// degrees must equal d.
FormalExtension realize(const FieldModel& base,
                        const std::map<std::string, Int>& requirements,
                        const Int& degree,
                        const std::optional<std::string>& distinguishing_place =
                            std::nullopt);

// Compositum of two prime-degree extensions, place by place: parts with
// equal nonempty labels overlap maximally (d copies of degree d); parts
// with different labels, or a labeled part against an unlabeled one,
// are linearly disjoint (one part of degree d1*d2); unlabeled pairs
// overlap conservatively (gcd copies of lcm). Requires certified
// distinctness; the compositum degree is the product.
FormalExtension compose(const FieldModel& base, const FormalExtension& a,
                        const FormalExtension& b);

struct LemmaPlaceChoice {
  std::string place;
  std::vector<Int> partition;  // [p] or [1,...,1]
  std::string label;           // nonempty when inert
  std::string kind;            // split | fresh | same-l0 | same-l1
};

struct LemmaCertificate {
  Int p;
  unsigned m = 0;
  std::string distinguishing_place;
  std::vector<LemmaPlaceChoice> choices;
  Int index_over_k;    // p^(m-1)
  Int index_over_kl0;  // p^(m-2)
  Int index_over_kl1;  // p^(m-2)
};

struct LemmaResult {
  FormalExtension extension;
  LemmaCertificate certificate;
};

// Given a class of index p^m (m >= 2) and distinct degree-p extensions
// L0, L1 with restricted index p^(m-1), constructs a third degree-p
// extension K, distinct from both at the distinguishing place, with
// ind(c_K) = p^(m-1) and ind(c_{K L_i}) = p^(m-2). Candidate local
// patterns are enumerated in lexicographic order (split, fresh label,
// L0's label, L1's label per place, places sorted by label); the first
// admissible one is chosen.
LemmaResult construct_extension_lemma(const GlobalBrauerClass& c,
                                      const FormalExtension& l0,
                                      const FormalExtension& l1);

// Degree p^k extension K' with ind(c_{K'}) = p^(m-k), achieved by local
// degree p^k at every support place.
FormalExtension construct_power_extension(const GlobalBrauerClass& c,
                                          unsigned k);

}  // namespace sbflag

#endif
