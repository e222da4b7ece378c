#ifndef SBFLAG_LOCAL_FIELD_HPP
#define SBFLAG_LOCAL_FIELD_HPP

#include <map>
#include <string>
#include <vector>

#include "sbflag/ints.hpp"
#include "sbflag/qz.hpp"

namespace sbflag {

enum class PlaceKind { NonArchimedean, Real, Complex };

// Descriptor of a non-archimedean local field. Local fields are
// descriptors, not constructed fields: all the engine ever needs is the
// case split (characteristic, residue size, zeta_p membership) and
// formally distinct extension labels.
struct LocalFieldDescriptor {
  Int residue_char;          // p0, prime
  Int residue_size;          // q, a power of p0; 0 when unknown (derived)
  Int field_char;            // 0 or p0
  std::map<Int, bool> zeta;  // user-supplied zeta_p membership flags
  bool derived = false;      // completion of a formal extension

  void validate() const;

  enum class Zeta { Yes, No, Unknown };
  // zeta_p membership: derived from p | q-1 whenever p != residue_char and
  // q is known; always Yes for p = 2; user flags fill the rest. A user
  // flag contradicting a derivable value is an invalid descriptor.
  Zeta contains_zeta(const Int& p) const;
};

struct LocalBrauerClass {
  QZInvariant invariant;
};

Int local_index(const LocalBrauerClass& c);

// inv_L(Res(c)) = [L:F] * inv_F(c); the index drops by gcd(index, degree).
LocalBrauerClass local_restrict(const LocalBrauerClass& c, const Int& degree);

// Lower bound on the number of degree-p extensions of the field.
struct ExtensionCount {
  bool infinite = false;
  Int at_least = 0;  // meaningful when !infinite
};

ExtensionCount count_degree_p_extensions(const LocalFieldDescriptor& field,
                                         const Int& p);

// A formally distinct degree-p extension, tagged with its construction
// family and a distinguishing parameter.
struct LocalExtensionLabel {
  std::string family;  // artin-schreier | kummer | unramified |
                       // eisenstein-root | generic
  Int parameter = 0;
  std::string str() const;

  friend bool operator==(const LocalExtensionLabel& a,
                         const LocalExtensionLabel& b) {
    return a.family == b.family && a.parameter == b.parameter;
  }
};

// `count` pairwise distinct labels in a deterministic order. Requesting
// more than the guaranteed lower bound is insufficient-extensions.
std::vector<LocalExtensionLabel> catalog_degree_p_extensions(
    const LocalFieldDescriptor& field, const Int& p, const Int& count);

}  // namespace sbflag

#endif
