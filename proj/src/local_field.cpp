#include "sbflag/local_field.hpp"

#include "sbflag/errors.hpp"

namespace sbflag {

void LocalFieldDescriptor::validate() const {
  if (!is_prime(residue_char)) {
    fail(Errc::InvalidDescriptor, "residue characteristic must be prime");
  }
  if (field_char != 0 && field_char != residue_char) {
    fail(Errc::InvalidDescriptor,
         "field characteristic must be 0 or the residue characteristic");
  }
  if (residue_size == 0) {
    if (!derived) {
      fail(Errc::InvalidDescriptor,
           "residue size required for a base descriptor");
    }
  } else {
    Int q = residue_size;
    if (q < 2) fail(Errc::InvalidDescriptor, "residue size must be >= 2");
    while (q % residue_char == 0) q /= residue_char;
    if (q != 1) {
      fail(Errc::InvalidDescriptor,
           "residue size must be a power of the residue characteristic");
    }
  }
  for (const auto& [p, flag] : zeta) {
    if (!is_prime(p)) fail(Errc::InvalidDescriptor, "zeta flag at non-prime");
    if (p == 2 && !flag) {
      fail(Errc::InvalidDescriptor, "zeta_2 = -1 lies in every field");
    }
    // A flag for p != residue_char must agree with p | q-1 when q is known.
    if (p != residue_char && residue_size != 0) {
      bool derived_flag = (residue_size - 1) % p == 0;
      if (flag != derived_flag) {
        fail(Errc::InvalidDescriptor,
             "zeta flag contradicts residue field at p=" + p.get_str());
      }
    }
  }
}

LocalFieldDescriptor::Zeta LocalFieldDescriptor::contains_zeta(
    const Int& p) const {
  if (p == 2) return Zeta::Yes;
  auto it = zeta.find(p);
  if (p != residue_char && residue_size != 0) {
    return (residue_size - 1) % p == 0 ? Zeta::Yes : Zeta::No;
  }
  if (it != zeta.end()) return it->second ? Zeta::Yes : Zeta::No;
  return Zeta::Unknown;
}

Int local_index(const LocalBrauerClass& c) { return c.invariant.order(); }

LocalBrauerClass local_restrict(const LocalBrauerClass& c, const Int& degree) {
  if (degree < 1) fail(Errc::Internal, "restriction degree must be >= 1");
  return LocalBrauerClass{c.invariant.scale(degree)};
}

ExtensionCount count_degree_p_extensions(const LocalFieldDescriptor& field,
                                         const Int& p) {
  field.validate();
  if (!is_prime(p)) fail(Errc::InvalidDescriptor, "p must be prime");
  if (field.field_char == p) {
    // Artin-Schreier classes c*t^-k give an infinite-dimensional space.
    return ExtensionCount{true, 0};
  }
  // Kummer case: dim F*/(F*)^p >= 2, so at least (p^2-1)/(p-1) = p+1
  // lines. Otherwise: the unramified extension plus the p roots of
  // x^p - pi, pairwise distinct. Both bounds are p+1.
  return ExtensionCount{false, p + 1};
}

std::string LocalExtensionLabel::str() const {
  if (family == "unramified") return family;
  return family + "(" + parameter.get_str() + ")";
}

std::vector<LocalExtensionLabel> catalog_degree_p_extensions(
    const LocalFieldDescriptor& field, const Int& p, const Int& count) {
  ExtensionCount bound = count_degree_p_extensions(field, p);
  if (count < 0) fail(Errc::InvalidDescriptor, "count must be non-negative");
  if (!bound.infinite && count > bound.at_least) {
    fail(Errc::InsufficientExtensions,
         "only " + bound.at_least.get_str() + " extensions are guaranteed");
  }
  std::vector<LocalExtensionLabel> out;
  if (field.field_char == p) {
    // x^p - x - c t^-k with k > 0 coprime to p.
    Int k = 1;
    while (Int(out.size()) < count) {
      if (k % p != 0) out.push_back({"artin-schreier", k});
      ++k;
    }
    return out;
  }
  switch (field.contains_zeta(p)) {
    case LocalFieldDescriptor::Zeta::Yes:
      // Lines in a rank-2 quotient of F*/(F*)^p.
      for (Int i = 0; i < count; ++i) out.push_back({"kummer", i});
      return out;
    case LocalFieldDescriptor::Zeta::No:
      // The unramified extension, then the roots of x^p - pi.
      for (Int i = 0; i < count; ++i) {
        if (i == 0) {
          out.push_back({"unramified", 0});
        } else {
          out.push_back({"eisenstein-root", i - 1});
        }
      }
      return out;
    case LocalFieldDescriptor::Zeta::Unknown:
      // The count holds in either remaining case; the labels name p+1
      // pairwise distinct extensions without committing to a family.
      for (Int i = 0; i < count; ++i) out.push_back({"generic", i});
      return out;
  }
  fail(Errc::Internal, "unreachable");
}

}  // namespace sbflag
