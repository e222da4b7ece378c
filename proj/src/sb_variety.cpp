#include "sbflag/sb_variety.hpp"

#include "sbflag/errors.hpp"

namespace sbflag {

void FlagDescriptor::validate() const {
  algebra.validate();
  if (flags.empty()) fail(Errc::InvalidFlags, "flag tuple must be nonempty");
  Int prev = 0;
  for (const auto& n : flags) {
    if (n <= prev) {
      fail(Errc::InvalidFlags, "flags must be strictly increasing");
    }
    prev = n;
  }
  if (flags.back() >= algebra.degree) {
    fail(Errc::InvalidFlags, "flags must stay below the algebra degree");
  }
}

Int generic_index(const FlagDescriptor& x) {
  x.validate();
  Int d = x.algebra.index;
  for (const auto& n : x.flags) d = gcd(d, n);
  return d;
}

Int variety_index(const FlagDescriptor& x) {
  return x.algebra.index / generic_index(x);
}

bool has_rational_point(const FlagDescriptor& x, const Int& ind_over_l) {
  Int d = generic_index(x);
  if (ind_over_l < 1 || x.algebra.index % ind_over_l != 0) {
    fail(Errc::InvalidIndex,
         "the index over an extension divides the index over the base");
  }
  return d % ind_over_l == 0;
}

NormalForm normal_form(const FlagDescriptor& x) {
  NormalForm out;
  out.d = generic_index(x);
  if (out.d == 1) return out;
  auto components = primary_decompose(x.algebra);
  for (const auto& [p, b] : factorize(out.d)) {
    for (const auto& comp : components) {
      if (comp.index % p == 0) {
        out.components.push_back({p, b, comp});
        break;
      }
    }
  }
  return out;
}

Int product_reduce(const AlgebraDescriptor& a, const Int& e, const Int& d) {
  a.validate();
  if (e < 1 || d < 1 || e >= a.degree || d >= a.degree) {
    fail(Errc::InvalidFlags,
         "flag dimensions must lie strictly between 0 and deg(A)");
  }
  return gcd(d, e);
}

Int combine_component_bounds(
    const std::vector<std::tuple<Int, unsigned, unsigned>>& components) {
  if (components.empty()) return 1;
  Int result = 0;
  for (size_t r = 0; r < components.size(); ++r) {
    Int mixed = 1;
    for (size_t i = 0; i < components.size(); ++i) {
      const auto& [p, a, b] = components[i];
      mixed *= pow_int(p, i == r ? b : a);
    }
    result = result == 0 ? mixed : gcd(result, mixed);
  }
  return result;
}

TorsionBound torsion_bound(const FlagDescriptor& x, FieldKind field_kind,
                           const TorsionHypotheses& hypotheses) {
  x.validate();
  if (x.algebra.kind == BaseKind::Local && field_kind != FieldKind::Local) {
    fail(Errc::InvalidHypotheses, "algebra is local but field kind is not");
  }
  if (x.algebra.kind == BaseKind::Global && field_kind != FieldKind::Global) {
    fail(Errc::InvalidHypotheses, "algebra is global but field kind is not");
  }
  for (const auto& p : hypotheses.sb_p_vanishing) {
    if (!is_prime(p)) {
      fail(Errc::InvalidHypotheses,
           "vanishing hypothesis at non-prime " + p.get_str());
    }
  }

  const Int n = x.algebra.index;
  const Int d = generic_index(x);
  const Int m = n / d;

  TorsionBound out;
  out.exponent = gcd(d, m);
  out.rules.push_back(
      {"R1", gcd(d, m), "A0 is annihilated by both d and n/d"});

  bool squarefree = true;
  auto n_factors = factorize(n);
  for (const auto& [p, e] : n_factors) {
    if (e > 1) squarefree = false;
  }
  if (squarefree) {
    out.exponent = 1;
    out.rules.push_back({"R2", 1, "square-free index"});
  }

  if (field_kind == FieldKind::Local || field_kind == FieldKind::Global) {
    out.exponent = 1;
    out.rules.push_back({"R3", 1, "local or global base field"});
  }

  if (d == 2 && n % 2 == 0 && n % 8 != 0 &&
      x.algebra.char_divides_index.has_value() &&
      !*x.algebra.char_divides_index) {
    out.exponent = 1;
    out.rules.push_back(
        {"R4", 1,
         "d = 2 with index even, not divisible by 8, characteristic prime "
         "to the index"});
  }

  if (d == 4 && x.algebra.exponent % 4 != 0) {
    out.exponent = gcd(out.exponent, 2);
    out.rules.push_back({"R5", 2, "d = 4 with exponent not divisible by 4"});
  }

  // Per-component bounds p^b, refined to p^(b-1) under the assumed
  // vanishing of A0(SB_p(D_L)); the rotation gcd combines them.
  std::vector<std::tuple<Int, unsigned, unsigned>> comps;
  bool refined = false;
  for (const auto& [p, b] : factorize(d)) {
    unsigned a = valuation(n, p);
    unsigned bound_exp = b;
    if (hypotheses.sb_p_vanishing.count(p) && 2 <= b && b <= a - 1) {
      bound_exp = b - 1;
      refined = true;
      out.rules.push_back({"R6", pow_int(p, bound_exp),
                           "primary refinement at p = " + p.get_str()});
      out.conditional_assumptions.push_back(
          "A0(SB_" + p.get_str() + "(D_L)) = 0 for all finite extensions L");
    }
    comps.push_back({p, a, bound_exp});
  }
  Int combined = combine_component_bounds(comps);
  out.exponent = gcd(out.exponent, combined);
  if (refined) {
    out.rules.push_back(
        {"R7", combined, "per-prime combination of component bounds"});
  }

  out.vanishes = out.exponent == 1;
  return out;
}

}  // namespace sbflag
