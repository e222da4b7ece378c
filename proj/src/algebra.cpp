#include "sbflag/algebra.hpp"

#include "sbflag/errors.hpp"

namespace sbflag {

namespace {

bool same_prime_support(const Int& a, const Int& b) {
  auto fa = factorize(a);
  auto fb = factorize(b);
  if (fa.size() != fb.size()) return false;
  for (const auto& [p, e] : fa) {
    if (fb.find(p) == fb.end()) return false;
  }
  return true;
}

}  // namespace

AlgebraDescriptor AlgebraDescriptor::abstract_algebra(
    const Int& index, const Int& exponent, const std::optional<Int>& degree,
    const std::optional<bool>& char_divides_index) {
  AlgebraDescriptor a;
  a.kind = BaseKind::Abstract;
  a.index = index;
  a.exponent = exponent;
  a.degree = degree.value_or(index);
  a.char_divides_index = char_divides_index;
  a.validate();
  return a;
}

AlgebraDescriptor AlgebraDescriptor::local_algebra(
    LocalBrauerClass data, const std::optional<Int>& degree) {
  AlgebraDescriptor a;
  a.kind = BaseKind::Local;
  a.index = local_index(data);
  a.exponent = a.index;  // period equals index over local fields
  a.degree = degree.value_or(a.index);
  a.local_data = std::move(data);
  a.validate();
  return a;
}

AlgebraDescriptor AlgebraDescriptor::global_algebra(
    GlobalBrauerClass data, const std::optional<Int>& degree) {
  AlgebraDescriptor a;
  a.kind = BaseKind::Global;
  a.index = global_index(data);
  a.exponent = a.index;  // period equals index over global fields
  a.degree = degree.value_or(a.index);
  a.global_data = std::move(data);
  a.validate();
  return a;
}

void AlgebraDescriptor::validate() const {
  if (index < 1 || exponent < 1 || degree < 1) {
    fail(Errc::InvalidAlgebra, "index, exponent and degree must be positive");
  }
  if (degree % index != 0) {
    fail(Errc::InvalidAlgebra, "index must divide degree");
  }
  if (index % exponent != 0) {
    fail(Errc::InvalidAlgebra, "exponent must divide index");
  }
  if (index > 1 && !same_prime_support(index, exponent)) {
    fail(Errc::InvalidAlgebra,
         "exponent and index must share their prime divisors");
  }
  if (kind != BaseKind::Abstract && char_divides_index.has_value()) {
    fail(Errc::InvalidAlgebra,
         "characteristic flag applies to abstract descriptors only");
  }
  if (kind == BaseKind::Local && !local_data) {
    fail(Errc::InvalidAlgebra, "local descriptor needs Brauer data");
  }
  if (kind == BaseKind::Global && !global_data) {
    fail(Errc::InvalidAlgebra, "global descriptor needs Brauer data");
  }
  if (kind == BaseKind::Local && index != local_index(*local_data)) {
    fail(Errc::InvalidAlgebra, "local index must match the invariant order");
  }
  if (kind == BaseKind::Global && index != global_index(*global_data)) {
    fail(Errc::InvalidAlgebra, "global index must match the invariant lcm");
  }
}

Int algebra_index(const AlgebraDescriptor& a) {
  a.validate();
  return a.index;
}

std::vector<AlgebraDescriptor> primary_decompose(const AlgebraDescriptor& a) {
  a.validate();
  std::vector<AlgebraDescriptor> out;
  if (a.index == 1) return out;
  for (const auto& [p, e] : factorize(a.index)) {
    switch (a.kind) {
      case BaseKind::Abstract: {
        AlgebraDescriptor comp = AlgebraDescriptor::abstract_algebra(
            pow_int(p, e), p_part(a.exponent, p));
        if (a.char_divides_index.has_value() && !*a.char_divides_index) {
          comp.char_divides_index = false;
        }
        out.push_back(std::move(comp));
        break;
      }
      case BaseKind::Local: {
        auto parts = a.local_data->invariant.primary_split();
        out.push_back(
            AlgebraDescriptor::local_algebra(LocalBrauerClass{parts.at(p)}));
        break;
      }
      case BaseKind::Global: {
        std::map<std::string, QZInvariant> inv;
        for (const auto& [label, value] : a.global_data->support()) {
          auto parts = value.primary_split();
          auto it = parts.find(p);
          if (it != parts.end()) inv.emplace(label, it->second);
        }
        out.push_back(AlgebraDescriptor::global_algebra(
            GlobalBrauerClass::validate_class(a.global_data->model(), inv)));
        break;
      }
    }
  }
  return out;
}

AlgebraDescriptor restrict_algebra(const AlgebraDescriptor& a,
                                   const FormalExtension& e) {
  a.validate();
  switch (a.kind) {
    case BaseKind::Abstract:
      fail(Errc::UnsupportedForAbstract,
           "abstract descriptors carry no Brauer data to restrict");
    case BaseKind::Local: {
      // A local extension is inert of full degree at the single place.
      return AlgebraDescriptor::local_algebra(
          local_restrict(*a.local_data, e.degree));
    }
    case BaseKind::Global: {
      return AlgebraDescriptor::global_algebra(
          global_restrict(*a.global_data, e).cls);
    }
  }
  fail(Errc::Internal, "unreachable");
}

}  // namespace sbflag
