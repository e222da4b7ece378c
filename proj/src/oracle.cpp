#include "sbflag/oracle.hpp"

#include <algorithm>
#include <set>

#include "sbflag/errors.hpp"

namespace sbflag::oracle {

namespace {

// Raw fraction: value num/den mod 1, not necessarily reduced. The
// oracle keeps its own arithmetic separate from QZInvariant.
struct RawFrac {
  Int num;
  Int den;
};

bool annihilates(const Int& n, const RawFrac& f) {
  return (n * f.num) % f.den == 0;
}

// Order of num/den in Q/Z by scan.
Int raw_order(const RawFrac& f) {
  for (Int n = 1;; ++n) {
    if (annihilates(n, f)) return n;
  }
}

RawFrac raw_scale(const RawFrac& f, const Int& m) {
  return RawFrac{f.num * m, f.den};
}

}  // namespace

Int oracle_index(const GlobalBrauerClass& c, const EnumerationBudget& budget) {
  if (Int(c.support().size()) > budget.max_places) {
    fail(Errc::BudgetExceeded, "too many places for the oracle budget");
  }
  std::vector<RawFrac> fracs;
  for (const auto& [label, inv] : c.support()) {
    if (inv.denominator() > budget.max_denominator) {
      fail(Errc::BudgetExceeded, "denominator exceeds the oracle budget");
    }
    fracs.push_back(RawFrac{inv.numerator(), inv.denominator()});
  }
  for (Int n = 1;; ++n) {
    bool all = true;
    for (const auto& f : fracs) {
      if (!annihilates(n, f)) {
        all = false;
        break;
      }
    }
    if (all) return n;
  }
}

namespace {

struct PatternChoice {
  std::vector<ExtensionPart> parts;
};

// Index of c restricted along E, recomputed from raw fractions and the
// pairwise compositum semantics.
Int raw_restricted_index(const GlobalBrauerClass& c, const FormalExtension& e) {
  Int index = 1;
  for (const auto& [label, inv] : c.support()) {
    RawFrac f{inv.numerator(), inv.denominator()};
    auto it = e.local_data.find(label);
    if (it == e.local_data.end()) {
      index = lcm(index, raw_order(f));
      continue;
    }
    for (const auto& part : it->second) {
      index = lcm(index, raw_order(raw_scale(f, part.degree)));
    }
  }
  return index;
}

std::string inert_label(const FormalExtension& e, const Place& place) {
  auto it = e.local_data.find(place.label);
  if (it == e.local_data.end() || it->second.size() != 1) return "";
  const ExtensionPart& part = it->second.front();
  if (place.kind == PlaceKind::Real && part.degree == 2) return "complex";
  return part.label;
}

// Compositum of two degree-p patterns at one place, mirroring the
// pairwise rule, reduced to the local degree multiset.
std::vector<Int> compose_degrees(const Place& place,
                                 const std::vector<ExtensionPart>& pa,
                                 const std::vector<ExtensionPart>& pb) {
  std::vector<Int> out;
  for (const auto& x : pa) {
    for (const auto& y : pb) {
      std::string lx = x.label, ly = y.label;
      if (place.kind == PlaceKind::Real) {
        if (x.degree == 2) lx = "complex";
        if (y.degree == 2) ly = "complex";
      }
      if (!lx.empty() && lx == ly) {
        for (Int i = 0; i < x.degree; ++i) out.push_back(x.degree);
      } else if (!lx.empty() || !ly.empty()) {
        out.push_back(x.degree * y.degree);
      } else {
        Int g = gcd(x.degree, y.degree);
        Int l = lcm(x.degree, y.degree);
        for (Int i = 0; i < g; ++i) out.push_back(l);
      }
    }
  }
  return out;
}

Int raw_compositum_index(const GlobalBrauerClass& c, const FormalExtension& k,
                         const FormalExtension& l, const Int& p) {
  Int index = 1;
  for (const auto& [label, inv] : c.support()) {
    const Place& place = c.model().place(label);
    RawFrac f{inv.numerator(), inv.denominator()};
    auto parts_of = [&](const FormalExtension& e) {
      auto it = e.local_data.find(label);
      if (it != e.local_data.end()) return it->second;
      std::vector<ExtensionPart> split;
      for (Int i = 0; i < p; ++i) split.push_back({1, ""});
      return split;
    };
    for (const auto& deg : compose_degrees(place, parts_of(k), parts_of(l))) {
      index = lcm(index, raw_order(raw_scale(f, deg)));
    }
  }
  return index;
}

}  // namespace

std::vector<FormalExtension> oracle_lemma_search(
    const GlobalBrauerClass& c, const FormalExtension& l0,
    const FormalExtension& l1, const EnumerationBudget& budget) {
  if (Int(c.support().size()) > budget.max_places) {
    fail(Errc::BudgetExceeded, "too many places for the oracle budget");
  }
  Int n = 1;
  for (const auto& [label, inv] : c.support()) {
    n = lcm(n, raw_order(RawFrac{inv.numerator(), inv.denominator()}));
  }
  if (n > budget.max_index) {
    fail(Errc::BudgetExceeded, "index exceeds the oracle budget");
  }
  Int p;
  unsigned m = 0;
  if (!is_prime_power(n, p, m) || m < 2) {
    fail(Errc::LemmaPreconditionsFailed, "index must be p^m with m >= 2");
  }
  Int target_k = pow_int(p, m - 1);
  Int target_kl = pow_int(p, m - 2);

  std::vector<std::string> support;
  for (const auto& [label, inv] : c.support()) support.push_back(label);

  // Per-place pattern space: split, fresh inert label, L0's label,
  // L1's label (deduplicated, archimedean places constrained).
  std::vector<std::vector<PatternChoice>> options;
  for (const auto& label : support) {
    const Place& place = c.model().place(label);
    std::vector<PatternChoice> opts;
    PatternChoice split;
    for (Int i = 0; i < p; ++i) split.parts.push_back({1, ""});
    opts.push_back(split);
    std::string used0 = inert_label(l0, place);
    std::string used1 = inert_label(l1, place);
    if (place.kind == PlaceKind::Real) {
      if (p == 2) opts.push_back({{{2, "complex"}}});
    } else if (place.kind == PlaceKind::NonArchimedean) {
      auto labels = catalog_degree_p_extensions(*place.descriptor, p, 3);
      for (const auto& cand : labels) {
        std::string s = cand.str();
        if (s != used0 && s != used1) {
          opts.push_back({{{p, s}}});
          break;
        }
      }
      if (!used0.empty()) opts.push_back({{{p, used0}}});
      if (!used1.empty() && used1 != used0) opts.push_back({{{p, used1}}});
    }
    options.push_back(std::move(opts));
  }

  std::vector<FormalExtension> admissible;
  std::vector<size_t> pick(support.size(), 0);
  for (;;) {
    FormalExtension k;
    k.degree = p;
    for (size_t i = 0; i < support.size(); ++i) {
      k.local_data[support[i]] = options[i][pick[i]].parts;
    }
    if (raw_restricted_index(c, k) == target_k &&
        raw_compositum_index(c, k, l0, p) == target_kl &&
        raw_compositum_index(c, k, l1, p) == target_kl) {
      admissible.push_back(k);
    }
    size_t i = 0;
    while (i < pick.size()) {
      if (++pick[i] < options[i].size()) break;
      pick[i] = 0;
      ++i;
    }
    if (i == pick.size()) break;
    if (pick.empty()) break;
  }
  return admissible;
}

Int oracle_torsion_combination(
    const std::vector<std::tuple<Int, unsigned, unsigned>>& components) {
  for (const auto& [p, a, b] : components) {
    if (b > a) fail(Errc::Internal, "component requires b <= a");
  }
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

}  // namespace sbflag::oracle
