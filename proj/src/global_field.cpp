#include "sbflag/global_field.hpp"

#include <algorithm>
#include <set>

#include "sbflag/errors.hpp"

namespace sbflag {

namespace {

const QZInvariant kZero;
const QZInvariant kHalf = QZInvariant::reduce(1, 2);

// The unique quadratic extension of the reals; any inert part at a real
// place denotes it, labeled or not.
std::string effective_label(const Place& place, const ExtensionPart& part) {
  if (place.kind == PlaceKind::Real && part.degree == 2) return "complex";
  return part.label;
}

std::vector<ExtensionPart> split_parts(const Int& degree) {
  std::vector<ExtensionPart> parts;
  for (Int i = 0; i < degree; ++i) parts.push_back({1, ""});
  return parts;
}

}  // namespace

void Place::validate() const {
  if (label.empty()) fail(Errc::MalformedInput, "place label must be nonempty");
  if (kind == PlaceKind::NonArchimedean) {
    if (!descriptor) {
      fail(Errc::InvalidDescriptor,
           "non-archimedean place needs a descriptor: " + label);
    }
    descriptor->validate();
  } else if (descriptor) {
    fail(Errc::InvalidDescriptor,
         "archimedean place carries no descriptor: " + label);
  }
}

void FieldModel::validate() const {
  std::set<std::string> seen;
  for (const auto& p : places) {
    p.validate();
    if (!seen.insert(p.label).second) {
      fail(Errc::MalformedInput, "duplicate place label: " + p.label);
    }
  }
  if (kind == Kind::Local && places.size() != 1) {
    fail(Errc::MalformedInput, "a local field model has exactly one place");
  }
}

bool FieldModel::has_place(const std::string& label) const {
  return std::any_of(places.begin(), places.end(),
                     [&](const Place& p) { return p.label == label; });
}

const Place& FieldModel::place(const std::string& label) const {
  for (const auto& p : places) {
    if (p.label == label) return p;
  }
  fail(Errc::MalformedInput, "unknown place: " + label);
}

GlobalBrauerClass GlobalBrauerClass::validate_class(
    FieldModel model, const std::map<std::string, QZInvariant>& invariants) {
  model.validate();
  GlobalBrauerClass out;
  QZInvariant sum;
  for (const auto& [label, inv] : invariants) {
    const Place& p = model.place(label);
    if (p.kind == PlaceKind::Real && !(inv == kZero || inv == kHalf)) {
      fail(Errc::InvalidLocalInvariant,
           "real place invariant must be 0/1 or 1/2: " + label);
    }
    if (p.kind == PlaceKind::Complex && !(inv == kZero)) {
      fail(Errc::InvalidLocalInvariant,
           "complex place invariant must be 0/1: " + label);
    }
    sum = sum.add(inv);
    if (!inv.is_zero()) out.support_.emplace(label, inv);
  }
  // Exactness of the ABHN sequence: a global tuple is a Brauer class iff
  // the invariants sum to zero. A single local invariant is free.
  if (model.kind == FieldModel::Kind::Global && !sum.is_zero()) {
    fail(Errc::NotInBrauerGroup, "invariants sum to " + sum.str());
  }
  out.model_ = std::move(model);
  return out;
}

QZInvariant GlobalBrauerClass::invariant_at(const std::string& label) const {
  auto it = support_.find(label);
  return it == support_.end() ? kZero : it->second;
}

Int global_index(const GlobalBrauerClass& c) {
  Int n = 1;
  for (const auto& [label, inv] : c.support()) n = lcm(n, inv.order());
  return n;
}

void FormalExtension::validate(const FieldModel& base) const {
  if (degree < 1) fail(Errc::InvalidExtension, "extension degree must be >= 1");
  for (const auto& [label, parts] : local_data) {
    const Place& place = base.place(label);
    if (parts.empty()) {
      fail(Errc::InvalidExtension, "empty partition at " + label);
    }
    Int sum = 0;
    for (const auto& part : parts) {
      if (part.degree < 1) {
        fail(Errc::InvalidExtension, "local degree must be >= 1 at " + label);
      }
      if (place.kind == PlaceKind::Real && part.degree > 2) {
        fail(Errc::InvalidExtension,
             "real completions admit parts of degree at most 2: " + label);
      }
      if (place.kind == PlaceKind::Complex && part.degree != 1) {
        fail(Errc::InvalidExtension,
             "complex completions split completely: " + label);
      }
      sum += part.degree;
    }
    if (sum != degree) {
      fail(Errc::InvalidExtension,
           "local degrees at " + label + " sum to " + sum.get_str() +
               ", expected " + degree.get_str());
    }
  }
  if (base.kind == FieldModel::Kind::Local && degree > 1) {
    // A finite extension of a local field is a single local field.
    const std::string& label = base.places.front().label;
    auto it = local_data.find(label);
    if (it == local_data.end() || it->second.size() != 1) {
      fail(Errc::InvalidExtension,
           "an extension of a local field is inert at its place");
    }
  }
  if (distinguishing_place && !base.has_place(*distinguishing_place)) {
    fail(Errc::InvalidExtension,
         "unknown distinguishing place: " + *distinguishing_place);
  }
}

bool FormalExtension::is_inert_at(const std::string& label) const {
  auto it = local_data.find(label);
  return it != local_data.end() && it->second.size() == 1;
}

bool certified_distinct(const FormalExtension& a, const FormalExtension& b) {
  std::set<std::string> labels;
  for (const auto& [l, _] : a.local_data) labels.insert(l);
  for (const auto& [l, _] : b.local_data) labels.insert(l);
  auto partition_of = [](const FormalExtension& e, const std::string& l) {
    std::vector<Int> degs;
    auto it = e.local_data.find(l);
    if (it == e.local_data.end()) {
      for (Int i = 0; i < e.degree; ++i) degs.push_back(1);
    } else {
      for (const auto& part : it->second) degs.push_back(part.degree);
    }
    std::sort(degs.begin(), degs.end());
    return degs;
  };
  for (const auto& l : labels) {
    if (partition_of(a, l) != partition_of(b, l)) return true;
    auto ia = a.local_data.find(l);
    auto ib = b.local_data.find(l);
    if (ia != a.local_data.end() && ib != b.local_data.end() &&
        ia->second.size() == 1 && ib->second.size() == 1) {
      const std::string& la = ia->second.front().label;
      const std::string& lb = ib->second.front().label;
      if (!la.empty() && !lb.empty() && la != lb) return true;
    }
  }
  return false;
}

RestrictedClass global_restrict(const GlobalBrauerClass& c,
                                const FormalExtension& E) {
  const FieldModel& base = c.model();
  E.validate(base);

  std::set<std::string> touched;
  for (const auto& [label, inv] : c.support()) touched.insert(label);
  for (const auto& [label, parts] : E.local_data) touched.insert(label);

  FieldModel derived;
  derived.kind = base.kind;
  std::map<std::string, QZInvariant> inv_out;
  RestrictedClass out;

  for (const auto& label : touched) {
    const Place& place = base.place(label);
    std::vector<ExtensionPart> parts;
    auto it = E.local_data.find(label);
    if (it != E.local_data.end()) {
      parts = it->second;
    } else {
      parts = split_parts(E.degree);
    }
    QZInvariant inv = c.invariant_at(label);
    int i = 0;
    for (const auto& part : parts) {
      ++i;
      Place np;
      np.label = label + "." + std::to_string(i);
      if (place.kind == PlaceKind::NonArchimedean) {
        np.kind = PlaceKind::NonArchimedean;
        if (part.degree == 1) {
          np.descriptor = place.descriptor;  // same completion
        } else {
          LocalFieldDescriptor d;
          d.residue_char = place.descriptor->residue_char;
          d.residue_size = 0;
          d.field_char = place.descriptor->field_char;
          d.derived = true;
          // Roots of unity persist in extensions; only positive
          // knowledge propagates.
          for (const auto& [q, flag] : place.descriptor->zeta) {
            if (flag) d.zeta.emplace(q, true);
          }
          np.descriptor = d;
        }
      } else if (place.kind == PlaceKind::Real) {
        np.kind = part.degree == 2 ? PlaceKind::Complex : PlaceKind::Real;
      } else {
        np.kind = PlaceKind::Complex;
      }
      derived.places.push_back(np);
      out.fibers[label].push_back(np.label);
      QZInvariant scaled = inv.scale(part.degree);
      if (!scaled.is_zero()) inv_out.emplace(np.label, scaled);
    }
  }
  out.cls = GlobalBrauerClass::validate_class(std::move(derived), inv_out);
  return out;
}

FormalExtension realize(const FieldModel& base,
                        const std::map<std::string, Int>& requirements,
                        const Int& degree,
                        const std::optional<std::string>& distinguishing_place) {
  base.validate();
  if (degree < 1) fail(Errc::UnrealizableRequest, "degree must be >= 1");
  FormalExtension out;
  out.degree = degree;
  out.distinguishing_place = distinguishing_place;
  for (const auto& [label, d] : requirements) {
    if (!base.has_place(label)) {
      fail(Errc::UnrealizableRequest, "unknown place: " + label);
    }
    if (d != degree) {
      fail(Errc::UnrealizableRequest,
           "local degree " + d.get_str() + " at " + label +
               " differs from the extension degree " + degree.get_str());
    }
    out.local_data[label] = {{degree, ""}};
  }
  if (base.kind == FieldModel::Kind::Local && degree > 1) {
    out.local_data[base.places.front().label] = {{degree, ""}};
  }
  out.validate(base);
  return out;
}

FormalExtension compose(const FieldModel& base, const FormalExtension& a,
                        const FormalExtension& b) {
  a.validate(base);
  b.validate(base);
  if (!is_prime(a.degree) || !is_prime(b.degree)) {
    fail(Errc::InvalidExtension,
         "compositum is modeled for prime-degree extensions only");
  }
  if (!certified_distinct(a, b)) {
    fail(Errc::InvalidExtension,
         "compositum requires certified distinctness of the factors");
  }

  std::set<std::string> touched;
  for (const auto& [l, _] : a.local_data) touched.insert(l);
  for (const auto& [l, _] : b.local_data) touched.insert(l);

  FormalExtension out;
  out.degree = a.degree * b.degree;
  for (const auto& label : touched) {
    const Place& place = base.place(label);
    auto parts_of = [&](const FormalExtension& e) {
      auto it = e.local_data.find(label);
      return it == e.local_data.end() ? split_parts(e.degree) : it->second;
    };
    std::vector<ExtensionPart> pa = parts_of(a);
    std::vector<ExtensionPart> pb = parts_of(b);
    std::vector<ExtensionPart> combined;
    for (const auto& x : pa) {
      for (const auto& y : pb) {
        std::string lx = effective_label(place, x);
        std::string ly = effective_label(place, y);
        if (!lx.empty() && lx == ly) {
          if (x.degree != y.degree) {
            fail(Errc::InvalidExtension,
                 "label " + lx + " reused at different local degrees");
          }
          // Same local field: the Galois model E (x) E = E^d.
          for (Int i = 0; i < x.degree; ++i)
            combined.push_back({x.degree, lx});
        } else if (!lx.empty() || !ly.empty()) {
          // Certifiably distinct completions are linearly disjoint.
          std::string joined = lx.empty() ? ly
                               : ly.empty() ? lx
                                            : lx + "|" + ly;
          combined.push_back({x.degree * y.degree, joined});
        } else {
          // Anonymous parts overlap as much as possible.
          Int g = gcd(x.degree, y.degree);
          Int l = lcm(x.degree, y.degree);
          for (Int i = 0; i < g; ++i) combined.push_back({l, ""});
        }
      }
    }
    out.local_data[label] = std::move(combined);
  }
  for (const auto& [l, _] : out.local_data) {
    // First place witnessing structural or label distinctness.
    FormalExtension ra, rb;
    ra.degree = a.degree;
    rb.degree = b.degree;
    auto ia = a.local_data.find(l);
    auto ib = b.local_data.find(l);
    if (ia != a.local_data.end()) ra.local_data[l] = ia->second;
    if (ib != b.local_data.end()) rb.local_data[l] = ib->second;
    if (certified_distinct(ra, rb)) {
      out.distinguishing_place = l;
      break;
    }
  }
  out.validate(base);
  return out;
}

namespace {

struct PlaceOption {
  std::vector<ExtensionPart> parts;
  std::string kind;  // split | fresh | same-l0 | same-l1
};

std::string inert_label_at(const FormalExtension& e, const Place& place) {
  auto it = e.local_data.find(place.label);
  if (it == e.local_data.end() || it->second.size() != 1) return "";
  return effective_label(place, it->second.front());
}

std::vector<PlaceOption> place_options(const Place& place,
                                       const FormalExtension& l0,
                                       const FormalExtension& l1,
                                       const Int& p) {
  std::vector<PlaceOption> options;
  PlaceOption split;
  split.parts = split_parts(p);
  split.kind = "split";
  options.push_back(split);

  std::string used0 = inert_label_at(l0, place);
  std::string used1 = inert_label_at(l1, place);

  if (place.kind == PlaceKind::Complex) return options;
  if (place.kind == PlaceKind::Real) {
    if (p == 2) options.push_back({{{2, "complex"}}, "fresh"});
    return options;
  }

  // Three candidates always suffice to dodge the two used labels, and the
  // p+1 lower bound guarantees them.
  auto labels = catalog_degree_p_extensions(*place.descriptor, p, 3);
  for (const auto& cand : labels) {
    std::string s = cand.str();
    if (s != used0 && s != used1) {
      options.push_back({{{p, s}}, "fresh"});
      break;
    }
  }
  if (!used0.empty()) options.push_back({{{p, used0}}, "same-l0"});
  if (!used1.empty() && used1 != used0) {
    options.push_back({{{p, used1}}, "same-l1"});
  }
  return options;
}

}  // namespace

LemmaResult construct_extension_lemma(const GlobalBrauerClass& c,
                                      const FormalExtension& l0,
                                      const FormalExtension& l1) {
  const FieldModel& base = c.model();
  l0.validate(base);
  l1.validate(base);

  Int n = global_index(c);
  Int p;
  unsigned m = 0;
  if (!is_prime_power(n, p, m) || m < 2) {
    fail(Errc::LemmaPreconditionsFailed,
         "class index must be p^m with m >= 2, got " + n.get_str());
  }
  if (l0.degree != p || l1.degree != p) {
    fail(Errc::LemmaPreconditionsFailed, "L0 and L1 must have degree p");
  }
  if (!certified_distinct(l0, l1)) {
    fail(Errc::LemmaPreconditionsFailed, "L0 and L1 must be distinct");
  }
  Int target_k = pow_int(p, m - 1);
  Int target_kl = pow_int(p, m - 2);
  for (const FormalExtension* e : {&l0, &l1}) {
    Int ind = global_index(global_restrict(c, *e).cls);
    if (ind != target_k) {
      fail(Errc::LemmaPreconditionsFailed,
           "restricted index is " + ind.get_str() + ", expected p^(m-1) = " +
               target_k.get_str());
    }
  }

  std::vector<std::string> support;
  std::string v0;
  for (const auto& [label, inv] : c.support()) {
    support.push_back(label);
    if (v0.empty() && inv.order() == n) v0 = label;
  }
  if (v0.empty()) fail(Errc::Internal, "no place realizes the full index");

  std::vector<std::vector<PlaceOption>> options;
  options.reserve(support.size());
  for (const auto& label : support) {
    options.push_back(place_options(base.place(label), l0, l1, p));
  }

  // Odometer over the per-place option lists, lexicographic, first
  // admissible pattern wins.
  std::vector<size_t> pick(support.size(), 0);
  for (;;) {
    FormalExtension k;
    k.degree = p;
    k.distinguishing_place = v0;
    for (size_t i = 0; i < support.size(); ++i) {
      k.local_data[support[i]] = options[i][pick[i]].parts;
    }
    bool ok = global_index(global_restrict(c, k).cls) == target_k;
    if (ok) {
      for (const FormalExtension* e : {&l0, &l1}) {
        try {
          FormalExtension comp = compose(base, k, *e);
          if (global_index(global_restrict(c, comp).cls) != target_kl) {
            ok = false;
          }
        } catch (const Error&) {
          ok = false;
        }
        if (!ok) break;
      }
    }
    if (ok) {
      LemmaCertificate cert;
      cert.p = p;
      cert.m = m;
      cert.distinguishing_place = v0;
      for (size_t i = 0; i < support.size(); ++i) {
        const PlaceOption& opt = options[i][pick[i]];
        LemmaPlaceChoice choice;
        choice.place = support[i];
        for (const auto& part : opt.parts) choice.partition.push_back(part.degree);
        choice.label = opt.parts.size() == 1 ? opt.parts.front().label : "";
        choice.kind = opt.kind;
        cert.choices.push_back(choice);
      }
      cert.index_over_k = target_k;
      cert.index_over_kl0 = target_kl;
      cert.index_over_kl1 = target_kl;
      return LemmaResult{std::move(k), std::move(cert)};
    }
    size_t i = 0;
    while (i < pick.size()) {
      if (++pick[i] < options[i].size()) break;
      pick[i] = 0;
      ++i;
    }
    if (i == pick.size()) break;
  }
  fail(Errc::ConstructionFailed,
       "no admissible local pattern found; inputs violate the model's "
       "consistency assumptions");
}

FormalExtension construct_power_extension(const GlobalBrauerClass& c,
                                          unsigned k) {
  Int n = global_index(c);
  FormalExtension out;
  if (n == 1) {
    if (k != 0) {
      fail(Errc::InvalidTarget, "trivial class admits only k = 0");
    }
    out.degree = 1;
    return out;
  }
  Int p;
  unsigned m = 0;
  if (!is_prime_power(n, p, m)) {
    fail(Errc::InvalidTarget, "class index must be a prime power");
  }
  if (k > m) {
    fail(Errc::InvalidTarget, "k must satisfy 0 <= k <= m");
  }
  out.degree = pow_int(p, k);
  if (k == 0) return out;
  for (const auto& [label, inv] : c.support()) {
    const Place& place = c.model().place(label);
    if (place.kind == PlaceKind::Real) {
      // The completion tower over the reals stops at degree 2, which
      // already kills the invariant.
      std::vector<ExtensionPart> parts;
      for (Int i = 0; i < out.degree / 2; ++i) parts.push_back({2, "complex"});
      out.local_data[label] = std::move(parts);
    } else {
      out.local_data[label] = {{out.degree, ""}};
    }
  }
  out.validate(c.model());
  return out;
}

}  // namespace sbflag
