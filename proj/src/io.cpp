#include "sbflag/io.hpp"

#include "sbflag/errors.hpp"

namespace sbflag::io {

namespace {

const json& expect(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) {
    fail(Errc::MalformedInput, std::string("missing field: ") + key);
  }
  return j.at(key);
}

std::string expect_string(const json& j, const char* key) {
  const json& v = expect(j, key);
  if (!v.is_string()) {
    fail(Errc::MalformedInput, std::string(key) + " must be a string");
  }
  return v.get<std::string>();
}

}  // namespace

json int_to_json(const Int& n) { return json(to_long(n)); }

Int int_from_json(const json& j, const char* what) {
  if (j.is_number_integer()) return Int(j.get<long>());
  if (j.is_string()) return parse_int(j.get<std::string>());
  fail(Errc::MalformedInput, std::string(what) + " must be an integer");
}

json descriptor_to_json(const LocalFieldDescriptor& d) {
  json j;
  j["residue_char"] = int_to_json(d.residue_char);
  j["residue_size"] = int_to_json(d.residue_size);
  j["field_char"] = int_to_json(d.field_char);
  json zeta = json::object();
  for (const auto& [p, flag] : d.zeta) zeta[p.get_str()] = flag;
  if (!zeta.empty()) j["zeta_flags"] = zeta;
  if (d.derived) j["derived"] = true;
  return j;
}

LocalFieldDescriptor descriptor_from_json(const json& j) {
  LocalFieldDescriptor d;
  d.residue_char = int_from_json(expect(j, "residue_char"), "residue_char");
  if (j.contains("residue_size")) {
    d.residue_size = int_from_json(j.at("residue_size"), "residue_size");
  }
  if (j.contains("field_char")) {
    d.field_char = int_from_json(j.at("field_char"), "field_char");
  }
  if (j.contains("zeta_flags")) {
    for (const auto& [key, value] : j.at("zeta_flags").items()) {
      d.zeta[parse_int(key)] = value.get<bool>();
    }
  }
  d.derived = j.value("derived", false);
  d.validate();
  return d;
}

json place_to_json(const Place& p) {
  json j;
  j["label"] = p.label;
  switch (p.kind) {
    case PlaceKind::NonArchimedean:
      j["kind"] = "nonarch";
      j["descriptor"] = descriptor_to_json(*p.descriptor);
      break;
    case PlaceKind::Real:
      j["kind"] = "real";
      break;
    case PlaceKind::Complex:
      j["kind"] = "complex";
      break;
  }
  return j;
}

Place place_from_json(const json& j) {
  Place p;
  p.label = expect_string(j, "label");
  std::string kind = j.value("kind", "nonarch");
  if (kind == "nonarch") {
    p.kind = PlaceKind::NonArchimedean;
    p.descriptor = descriptor_from_json(expect(j, "descriptor"));
  } else if (kind == "real") {
    p.kind = PlaceKind::Real;
  } else if (kind == "complex") {
    p.kind = PlaceKind::Complex;
  } else {
    fail(Errc::MalformedInput, "unknown place kind: " + kind);
  }
  p.validate();
  return p;
}

json model_to_json(const FieldModel& m) {
  json j;
  j["kind"] = m.kind == FieldModel::Kind::Local ? "local" : "global";
  json places = json::array();
  for (const auto& p : m.places) places.push_back(place_to_json(p));
  j["places"] = places;
  return j;
}

FieldModel model_from_json(const json& j) {
  FieldModel m;
  std::string kind = j.value("kind", "global");
  if (kind == "local") {
    m.kind = FieldModel::Kind::Local;
  } else if (kind == "global") {
    m.kind = FieldModel::Kind::Global;
  } else {
    fail(Errc::MalformedInput, "unknown field model kind: " + kind);
  }
  for (const auto& p : expect(j, "places")) {
    m.places.push_back(place_from_json(p));
  }
  m.validate();
  return m;
}

json class_to_json(const GlobalBrauerClass& c) {
  json j;
  j["kind"] =
      c.model().kind == FieldModel::Kind::Local ? "local" : "global";
  json places = json::array();
  for (const auto& p : c.model().places) places.push_back(place_to_json(p));
  j["places"] = places;
  json inv = json::object();
  for (const auto& [label, value] : c.support()) inv[label] = value.str();
  j["invariants"] = inv;
  return j;
}

GlobalBrauerClass class_from_json(const json& j) {
  FieldModel m;
  std::string kind = j.value("kind", "global");
  if (kind == "local") {
    m.kind = FieldModel::Kind::Local;
  } else if (kind == "global") {
    m.kind = FieldModel::Kind::Global;
  } else {
    fail(Errc::MalformedInput, "unknown field model kind: " + kind);
  }
  for (const auto& p : expect(j, "places")) {
    m.places.push_back(place_from_json(p));
  }
  std::map<std::string, QZInvariant> inv;
  for (const auto& [label, value] : expect(j, "invariants").items()) {
    if (!value.is_string()) {
      fail(Errc::MalformedInput, "invariants must be \"num/den\" strings");
    }
    inv[label] = QZInvariant::parse(value.get<std::string>());
  }
  return GlobalBrauerClass::validate_class(std::move(m), inv);
}

json extension_to_json(const FormalExtension& e) {
  json j;
  j["degree"] = int_to_json(e.degree);
  json data = json::object();
  json labels = json::object();
  bool any_label = false;
  for (const auto& [label, parts] : e.local_data) {
    json degs = json::array();
    json labs = json::array();
    for (const auto& part : parts) {
      degs.push_back(int_to_json(part.degree));
      labs.push_back(part.label);
      if (!part.label.empty()) any_label = true;
    }
    data[label] = degs;
    labels[label] = labs;
  }
  j["local_data"] = data;
  if (any_label) j["local_labels"] = labels;
  if (e.distinguishing_place) j["distinguishing_place"] = *e.distinguishing_place;
  return j;
}

FormalExtension extension_from_json(const json& j) {
  FormalExtension e;
  e.degree = int_from_json(expect(j, "degree"), "degree");
  for (const auto& [label, degs] : expect(j, "local_data").items()) {
    std::vector<ExtensionPart> parts;
    if (!degs.is_array()) {
      fail(Errc::MalformedInput, "local_data values must be arrays");
    }
    for (const auto& d : degs) {
      parts.push_back({int_from_json(d, "local degree"), ""});
    }
    e.local_data[label] = std::move(parts);
  }
  if (j.contains("local_labels")) {
    for (const auto& [label, labs] : j.at("local_labels").items()) {
      auto it = e.local_data.find(label);
      if (it == e.local_data.end() || !labs.is_array() ||
          labs.size() != it->second.size()) {
        fail(Errc::MalformedInput, "local_labels must match local_data");
      }
      for (size_t i = 0; i < it->second.size(); ++i) {
        it->second[i].label = labs[i].get<std::string>();
      }
    }
  }
  if (j.contains("distinguishing_place")) {
    e.distinguishing_place = j.at("distinguishing_place").get<std::string>();
  }
  return e;
}

json algebra_to_json(const AlgebraDescriptor& a) {
  json j;
  switch (a.kind) {
    case BaseKind::Abstract: j["kind"] = "abstract"; break;
    case BaseKind::Local: j["kind"] = "local"; break;
    case BaseKind::Global: j["kind"] = "global"; break;
  }
  j["degree"] = int_to_json(a.degree);
  j["index"] = int_to_json(a.index);
  j["exponent"] = int_to_json(a.exponent);
  if (a.char_divides_index) j["char_divides_index"] = *a.char_divides_index;
  if (a.local_data) j["brauer_data"] = a.local_data->invariant.str();
  if (a.global_data) j["brauer_data"] = class_to_json(*a.global_data);
  return j;
}

AlgebraDescriptor algebra_from_json(const json& j) {
  std::string kind = expect_string(j, "kind");
  std::optional<Int> degree;
  if (j.contains("degree")) degree = int_from_json(j.at("degree"), "degree");
  if (kind == "abstract") {
    Int index = int_from_json(expect(j, "index"), "index");
    Int exponent = j.contains("exponent")
                       ? int_from_json(j.at("exponent"), "exponent")
                       : index;
    std::optional<bool> flag;
    if (j.contains("char_divides_index")) {
      flag = j.at("char_divides_index").get<bool>();
    }
    return AlgebraDescriptor::abstract_algebra(index, exponent, degree, flag);
  }
  if (kind == "local") {
    const json& data = expect(j, "brauer_data");
    if (!data.is_string()) {
      fail(Errc::MalformedInput, "local brauer_data is an invariant string");
    }
    return AlgebraDescriptor::local_algebra(
        LocalBrauerClass{QZInvariant::parse(data.get<std::string>())}, degree);
  }
  if (kind == "global") {
    return AlgebraDescriptor::global_algebra(
        class_from_json(expect(j, "brauer_data")), degree);
  }
  fail(Errc::MalformedInput, "unknown algebra kind: " + kind);
}

json lemma_certificate_to_json(const LemmaCertificate& c) {
  json j;
  j["p"] = int_to_json(c.p);
  j["m"] = c.m;
  j["distinguishing_place"] = c.distinguishing_place;
  json choices = json::array();
  for (const auto& choice : c.choices) {
    json ch;
    ch["place"] = choice.place;
    json parts = json::array();
    for (const auto& d : choice.partition) parts.push_back(int_to_json(d));
    ch["partition"] = parts;
    ch["label"] = choice.label;
    ch["kind"] = choice.kind;
    choices.push_back(ch);
  }
  j["choices"] = choices;
  j["index_over_k"] = int_to_json(c.index_over_k);
  j["index_over_kl0"] = int_to_json(c.index_over_kl0);
  j["index_over_kl1"] = int_to_json(c.index_over_kl1);
  return j;
}

json node_to_json(const FieldNode& n) {
  json j;
  j["id"] = n.id;
  j["name"] = n.name;
  j["depth"] = n.depth;
  j["degree"] = int_to_json(n.degree_over_base);
  j["declared_index"] = int_to_json(n.declared_index);
  json parents = json::array();
  for (const auto& edge : n.parents) {
    json e;
    e["parent"] = edge.parent;
    e["rel"] = extension_to_json(edge.rel);
    parents.push_back(e);
  }
  j["parents"] = parents;
  j["ancestors"] = n.ancestors;
  return j;
}

FieldNode node_from_json(const json& j) {
  FieldNode n;
  n.id = expect(j, "id").get<int>();
  n.name = expect_string(j, "name");
  n.depth = expect(j, "depth").get<unsigned>();
  n.degree_over_base = int_from_json(expect(j, "degree"), "degree");
  n.declared_index =
      int_from_json(expect(j, "declared_index"), "declared_index");
  for (const auto& e : expect(j, "parents")) {
    ChainEdge edge;
    edge.parent = expect(e, "parent").get<int>();
    edge.rel = extension_from_json(expect(e, "rel"));
    n.parents.push_back(std::move(edge));
  }
  for (const auto& a : expect(j, "ancestors")) {
    n.ancestors.push_back(a.get<int>());
  }
  return n;
}

json chain_to_json(const ChainProblem& problem,
                   const std::vector<FieldNode>& registry,
                   const EquivChain& chain) {
  json j;
  j["schema_version"] = kSchemaVersion;
  json prob;
  prob["algebra"] = algebra_to_json(problem.algebra);
  prob["p"] = int_to_json(problem.p);
  prob["m"] = problem.m;
  prob["k"] = problem.k;
  j["problem"] = prob;
  j["nodes"] = chain.nodes;
  json certs = json::array();
  for (const auto& c : chain.certificates) {
    json cj;
    cj["left"] = c.left;
    cj["right"] = c.right;
    cj["common_subfield"] = c.common_subfield;
    cj["interpolation"] = {{"left_generator", c.left_generator},
                           {"right_generator", c.right_generator}};
    cj["witness"] = c.witness;
    cj["membership_bound"] = int_to_json(c.membership_bound);
    certs.push_back(cj);
  }
  j["certificates"] = certs;
  json trace = json::array();
  for (const auto& [parent, child] : chain.recursion_trace) {
    trace.push_back({parent, child});
  }
  j["recursion_trace"] = trace;
  json reg = json::array();
  for (const auto& n : registry) reg.push_back(node_to_json(n));
  j["registry"] = reg;
  return j;
}

ChainRecord chain_from_json(const json& j) {
  ChainRecord out;
  const json& prob = expect(j, "problem");
  out.problem.algebra = algebra_from_json(expect(prob, "algebra"));
  out.problem.p = int_from_json(expect(prob, "p"), "p");
  out.problem.m = expect(prob, "m").get<unsigned>();
  out.problem.k = expect(prob, "k").get<unsigned>();
  for (const auto& id : expect(j, "nodes")) {
    out.chain.nodes.push_back(id.get<int>());
  }
  for (const auto& cj : expect(j, "certificates")) {
    SimpleEquivCertificate c;
    c.left = expect(cj, "left").get<int>();
    c.right = expect(cj, "right").get<int>();
    c.common_subfield = expect(cj, "common_subfield").get<int>();
    const json& interp = expect(cj, "interpolation");
    c.left_generator = expect_string(interp, "left_generator");
    c.right_generator = expect_string(interp, "right_generator");
    c.witness = expect(cj, "witness").get<int>();
    c.membership_bound =
        int_from_json(expect(cj, "membership_bound"), "membership_bound");
    out.chain.certificates.push_back(std::move(c));
  }
  if (j.contains("recursion_trace")) {
    for (const auto& t : j.at("recursion_trace")) {
      out.chain.recursion_trace.push_back(
          {t.at(0).get<unsigned>(), t.at(1).get<unsigned>()});
    }
  }
  std::vector<FieldNode> registry;
  for (const auto& nj : expect(j, "registry")) {
    registry.push_back(node_from_json(nj));
  }
  // Ids must match positions; the validators index by id.
  for (size_t i = 0; i < registry.size(); ++i) {
    if (registry[i].id != static_cast<int>(i)) {
      fail(Errc::MalformedInput, "registry ids must be dense and ordered");
    }
  }
  out.registry = std::move(registry);
  return out;
}

oracle::EnumerationBudget budget_from_json(const json& j) {
  oracle::EnumerationBudget b;
  if (j.contains("max_places")) b.max_places = j.at("max_places").get<int>();
  if (j.contains("max_denominator")) {
    b.max_denominator = j.at("max_denominator").get<int>();
  }
  if (j.contains("max_degree")) b.max_degree = j.at("max_degree").get<int>();
  if (j.contains("max_index")) {
    b.max_index = int_from_json(j.at("max_index"), "max_index");
  }
  if (b.max_places < 1 || b.max_denominator < 1 || b.max_degree < 1 ||
      b.max_index < 1) {
    fail(Errc::MalformedInput, "budget fields must be positive");
  }
  return b;
}

json budget_to_json(const oracle::EnumerationBudget& b) {
  json j;
  j["max_places"] = b.max_places;
  j["max_denominator"] = b.max_denominator;
  j["max_degree"] = b.max_degree;
  j["max_index"] = int_to_json(b.max_index);
  return j;
}

}  // namespace sbflag::io
