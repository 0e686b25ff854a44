#include <algorithm>
#include <initializer_list>

#include "gqm/io.hpp"

namespace gqm::io {

namespace {

class Reader {
 public:
  explicit Reader(std::string source) : source_(std::move(source)) {}

  [[noreturn]] void fail(const std::string& path, const std::string& message) const {
    throw InvalidSpecError(source_ + ": " + (path.empty() ? "/" : path) + ": " + message);
  }

  const Json& object(const Json& j, const std::string& path, std::initializer_list<const char*> allowed) const {
    if (!j.is_object()) fail(path, "expected an object");
    for (const auto& [key, value] : j.items()) {
      if (std::none_of(allowed.begin(), allowed.end(), [&](const char* k) { return key == k; }))
        fail(path + "/" + key, "unknown field");
    }
    return j;
  }

  const Json& field(const Json& j, const char* key, const std::string& path) const {
    const auto it = j.find(key);
    if (it == j.end()) fail(path + "/" + key, "missing required field");
    return *it;
  }

  const Json& array(const Json& j, const std::string& path) const {
    if (!j.is_array()) fail(path, "expected an array");
    return j;
  }

  std::size_t index(const Json& j, const std::string& path) const {
    if (!j.is_number_integer() || j.get<long long>() < 0) fail(path, "expected a nonnegative integer");
    return j.get<std::size_t>();
  }

  std::string string(const Json& j, const std::string& path) const {
    if (!j.is_string()) fail(path, "expected a string");
    return j.get<std::string>();
  }

  double number(const Json& j, const std::string& path) const {
    if (!j.is_number()) fail(path, "expected a number");
    return j.get<double>();
  }

  Complex complex(const Json& j, const std::string& path) const {
    if (!j.is_array() || j.size() != 2) fail(path, "expected [re, im]");
    return {number(j[0], path + "/0"), number(j[1], path + "/1")};
  }

  ComplexVector complex_vector(const Json& j, const std::string& path) const {
    array(j, path);
    ComplexVector v(static_cast<Eigen::Index>(j.size()));
    for (std::size_t i = 0; i < j.size(); ++i)
      v[static_cast<Eigen::Index>(i)] = complex(j[i], path + "/" + std::to_string(i));
    return v;
  }

  const std::string& source() const { return source_; }

 private:
  std::string source_;
};

std::string at(const std::string& path, std::size_t i) { return path + "/" + std::to_string(i); }

GroupoidTables tables_from_json(const Reader& r, const Json& j, const std::string& path) {
  r.object(j, path, {"events", "transitions", "units", "inverse", "compose"});
  GroupoidTables t;

  const auto& events = r.array(r.field(j, "events", path), path + "/events");
  for (std::size_t i = 0; i < events.size(); ++i) t.events.push_back(r.string(events[i], at(path + "/events", i)));

  const std::string tp = path + "/transitions";
  const auto& transitions = r.array(r.field(j, "transitions", path), tp);
  for (std::size_t i = 0; i < transitions.size(); ++i) {
    const auto& x = r.object(transitions[i], at(tp, i), {"source", "target", "label"});
    Transition tr;
    tr.source = EventId{r.index(r.field(x, "source", at(tp, i)), at(tp, i) + "/source")};
    tr.target = EventId{r.index(r.field(x, "target", at(tp, i)), at(tp, i) + "/target")};
    if (x.contains("label")) tr.label = r.string(x["label"], at(tp, i) + "/label");
    t.transitions.push_back(std::move(tr));
  }

  const auto& units = r.array(r.field(j, "units", path), path + "/units");
  if (units.size() != t.events.size()) r.fail(path + "/units", "expected one unit per event");
  for (std::size_t i = 0; i < units.size(); ++i) t.units.emplace_back(r.index(units[i], at(path + "/units", i)));

  const auto& inverse = r.array(r.field(j, "inverse", path), path + "/inverse");
  if (inverse.size() != t.transitions.size()) r.fail(path + "/inverse", "expected one entry per transition");
  for (std::size_t i = 0; i < inverse.size(); ++i)
    t.inverse.emplace_back(r.index(inverse[i], at(path + "/inverse", i)));

  const std::string cp = path + "/compose";
  const auto& compose = r.array(r.field(j, "compose", path), cp);
  for (std::size_t i = 0; i < compose.size(); ++i) {
    const auto& e = compose[i];
    if (!e.is_array() || e.size() != 3) r.fail(at(cp, i), "expected [left, right, result]");
    t.compose.push_back({TransitionId{r.index(e[0], at(cp, i) + "/0")}, TransitionId{r.index(e[1], at(cp, i) + "/1")},
                         TransitionId{r.index(e[2], at(cp, i) + "/2")}});
  }
  return t;
}

Json tables_to_json(const GroupoidTables& t) {
  Json j = Json::object();
  j["events"] = t.events;
  Json trs = Json::array();
  for (const auto& tr : t.transitions)
    trs.push_back(Json{{"source", tr.source.index}, {"target", tr.target.index}, {"label", tr.label}});
  j["transitions"] = std::move(trs);
  Json units = Json::array();
  for (auto u : t.units) units.push_back(u.index);
  j["units"] = std::move(units);
  Json inv = Json::array();
  for (auto v : t.inverse) inv.push_back(v.index);
  j["inverse"] = std::move(inv);
  Json comp = Json::array();
  for (const auto& e : t.compose) comp.push_back(Json::array({e.left.index, e.right.index, e.result.index}));
  j["compose"] = std::move(comp);
  return j;
}

}  // namespace

Json to_json(const GroupoidSpec& spec) {
  Json j = Json::object();
  j["kind"] = to_string(spec.kind);
  switch (spec.kind) {
    case GroupoidKind::pair:
      j["n"] = spec.n;
      break;
    case GroupoidKind::graph: {
      j["n"] = spec.n;
      Json edges = Json::array();
      for (const auto& [u, v] : spec.edges) edges.push_back(Json::array({u, v}));
      j["edges"] = std::move(edges);
      break;
    }
    case GroupoidKind::pair_times_group:
      j["n"] = spec.n;
      j["m"] = spec.m;
      break;
    case GroupoidKind::explicit_tables:
      j["tables"] = tables_to_json(spec.tables);
      break;
  }
  return j;
}

GroupoidSpec spec_from_json(const Json& doc, const std::string& source) {
  const Reader r(source);
  r.object(doc, "", {"kind", "n", "edges", "m", "tables"});
  const std::string kind = r.string(r.field(doc, "kind", ""), "/kind");
  GroupoidSpec spec;
  auto reject = [&](std::initializer_list<const char*> keys) {
    for (const char* k : keys)
      if (doc.contains(k)) r.fail(std::string("/") + k, "not used by kind '" + kind + "'");
  };
  if (kind == "pair") {
    spec.kind = GroupoidKind::pair;
    spec.n = r.index(r.field(doc, "n", ""), "/n");
    reject({"edges", "m", "tables"});
  } else if (kind == "graph") {
    spec.kind = GroupoidKind::graph;
    spec.n = r.index(r.field(doc, "n", ""), "/n");
    const auto& edges = r.array(r.field(doc, "edges", ""), "/edges");
    for (std::size_t i = 0; i < edges.size(); ++i) {
      const auto& e = edges[i];
      if (!e.is_array() || e.size() != 2) r.fail(at("/edges", i), "expected [u, v]");
      spec.edges.emplace_back(r.index(e[0], at("/edges", i) + "/0"), r.index(e[1], at("/edges", i) + "/1"));
    }
    reject({"m", "tables"});
  } else if (kind == "pair_times_group") {
    spec.kind = GroupoidKind::pair_times_group;
    spec.n = r.index(r.field(doc, "n", ""), "/n");
    spec.m = r.index(r.field(doc, "m", ""), "/m");
    reject({"edges", "tables"});
  } else if (kind == "explicit") {
    spec.kind = GroupoidKind::explicit_tables;
    spec.tables = tables_from_json(r, r.field(doc, "tables", ""), "/tables");
    reject({"n", "edges", "m"});
  } else {
    r.fail("/kind", "unknown kind '" + kind + "' (expected pair, graph, pair_times_group or explicit)");
  }
  return spec;
}

GroupoidPtr load_groupoid(const std::string& path) {
  return build(spec_from_json(parse_json(read_file(path), path), path));
}

Json complex_to_json(Complex z) { return Json::array({z.real(), z.imag()}); }

Json to_json(const ComplexVector& v) {
  Json j = Json::array();
  for (const auto& z : v) j.push_back(complex_to_json(z));
  return j;
}

Json to_json(const Operator& m) {
  Json j = Json::array();
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (Eigen::Index c = 0; c < m.cols(); ++c) row.push_back(complex_to_json(m(r, c)));
    j.push_back(std::move(row));
  }
  return j;
}

Json to_json(const RealMatrix& m) {
  Json j = Json::array();
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (Eigen::Index c = 0; c < m.cols(); ++c) row.push_back(m(r, c));
    j.push_back(std::move(row));
  }
  return j;
}

Json to_json(const ValidationReport& report, const FiniteGroupoid& g) {
  Json v = Json::array();
  for (const auto& x : report.violations) {
    Json ts = Json::array();
    for (auto t : x.transitions) ts.push_back(t.index);
    v.push_back(Json{{"kind", to_string(x.kind)}, {"transitions", std::move(ts)}, {"message", x.message}});
  }
  return Json{{"ok", report.ok()},
              {"events", g.event_count()},
              {"transitions", g.transition_count()},
              {"violations", std::move(v)}};
}

Operator operator_from_json(const Json& doc, const std::string& source, const std::string& path) {
  const Reader r(source);
  r.array(doc, path);
  const auto rows = static_cast<Eigen::Index>(doc.size());
  Operator m(rows, rows);
  for (std::size_t i = 0; i < doc.size(); ++i) {
    const auto row = r.complex_vector(doc[i], at(path, i));
    if (row.size() != rows) r.fail(at(path, i), "expected a square matrix");
    m.row(static_cast<Eigen::Index>(i)) = row.transpose();
  }
  return m;
}

namespace {

std::pair<GroupoidPtr, ComplexVector> bound_coefficients(const Json& doc, const std::string& source,
                                                         const GroupoidPtr& bound) {
  const Reader r(source);
  r.object(doc, "", {"groupoid", "coeffs"});
  const auto& gj = r.field(doc, "groupoid", "");
  GroupoidPtr g;
  if (gj.is_string()) {
    if (!bound) r.fail("/groupoid", "refers to groupoid '" + gj.get<std::string>() + "' but no groupoid was supplied");
    g = bound;
  } else {
    g = build(spec_from_json(gj, source + " /groupoid"));
    if (bound) {
      if (!structurally_equal(*g, *bound)) throw BindingError(source + ": embedded groupoid differs from the supplied one");
      g = bound;
    }
  }
  ComplexVector c = r.complex_vector(r.field(doc, "coeffs", ""), "/coeffs");
  if (static_cast<std::size_t>(c.size()) != g->transition_count())
    r.fail("/coeffs", "has " + std::to_string(c.size()) + " entries but the groupoid has " +
                          std::to_string(g->transition_count()) + " transitions");
  return {g, std::move(c)};
}

}  // namespace

Json element_to_json(const AlgebraElement& f) {
  return Json{{"groupoid", to_json(f.groupoid()->spec())}, {"coeffs", to_json(f.coeffs())}};
}

Json element_to_json(const AlgebraElement& f, const std::string& groupoid_id) {
  return Json{{"groupoid", groupoid_id}, {"coeffs", to_json(f.coeffs())}};
}

AlgebraElement element_from_json(const Json& doc, const std::string& source, const GroupoidPtr& bound) {
  auto [g, c] = bound_coefficients(doc, source, bound);
  return {std::move(g), std::move(c)};
}

AlgebraElement load_element(const std::string& path, const GroupoidPtr& bound) {
  return element_from_json(parse_json(read_file(path), path), path, bound);
}

Json state_to_json(const State& rho) {
  return Json{{"groupoid", to_json(rho.groupoid()->spec())}, {"coeffs", to_json(rho.weights())}};
}

State state_from_json(const Json& doc, const std::string& source, const GroupoidPtr& bound) {
  auto [g, c] = bound_coefficients(doc, source, bound);
  return {std::move(g), std::move(c)};
}

}  // namespace gqm::io
