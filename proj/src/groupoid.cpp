#include "gqm/groupoid.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>
#include <sstream>

namespace gqm {

namespace {

std::string describe(const FiniteGroupoid& g, TransitionId t) {
  const auto& tr = g.transition(t);
  std::ostringstream os;
  os << "#" << t.index << " '" << tr.label << "' (" << tr.source.index << "->" << tr.target.index << ")";
  return os.str();
}

// Pair groupoid over the events of each block, times Z_m. block[a] names the
// component of a; pairs in different blocks are not transitions.
GroupoidPtr build_blocked_product(std::size_t n, std::size_t m, const std::vector<std::size_t>& block,
                                  bool product_labels, GroupoidSpec spec) {
  GroupoidTables t;
  t.events.reserve(n);
  for (std::size_t a = 0; a < n; ++a) t.events.push_back(std::to_string(a));

  // id[(target * n + source) * m + g]
  constexpr std::size_t kNone = static_cast<std::size_t>(-1);
  std::vector<std::size_t> id(n * n * m, kNone);
  auto key = [&](std::size_t target, std::size_t source, std::size_t g) { return (target * n + source) * m + g; };
  auto label = [&](std::size_t target, std::size_t source, std::size_t g) {
    std::string s = "(" + std::to_string(target) + "," + std::to_string(source);
    if (product_labels) s += ";" + std::to_string(g);
    return s + ")";
  };
  auto push = [&](std::size_t target, std::size_t source, std::size_t g) {
    id[key(target, source, g)] = t.transitions.size();
    t.transitions.push_back({EventId{source}, EventId{target}, label(target, source, g)});
  };

  for (std::size_t a = 0; a < n; ++a) push(a, a, 0);
  for (std::size_t s = 0; s < n; ++s) {
    for (std::size_t a = 0; a < n; ++a) {
      if (block[a] != block[s]) continue;
      for (std::size_t g = 0; g < m; ++g) {
        if (a == s && g == 0) continue;
        push(a, s, g);
      }
    }
  }

  t.units.reserve(n);
  for (std::size_t a = 0; a < n; ++a) t.units.emplace_back(id[key(a, a, 0)]);

  // group element of each transition
  std::vector<std::size_t> element(t.transitions.size(), 0);
  for (std::size_t k = 0; k < id.size(); ++k)
    if (id[k] != kNone) element[id[k]] = k % m;

  t.inverse.resize(t.transitions.size());
  for (std::size_t i = 0; i < t.transitions.size(); ++i) {
    const auto& tr = t.transitions[i];
    t.inverse[i] = TransitionId{id[key(tr.source.index, tr.target.index, (m - element[i]) % m)]};
  }

  for (std::size_t left = 0; left < t.transitions.size(); ++left) {
    const auto& l = t.transitions[left];
    const std::size_t mid = l.source.index;
    for (std::size_t c = 0; c < n; ++c) {
      if (block[c] != block[mid]) continue;
      for (std::size_t h = 0; h < m; ++h) {
        const std::size_t right = id[key(mid, c, h)];
        const std::size_t result = id[key(l.target.index, c, (element[left] + h) % m)];
        t.compose.push_back({TransitionId{left}, TransitionId{right}, TransitionId{result}});
      }
    }
  }
  return FiniteGroupoid::from_tables(std::move(t), std::move(spec));
}

}  // namespace

GroupoidPtr FiniteGroupoid::from_tables(GroupoidTables tables, GroupoidSpec origin) {
  const std::size_t ne = tables.events.size();
  const std::size_t nt = tables.transitions.size();
  if (ne == 0) throw InvalidSpecError("groupoid has no events");
  for (std::size_t i = 0; i < nt; ++i) {
    const auto& tr = tables.transitions[i];
    if (tr.source.index >= ne || tr.target.index >= ne)
      throw InvalidSpecError("transition " + std::to_string(i) + " has an endpoint outside the event list");
  }
  if (tables.units.size() != ne) throw InvalidSpecError("unit table must have one entry per event");
  for (auto u : tables.units)
    if (u.index >= nt) throw InvalidSpecError("unit table references transition " + std::to_string(u.index));
  if (tables.inverse.size() != nt) throw InvalidSpecError("inverse table must have one entry per transition");
  for (auto v : tables.inverse)
    if (v.index >= nt) throw InvalidSpecError("inverse table references transition " + std::to_string(v.index));
  for (const auto& e : tables.compose)
    if (e.left.index >= nt || e.right.index >= nt || e.result.index >= nt)
      throw InvalidSpecError("compose table references a transition outside the list");

  std::sort(tables.compose.begin(), tables.compose.end(), [](const ComposeEntry& x, const ComposeEntry& y) {
    return std::tie(x.left, x.right) < std::tie(y.left, y.right);
  });
  for (std::size_t i = 1; i < tables.compose.size(); ++i) {
    const auto& x = tables.compose[i - 1];
    const auto& y = tables.compose[i];
    if (x.left == y.left && x.right == y.right)
      throw InvalidSpecError("compose table lists (" + std::to_string(x.left.index) + "," +
                             std::to_string(x.right.index) + ") twice");
  }

  std::shared_ptr<FiniteGroupoid> g(new FiniteGroupoid());
  g->row_offsets_.assign(nt + 1, 0);
  for (const auto& e : tables.compose) ++g->row_offsets_[e.left.index + 1];
  std::partial_sum(g->row_offsets_.begin(), g->row_offsets_.end(), g->row_offsets_.begin());

  g->between_.assign(ne * ne, {});
  for (std::size_t i = 0; i < nt; ++i) {
    const auto& tr = tables.transitions[i];
    g->between_[tr.source.index * ne + tr.target.index].emplace_back(i);
  }
  g->principal_ = std::all_of(g->between_.begin(), g->between_.end(), [](const auto& v) { return v.size() <= 1; });

  g->tables_ = std::move(tables);
  g->spec_ = std::move(origin);
  return g;
}

const std::string& FiniteGroupoid::event_label(EventId a) const {
  check_event(a);
  return tables_.events[a.index];
}

const Transition& FiniteGroupoid::transition(TransitionId t) const {
  check_transition(t);
  return tables_.transitions[t.index];
}

TransitionId FiniteGroupoid::unit_of(EventId a) const {
  check_event(a);
  return tables_.units[a.index];
}

TransitionId FiniteGroupoid::inverse_of(TransitionId t) const {
  check_transition(t);
  return tables_.inverse[t.index];
}

bool FiniteGroupoid::is_unit(TransitionId t) const {
  const auto& tr = transition(t);
  return tr.source == tr.target && tables_.units[tr.source.index] == t;
}

std::optional<TransitionId> FiniteGroupoid::compose(TransitionId beta, TransitionId alpha) const {
  check_transition(beta);
  check_transition(alpha);
  const auto first = tables_.compose.begin() + static_cast<std::ptrdiff_t>(row_offsets_[beta.index]);
  const auto last = tables_.compose.begin() + static_cast<std::ptrdiff_t>(row_offsets_[beta.index + 1]);
  const auto it =
      std::lower_bound(first, last, alpha, [](const ComposeEntry& e, TransitionId a) { return e.right < a; });
  if (it == last || it->right != alpha) return std::nullopt;
  return it->result;
}

std::span<const TransitionId> FiniteGroupoid::between(EventId a, EventId a_prime) const {
  check_event(a);
  check_event(a_prime);
  return between_[a.index * event_count() + a_prime.index];
}

TransitionId FiniteGroupoid::find(std::string_view label) const {
  for (std::size_t i = 0; i < tables_.transitions.size(); ++i)
    if (tables_.transitions[i].label == label) return TransitionId{i};
  throw RangeError("no transition labelled '" + std::string(label) + "'");
}

void FiniteGroupoid::check_event(EventId a) const {
  if (a.index >= event_count())
    throw RangeError("event " + std::to_string(a.index) + " out of range (" + std::to_string(event_count()) +
                     " events)");
}

void FiniteGroupoid::check_transition(TransitionId t) const {
  if (t.index >= transition_count())
    throw RangeError("transition " + std::to_string(t.index) + " out of range (" +
                     std::to_string(transition_count()) + " transitions)");
}

GroupoidPtr build_pair_groupoid(std::size_t n) {
  if (n == 0) throw InvalidSpecError("pair groupoid needs n >= 1");
  GroupoidSpec spec;
  spec.kind = GroupoidKind::pair;
  spec.n = n;
  return build_blocked_product(n, 1, std::vector<std::size_t>(n, 0), false, std::move(spec));
}

GroupoidPtr build_from_graph(std::size_t n, const std::vector<std::pair<std::size_t, std::size_t>>& edges) {
  if (n == 0) throw InvalidSpecError("graph groupoid needs n >= 1");
  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  std::function<std::size_t(std::size_t)> root = [&](std::size_t x) {
    return parent[x] == x ? x : parent[x] = root(parent[x]);
  };
  for (const auto& [u, v] : edges) {
    if (u >= n || v >= n)
      throw InvalidSpecError("edge (" + std::to_string(u) + "," + std::to_string(v) + ") has an endpoint outside 0.." +
                             std::to_string(n - 1));
    parent[root(u)] = root(v);
  }
  std::vector<std::size_t> block(n);
  for (std::size_t a = 0; a < n; ++a) block[a] = root(a);

  GroupoidSpec spec;
  spec.kind = GroupoidKind::graph;
  spec.n = n;
  spec.edges = edges;
  return build_blocked_product(n, 1, block, false, std::move(spec));
}

GroupoidPtr build_pair_times_group(std::size_t n, std::size_t m) {
  if (n == 0 || m == 0) throw InvalidSpecError("pair_times_group needs n >= 1 and m >= 1");
  GroupoidSpec spec;
  spec.kind = GroupoidKind::pair_times_group;
  spec.n = n;
  spec.m = m;
  return build_blocked_product(n, m, std::vector<std::size_t>(n, 0), true, std::move(spec));
}

GroupoidPtr build(const GroupoidSpec& spec) {
  switch (spec.kind) {
    case GroupoidKind::pair:
      return build_pair_groupoid(spec.n);
    case GroupoidKind::graph:
      return build_from_graph(spec.n, spec.edges);
    case GroupoidKind::pair_times_group:
      return build_pair_times_group(spec.n, spec.m);
    case GroupoidKind::explicit_tables:
      return FiniteGroupoid::from_tables(spec.tables, spec);
  }
  throw InvalidSpecError("unknown groupoid kind");
}

ValidationReport validate(const FiniteGroupoid& g) {
  ValidationReport report;
  auto add = [&](Violation::Kind kind, std::vector<TransitionId> ts, std::string msg) {
    report.violations.push_back({kind, std::move(ts), std::move(msg)});
  };
  const std::size_t nt = g.transition_count();
  const std::size_t ne = g.event_count();

  // Composability and typing of every listed entry.
  for (const auto& e : g.compose_entries()) {
    if (g.source(e.left) != g.target(e.right)) {
      add(Violation::Kind::composability, {e.left, e.right, e.result},
          "composition defined for non-composable pair " + describe(g, e.left) + " o " + describe(g, e.right));
      continue;
    }
    if (g.source(e.result) != g.source(e.right) || g.target(e.result) != g.target(e.left))
      add(Violation::Kind::typing, {e.left, e.right, e.result},
          describe(g, e.left) + " o " + describe(g, e.right) + " = " + describe(g, e.result) + " has wrong endpoints");
  }

  // Every composable pair must be defined.
  std::vector<std::size_t> in_degree(ne, 0);
  for (std::size_t i = 0; i < nt; ++i) ++in_degree[g.target(TransitionId{i}).index];
  std::vector<std::size_t> defined(nt, 0);
  for (const auto& e : g.compose_entries())
    if (g.source(e.left) == g.target(e.right)) ++defined[e.left.index];
  for (std::size_t b = 0; b < nt; ++b) {
    const TransitionId beta{b};
    if (defined[b] == in_degree[g.source(beta).index]) continue;
    for (std::size_t a = 0; a < nt; ++a) {
      const TransitionId alpha{a};
      if (g.source(beta) == g.target(alpha) && !g.compose(beta, alpha))
        add(Violation::Kind::composability, {beta, alpha},
            "composable pair " + describe(g, beta) + " o " + describe(g, alpha) + " has no composition");
    }
  }

  // Associativity on every defined triple.
  for (const auto& e : g.compose_entries()) {
    if (g.source(e.left) != g.target(e.right)) continue;
    for (std::size_t c = 0; c < nt; ++c) {
      const TransitionId gamma{c};
      if (g.source(gamma) != g.target(e.left)) continue;
      const auto lhs = g.compose(gamma, e.result);
      const auto gb = g.compose(gamma, e.left);
      const auto rhs = gb ? g.compose(*gb, e.right) : std::nullopt;
      if (lhs && rhs && *lhs == *rhs) continue;
      if (!lhs || !gb || !rhs) continue;  // already reported as missing
      add(Violation::Kind::associativity, {gamma, e.left, e.right},
          "associativity fails for " + describe(g, gamma) + ", " + describe(g, e.left) + ", " + describe(g, e.right));
    }
  }

  for (std::size_t a = 0; a < ne; ++a) {
    const TransitionId u = g.unit_of(EventId{a});
    if (g.source(u).index != a || g.target(u).index != a)
      add(Violation::Kind::unit, {u}, "unit of event " + std::to_string(a) + " is " + describe(g, u));
  }
  for (std::size_t i = 0; i < nt; ++i) {
    const TransitionId alpha{i};
    const auto right = g.compose(alpha, g.unit_of(g.source(alpha)));
    const auto left = g.compose(g.unit_of(g.target(alpha)), alpha);
    if (!right || *right != alpha || !left || *left != alpha)
      add(Violation::Kind::unit, {alpha}, "units do not act trivially on " + describe(g, alpha));

    const TransitionId inv = g.inverse_of(alpha);
    if (g.source(inv) != g.target(alpha) || g.target(inv) != g.source(alpha)) {
      add(Violation::Kind::inverse, {alpha, inv}, "inverse of " + describe(g, alpha) + " has wrong endpoints");
      continue;
    }
    const auto ai = g.compose(alpha, inv);
    const auto ia = g.compose(inv, alpha);
    if (!ai || *ai != g.unit_of(g.target(alpha)) || !ia || *ia != g.unit_of(g.source(alpha)))
      add(Violation::Kind::inverse, {alpha, inv}, "inverse law fails for " + describe(g, alpha));
  }
  return report;
}

std::vector<TransitionId> isotropy_group(const FiniteGroupoid& g, EventId a) {
  const auto s = g.between(a, a);
  return {s.begin(), s.end()};
}

Sprays sprays(const FiniteGroupoid& g, EventId a) {
  g.check_event(a);
  Sprays out;
  for (std::size_t i = 0; i < g.transition_count(); ++i) {
    const TransitionId t{i};
    if (g.source(t) == a) out.g_plus.push_back(t);
    if (g.target(t) == a) out.g_minus.push_back(t);
  }
  return out;
}

std::vector<EventId> orbit(const FiniteGroupoid& g, EventId a) {
  g.check_event(a);
  std::set<EventId> reached;
  for (std::size_t b = 0; b < g.event_count(); ++b)
    if (!g.between(a, EventId{b}).empty()) reached.insert(EventId{b});
  reached.insert(a);
  return {reached.begin(), reached.end()};
}

std::vector<std::vector<EventId>> connected_components(const FiniteGroupoid& g) {
  std::vector<std::vector<EventId>> out;
  std::vector<bool> seen(g.event_count(), false);
  for (std::size_t a = 0; a < g.event_count(); ++a) {
    if (seen[a]) continue;
    auto o = orbit(g, EventId{a});
    for (auto e : o) seen[e.index] = true;
    out.push_back(std::move(o));
  }
  return out;
}

bool is_connected(const FiniteGroupoid& g) { return connected_components(g).size() == 1; }

bool structurally_equal(const FiniteGroupoid& lhs, const FiniteGroupoid& rhs) {
  const auto& a = lhs.tables();
  const auto& b = rhs.tables();
  if (a.events.size() != b.events.size() || a.transitions.size() != b.transitions.size()) return false;
  for (std::size_t i = 0; i < a.transitions.size(); ++i)
    if (a.transitions[i].source != b.transitions[i].source || a.transitions[i].target != b.transitions[i].target)
      return false;
  if (a.units != b.units || a.inverse != b.inverse || a.compose.size() != b.compose.size()) return false;
  for (std::size_t i = 0; i < a.compose.size(); ++i)
    if (a.compose[i].left != b.compose[i].left || a.compose[i].right != b.compose[i].right ||
        a.compose[i].result != b.compose[i].result)
      return false;
  return true;
}

const char* to_string(Violation::Kind kind) {
  switch (kind) {
    case Violation::Kind::composability:
      return "composability";
    case Violation::Kind::typing:
      return "typing";
    case Violation::Kind::associativity:
      return "associativity";
    case Violation::Kind::unit:
      return "unit";
    case Violation::Kind::inverse:
      return "inverse";
  }
  return "unknown";
}

const char* to_string(GroupoidKind kind) {
  switch (kind) {
    case GroupoidKind::pair:
      return "pair";
    case GroupoidKind::graph:
      return "graph";
    case GroupoidKind::pair_times_group:
      return "pair_times_group";
    case GroupoidKind::explicit_tables:
      return "explicit";
  }
  return "unknown";
}

}  // namespace gqm
