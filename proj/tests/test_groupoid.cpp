#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <set>

#include "gqm/groupoid.hpp"
#include "gqm/models.hpp"
#include "support.hpp"

namespace gqm {
namespace {

using testing::make_rng;

TransitionId pair_t(const FiniteGroupoid& g, std::size_t target, std::size_t source) {
  return g.between(EventId{source}, EventId{target}).front();
}

// Components by breadth-first search over the raw edge list.
std::vector<std::set<std::size_t>> components_oracle(std::size_t n,
                                                     const std::vector<std::pair<std::size_t, std::size_t>>& edges) {
  std::vector<int> comp(n, -1);
  std::vector<std::set<std::size_t>> out;
  for (std::size_t s = 0; s < n; ++s) {
    if (comp[s] >= 0) continue;
    std::set<std::size_t> c{s};
    std::vector<std::size_t> stack{s};
    comp[s] = static_cast<int>(out.size());
    while (!stack.empty()) {
      const auto x = stack.back();
      stack.pop_back();
      for (const auto& [u, v] : edges) {
        for (auto [p, q] : {std::pair{u, v}, std::pair{v, u}}) {
          if (p == x && comp[q] < 0) {
            comp[q] = comp[s];
            c.insert(q);
            stack.push_back(q);
          }
        }
      }
    }
    out.push_back(c);
  }
  return out;
}

TEST(PairGroupoid, CountsAndUnits) {
  for (std::size_t n : {1u, 2u, 4u, 7u}) {
    const auto g = build_pair_groupoid(n);
    EXPECT_EQ(g->event_count(), n);
    EXPECT_EQ(g->transition_count(), n * n);
    for (std::size_t a = 0; a < n; ++a) {
      EXPECT_EQ(g->unit_of(EventId{a}), TransitionId{a}) << "units come first";
      EXPECT_TRUE(g->is_unit(TransitionId{a}));
    }
    EXPECT_TRUE(g->is_principal());
  }
}

TEST(PairGroupoid, TrivialGroupoid) {
  const auto g = build_pair_groupoid(1);
  EXPECT_EQ(g->transition_count(), 1u);
  EXPECT_EQ(isotropy_group(*g, EventId{0}), std::vector<TransitionId>{TransitionId{0}});
  EXPECT_TRUE(validate(*g).ok());
}

TEST(PairGroupoid, ZeroEventsRejected) { EXPECT_THROW(build_pair_groupoid(0), InvalidSpecError); }

TEST(PairGroupoid, RitzRydbergComposition) {
  const auto g = build_pair_groupoid(4);
  const auto r = g->compose(pair_t(*g, 3, 2), pair_t(*g, 2, 0));
  ASSERT_TRUE(r.has_value());
  EXPECT_EQ(*r, pair_t(*g, 3, 0));
  EXPECT_EQ(g->transition(*r).label, "(3,0)");
}

TEST(PairGroupoid, InverseSwapsEndpoints) {
  const auto g = build_pair_groupoid(5);
  for (std::size_t i = 0; i < g->transition_count(); ++i) {
    const TransitionId t{i};
    const auto inv = g->inverse_of(t);
    EXPECT_EQ(g->source(inv), g->target(t));
    EXPECT_EQ(g->target(inv), g->source(t));
    EXPECT_EQ(g->inverse_of(inv), t);
  }
}

TEST(PairGroupoid, NonComposablePairIsUndefined) {
  const auto g = build_pair_groupoid(3);
  EXPECT_FALSE(g->compose(pair_t(*g, 2, 1), pair_t(*g, 0, 2)).has_value());
}

TEST(Compose, QubitInverseLaw) {
  using namespace qubit_ids;
  const auto q = qubit();
  EXPECT_EQ(q->compose(alpha_inv, alpha), unit_plus);
  EXPECT_EQ(q->compose(alpha, alpha_inv), unit_minus);
  EXPECT_EQ(q->compose(unit_plus, unit_plus), unit_plus);
  EXPECT_FALSE(q->compose(alpha, alpha).has_value());
}

TEST(Compose, DefinedExactlyWhenComposable) {
  auto rng = make_rng(11);
  for (int trial = 0; trial < 30; ++trial) {
    const auto g = testing::random_groupoid(rng);
    for (std::size_t b = 0; b < g->transition_count(); ++b) {
      for (std::size_t a = 0; a < g->transition_count(); ++a) {
        const TransitionId beta{b};
        const TransitionId alpha{a};
        const auto r = g->compose(beta, alpha);
        ASSERT_EQ(r.has_value(), g->source(beta) == g->target(alpha));
        if (r) {
          EXPECT_EQ(g->source(*r), g->source(alpha));
          EXPECT_EQ(g->target(*r), g->target(beta));
        }
      }
    }
  }
}

TEST(Graph, SingleEdgePlusIsolatedEvent) {
  const auto g = build_from_graph(3, {{0, 1}});
  EXPECT_EQ(g->transition_count(), 5u);
  EXPECT_EQ(orbit(*g, EventId{0}), (std::vector<EventId>{EventId{0}, EventId{1}}));
  EXPECT_EQ(orbit(*g, EventId{2}), (std::vector<EventId>{EventId{2}}));
  const auto sp = sprays(*g, EventId{2});
  EXPECT_EQ(sp.g_plus, std::vector<TransitionId>{g->unit_of(EventId{2})});
  EXPECT_EQ(sp.g_minus, std::vector<TransitionId>{g->unit_of(EventId{2})});
  EXPECT_FALSE(is_connected(*g));
}

TEST(Graph, NoEdgesIsDisconnected) {
  const auto g = build_from_graph(2, {});
  EXPECT_EQ(g->transition_count(), 2u);
  EXPECT_EQ(connected_components(*g).size(), 2u);
}

TEST(Graph, ChainOfElevenIsOscillatorTruncation) {
  std::vector<std::pair<std::size_t, std::size_t>> chain;
  for (std::size_t i = 0; i + 1 < 11; ++i) chain.emplace_back(i, i + 1);
  const auto g = build_from_graph(11, chain);
  EXPECT_EQ(g->transition_count(), 121u);
  EXPECT_TRUE(is_connected(*g));
}

TEST(Graph, OutOfRangeEndpointRejected) { EXPECT_THROW(build_from_graph(2, {{0, 2}}), InvalidSpecError); }

TEST(Graph, OrbitsMatchComponentOracle) {
  auto rng = make_rng(12);
  for (int trial = 0; trial < 40; ++trial) {
    const auto n = testing::uniform_index(rng, 1, 8);
    std::vector<std::pair<std::size_t, std::size_t>> edges;
    const auto e = testing::uniform_index(rng, 0, n + 1);
    for (std::size_t k = 0; k < e; ++k)
      edges.emplace_back(testing::uniform_index(rng, 0, n - 1), testing::uniform_index(rng, 0, n - 1));
    const auto g = build_from_graph(n, edges);
    const auto oracle = components_oracle(n, edges);
    std::size_t expected_transitions = 0;
    for (const auto& c : oracle) {
      expected_transitions += c.size() * c.size();
      for (auto a : c) {
        const auto o = orbit(*g, EventId{a});
        std::set<std::size_t> got;
        for (auto x : o) got.insert(x.index);
        EXPECT_EQ(got, c);
      }
    }
    EXPECT_EQ(g->transition_count(), expected_transitions);
  }
}

TEST(PairTimesGroup, IsotropyOverPoint) {
  const auto g = build_pair_times_group(1, 3);
  EXPECT_EQ(isotropy_group(*g, EventId{0}).size(), 3u);
  EXPECT_FALSE(g->is_principal());
}

TEST(PairTimesGroup, TrivialGroupIsPairGroupoid) {
  EXPECT_TRUE(structurally_equal(*build_pair_times_group(2, 1), *build_pair_groupoid(2)));
}

TEST(PairTimesGroup, SprayOrbitQuotient) {
  const auto g = build_pair_times_group(2, 2);
  EXPECT_EQ(g->transition_count(), 8u);
  const auto sp = sprays(*g, EventId{0});
  EXPECT_EQ(sp.g_plus.size(), 4u);
  EXPECT_EQ(sp.g_plus.size() / isotropy_group(*g, EventId{0}).size(), orbit(*g, EventId{0}).size());
}

TEST(PairTimesGroup, IsotropyOfOrderFour) {
  const auto g = build_pair_times_group(2, 4);
  for (std::size_t a = 0; a < 2; ++a) {
    const auto iso = isotropy_group(*g, EventId{a});
    EXPECT_EQ(iso.size(), 4u);
    // Brute-force filter s = t = a.
    std::vector<TransitionId> oracle;
    for (std::size_t i = 0; i < g->transition_count(); ++i)
      if (g->source(TransitionId{i}).index == a && g->target(TransitionId{i}).index == a) oracle.emplace_back(i);
    EXPECT_EQ(iso, oracle);
  }
}

TEST(PairTimesGroup, ZeroParametersRejected) {
  EXPECT_THROW(build_pair_times_group(0, 2), InvalidSpecError);
  EXPECT_THROW(build_pair_times_group(2, 0), InvalidSpecError);
}

TEST(Isotropy, ClosedUnderCompositionAndInverse) {
  auto rng = make_rng(13);
  for (int trial = 0; trial < 30; ++trial) {
    const auto g = testing::random_groupoid(rng);
    for (std::size_t a = 0; a < g->event_count(); ++a) {
      const auto iso = isotropy_group(*g, EventId{a});
      const std::set<TransitionId> s(iso.begin(), iso.end());
      EXPECT_TRUE(s.count(g->unit_of(EventId{a})));
      for (auto x : iso) {
        EXPECT_TRUE(s.count(g->inverse_of(x)));
        for (auto y : iso) EXPECT_TRUE(s.count(*g->compose(x, y)));
      }
    }
  }
}

TEST(Isotropy, PairGroupoidIsTrivial) {
  const auto g = build_pair_groupoid(4);
  for (std::size_t a = 0; a < 4; ++a)
    EXPECT_EQ(isotropy_group(*g, EventId{a}), std::vector<TransitionId>{g->unit_of(EventId{a})});
}

TEST(Sprays, Qubit) {
  using namespace qubit_ids;
  const auto sp = sprays(*qubit(), plus);
  EXPECT_EQ(sp.g_plus, (std::vector<TransitionId>{unit_plus, alpha}));
  EXPECT_EQ(sp.g_minus, (std::vector<TransitionId>{unit_plus, alpha_inv}));
}

TEST(Sprays, QuotientBijectionOnRandomGroupoids) {
  auto rng = make_rng(14);
  for (int trial = 0; trial < 40; ++trial) {
    const auto g = testing::random_groupoid(rng);
    for (std::size_t a = 0; a < g->event_count(); ++a) {
      const EventId e{a};
      EXPECT_EQ(sprays(*g, e).g_plus.size(), isotropy_group(*g, e).size() * orbit(*g, e).size());
    }
  }
}

TEST(Orbit, QubitAndPair) {
  EXPECT_EQ(orbit(*qubit(), qubit_ids::plus).size(), 2u);
  const auto g = build_pair_groupoid(6);
  for (std::size_t a = 0; a < 6; ++a) EXPECT_EQ(orbit(*g, EventId{a}).size(), 6u);
}

TEST(Validate, AllConstructorsProduceGroupoids) {
  EXPECT_TRUE(validate(*build_pair_groupoid(3)).ok());
  EXPECT_TRUE(validate(*build_pair_times_group(2, 3)).ok());
  EXPECT_TRUE(validate(*qubit()).ok());
  auto rng = make_rng(15);
  for (int trial = 0; trial < 50; ++trial) {
    const auto g = testing::random_groupoid(rng);
    const auto report = validate(*g);
    EXPECT_TRUE(report.ok()) << (report.violations.empty() ? "" : report.violations.front().message);
  }
}

TEST(Validate, InjectedSelfCompositionReported) {
  using namespace qubit_ids;
  auto tables = qubit()->tables();
  tables.compose.push_back({alpha, alpha, alpha});
  GroupoidSpec spec;
  spec.kind = GroupoidKind::explicit_tables;
  spec.tables = tables;
  const auto g = FiniteGroupoid::from_tables(tables, spec);
  const auto report = validate(*g);
  ASSERT_FALSE(report.ok());
  bool found = false;
  for (const auto& v : report.violations) {
    const bool mentions_alpha = std::find(v.transitions.begin(), v.transitions.end(), alpha) != v.transitions.end();
    found = found || (mentions_alpha && v.kind == Violation::Kind::composability);
  }
  EXPECT_TRUE(found);
}

TEST(Validate, MissingCompositionReported) {
  auto tables = build_pair_groupoid(3)->tables();
  tables.compose.pop_back();
  GroupoidSpec spec;
  spec.kind = GroupoidKind::explicit_tables;
  spec.tables = tables;
  EXPECT_FALSE(validate(*FiniteGroupoid::from_tables(tables, spec)).ok());
}

TEST(Validate, WrongInverseReported) {
  auto tables = build_pair_groupoid(2)->tables();
  std::swap(tables.inverse[2], tables.inverse[3]);
  GroupoidSpec spec;
  spec.kind = GroupoidKind::explicit_tables;
  spec.tables = tables;
  const auto report = validate(*FiniteGroupoid::from_tables(tables, spec));
  ASSERT_FALSE(report.ok());
  EXPECT_TRUE(std::any_of(report.violations.begin(), report.violations.end(),
                          [](const Violation& v) { return v.kind == Violation::Kind::inverse; }));
}

TEST(Validate, WrongResultBreaksAssociativityOrTyping) {
  auto tables = build_pair_groupoid(3)->tables();
  // Redirect one non-unit product to a transition with the wrong endpoints.
  for (auto& e : tables.compose) {
    if (e.left.index >= 3 && e.right.index >= 3) {
      e.result = TransitionId{0};
      break;
    }
  }
  GroupoidSpec spec;
  spec.kind = GroupoidKind::explicit_tables;
  spec.tables = tables;
  EXPECT_FALSE(validate(*FiniteGroupoid::from_tables(tables, spec)).ok());
}

TEST(FromTables, RangeAndDuplicateChecks) {
  auto tables = build_pair_groupoid(2)->tables();
  GroupoidSpec spec;
  spec.kind = GroupoidKind::explicit_tables;

  auto bad_range = tables;
  bad_range.transitions[1].target = EventId{5};
  EXPECT_THROW(FiniteGroupoid::from_tables(bad_range, spec), InvalidSpecError);

  auto duplicate = tables;
  duplicate.compose.push_back(duplicate.compose.front());
  EXPECT_THROW(FiniteGroupoid::from_tables(duplicate, spec), InvalidSpecError);
}

TEST(Lookup, RangeErrors) {
  const auto g = build_pair_groupoid(2);
  EXPECT_THROW((void)g->unit_of(EventId{2}), RangeError);
  EXPECT_THROW((void)g->transition(TransitionId{4}), RangeError);
  EXPECT_THROW((void)g->find("nope"), RangeError);
  EXPECT_EQ(g->find("(1,0)"), pair_t(*g, 1, 0));
}

TEST(StructuralEquality, DistinguishesKinds) {
  EXPECT_TRUE(structurally_equal(*build_pair_groupoid(3), *build_pair_groupoid(3)));
  EXPECT_FALSE(structurally_equal(*build_pair_groupoid(3), *build_pair_groupoid(2)));
  EXPECT_FALSE(structurally_equal(*build_pair_groupoid(2), *build_pair_times_group(1, 4)));
}

}  // namespace
}  // namespace gqm
