#pragma once

#include <compare>
#include <cstddef>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "gqm/core.hpp"

namespace gqm {

/// Position of an event in the event list.
struct EventId {
  std::size_t index = 0;
  constexpr EventId() = default;
  constexpr explicit EventId(std::size_t i) : index(i) {}
  friend constexpr auto operator<=>(EventId, EventId) = default;
};

/// Position of a transition in the transition list.
struct TransitionId {
  std::size_t index = 0;
  constexpr TransitionId() = default;
  constexpr explicit TransitionId(std::size_t i) : index(i) {}
  friend constexpr auto operator<=>(TransitionId, TransitionId) = default;
};

struct Transition {
  EventId source;
  EventId target;
  std::string label;
};

/// One defined composition: result = left ∘ right (right acts first).
struct ComposeEntry {
  TransitionId left;
  TransitionId right;
  TransitionId result;
};

/// Raw kinematic tables. Nothing here is checked beyond index ranges;
/// use validate() for the groupoid axioms.
struct GroupoidTables {
  std::vector<std::string> events;
  std::vector<Transition> transitions;
  std::vector<TransitionId> units;    // indexed by event
  std::vector<TransitionId> inverse;  // indexed by transition
  std::vector<ComposeEntry> compose;
};

enum class GroupoidKind { pair, graph, pair_times_group, explicit_tables };

struct GroupoidSpec {
  GroupoidKind kind = GroupoidKind::pair;
  std::size_t n = 0;
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  std::size_t m = 0;
  GroupoidTables tables;  // explicit_tables only
};

class FiniteGroupoid;
using GroupoidPtr = std::shared_ptr<const FiniteGroupoid>;

/// Finite groupoid Ω ⇉ G. Immutable after construction.
///
/// Transition storage order is units first (in event order), then the
/// non-unit transitions in the order the constructor emits them.
class FiniteGroupoid {
 public:
  /// Builds from raw tables. Throws InvalidSpecError if an id is out of
  /// range or a composition is listed twice; axioms are not checked.
  static GroupoidPtr from_tables(GroupoidTables tables, GroupoidSpec origin);

  [[nodiscard]] std::size_t event_count() const { return tables_.events.size(); }
  [[nodiscard]] std::size_t transition_count() const { return tables_.transitions.size(); }

  [[nodiscard]] const std::string& event_label(EventId a) const;
  [[nodiscard]] const Transition& transition(TransitionId t) const;
  [[nodiscard]] EventId source(TransitionId t) const { return transition(t).source; }
  [[nodiscard]] EventId target(TransitionId t) const { return transition(t).target; }
  [[nodiscard]] TransitionId unit_of(EventId a) const;
  [[nodiscard]] TransitionId inverse_of(TransitionId t) const;
  [[nodiscard]] bool is_unit(TransitionId t) const;

  /// β∘α when the table defines it.
  [[nodiscard]] std::optional<TransitionId> compose(TransitionId beta, TransitionId alpha) const;

  [[nodiscard]] std::span<const ComposeEntry> compose_entries() const { return tables_.compose; }

  /// All transitions a → a′ (source a, target a′).
  [[nodiscard]] std::span<const TransitionId> between(EventId a, EventId a_prime) const;

  /// Lookup by label; throws RangeError if absent.
  [[nodiscard]] TransitionId find(std::string_view label) const;

  /// True when every G(a, a′) has at most one element. The fundamental
  /// representation is then faithful.
  [[nodiscard]] bool is_principal() const { return principal_; }

  [[nodiscard]] const GroupoidTables& tables() const { return tables_; }
  [[nodiscard]] const GroupoidSpec& spec() const { return spec_; }

  void check_event(EventId a) const;
  void check_transition(TransitionId t) const;

 private:
  FiniteGroupoid() = default;

  GroupoidTables tables_;
  GroupoidSpec spec_;
  std::vector<std::size_t> row_offsets_;  // CSR rows of compose keyed on left
  std::vector<std::vector<TransitionId>> between_;  // [source * n + target]
  bool principal_ = true;
};

// Constructors.

/// Pair groupoid on n events; transition (a,b): b → a.
GroupoidPtr build_pair_groupoid(std::size_t n);

/// Union of pair groupoids over the connected components of an undirected graph.
GroupoidPtr build_from_graph(std::size_t n, const std::vector<std::pair<std::size_t, std::size_t>>& edges);

/// Pair groupoid times the cyclic group Z_m: (a,b,g)∘(b,c,h) = (a,c,g+h).
GroupoidPtr build_pair_times_group(std::size_t n, std::size_t m);

GroupoidPtr build(const GroupoidSpec& spec);

// Queries.

struct Violation {
  enum class Kind { composability, typing, associativity, unit, inverse };
  Kind kind;
  std::vector<TransitionId> transitions;
  std::string message;
};

struct ValidationReport {
  std::vector<Violation> violations;
  [[nodiscard]] bool ok() const { return violations.empty(); }
};

/// Exhaustive check of the groupoid axioms.
ValidationReport validate(const FiniteGroupoid& g);

std::vector<TransitionId> isotropy_group(const FiniteGroupoid& g, EventId a);

struct Sprays {
  std::vector<TransitionId> g_plus;   // s(α) = a
  std::vector<TransitionId> g_minus;  // t(α) = a
};
Sprays sprays(const FiniteGroupoid& g, EventId a);

/// Events reachable from a, in increasing order.
std::vector<EventId> orbit(const FiniteGroupoid& g, EventId a);

std::vector<std::vector<EventId>> connected_components(const FiniteGroupoid& g);
bool is_connected(const FiniteGroupoid& g);

/// Same tables up to labels.
bool structurally_equal(const FiniteGroupoid& lhs, const FiniteGroupoid& rhs);

const char* to_string(Violation::Kind kind);
const char* to_string(GroupoidKind kind);

}  // namespace gqm
