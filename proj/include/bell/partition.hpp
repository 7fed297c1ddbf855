#pragma once

#include <compare>
#include <optional>
#include <string>
#include <vector>

#include "bell/graph.hpp"

namespace bell {

/// A stable k-partition: a multiset of k independent sets (empty parts
/// allowed) covering the base graph's vertex set. Only the nonempty parts are
/// stored; the number of empty parts is budget() - parts().size(). Parts are
/// kept in a canonical order (by size, then lexicographically by content), so
/// equal multisets compare equal.
class StablePartition {
 public:
  StablePartition(int budget, std::vector<std::vector<int>> parts);

  int budget() const { return budget_; }
  const std::vector<std::vector<int>>& parts() const { return parts_; }
  int nonempty_count() const { return static_cast<int>(parts_.size()); }
  int empty_count() const { return budget_ - nonempty_count(); }
  /// Number of vertices of the base graph (parts partition 0..n-1).
  int ground_size() const { return static_cast<int>(part_of_.size()); }
  int part_containing(int v) const;
  bool has_part(const std::vector<int>& sorted_part) const;
  bool has_singleton(int v) const;

  /// "2|4|1,3": ids inside a part joined by ",", parts joined by "|",
  /// canonical part order. The empty partition renders as "".
  std::string to_string() const;
  static StablePartition from_string(const std::string& text, int budget);

  friend bool operator==(const StablePartition& a, const StablePartition& b) {
    return a.budget_ == b.budget_ && a.parts_ == b.parts_;
  }
  friend std::strong_ordering operator<=>(const StablePartition& a,
                                          const StablePartition& b);

 private:
  int budget_ = 0;
  std::vector<std::vector<int>> parts_;
  std::vector<int> part_of_;
};

/// The multiset P - v: nonempty parts after deleting v, in canonical order,
/// with the original budget (an emptied slot stays inside the budget).
struct Restriction {
  int budget = 0;
  std::vector<std::vector<int>> parts;

  friend bool operator==(const Restriction&, const Restriction&) = default;
  friend auto operator<=>(const Restriction&, const Restriction&) = default;
};

/// Every stable k-partition of g, exactly once, in canonical order.
std::vector<StablePartition> enumerate_stable_partitions(const Graph& g, int k);

Restriction restrict(const StablePartition& p, int v);
/// P minus several vertices at once (used for T-triangle rigidity checks).
Restriction restrict_set(const StablePartition& p, const std::vector<int>& vs);

struct Move {
  int witness;
  StablePartition result;
};

/// All single-vertex moves from p to a distinct stable partition with the
/// same budget: each pair (witness, result) with p - witness = result -
/// witness. Moving a singleton into an empty slot reproduces p and is
/// excluded. Sorted by (witness, result).
std::vector<Move> legal_moves(const StablePartition& p, const Graph& g);

/// { v : p - v == q - v }. Requires p != q with equal budgets and ground
/// sets; returns the sorted witness list (empty when not adjacent).
std::vector<int> witnesses(const StablePartition& p, const StablePartition& q);

struct DoubleEdgePattern {
  int a, b;             // the nonadjacent pair, a < b
  Restriction shared;   // the common remainder, with budget - 2 slots
};

/// Detects the doubly-realized edge pattern: one side is {{a,b}, empty} + R,
/// the other {{a},{b}} + R. Returns the pair and remainder, or nullopt.
std::optional<DoubleEdgePattern> is_double_edge_pattern(
    const StablePartition& p, const StablePartition& q);

}  // namespace bell
