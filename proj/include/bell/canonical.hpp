#pragma once

#include <array>
#include <compare>
#include <vector>

#include "bell/graph.hpp"

namespace bell {

/// Label-independent certificate: the edge list (with multiplicities) of the
/// graph under its canonical labeling. Two graphs have equal CanonicalForm
/// iff they are isomorphic.
struct CanonicalForm {
  int order = 0;
  std::vector<std::array<int, 3>> edges;  // {u, v, mult}, sorted

  friend auto operator<=>(const CanonicalForm&, const CanonicalForm&) = default;
  friend bool operator==(const CanonicalForm&, const CanonicalForm&) = default;
};

CanonicalForm canonical_form(const Graph& g);
CanonicalForm canonical_form(const Multigraph& g);

bool is_isomorphic(const Graph& a, const Graph& b);
bool is_multigraph_isomorphic(const Multigraph& a, const Multigraph& b);

}  // namespace bell
