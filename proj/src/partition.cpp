#include "bell/partition.hpp"

#include <algorithm>
#include <stdexcept>

namespace bell {

namespace {

// Part order: by size, then lexicographically by content.
bool part_less(const std::vector<int>& a, const std::vector<int>& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return a < b;
}

void canonicalize_parts(std::vector<std::vector<int>>& parts) {
  for (auto& p : parts) std::sort(p.begin(), p.end());
  parts.erase(std::remove_if(parts.begin(), parts.end(),
                             [](const auto& p) { return p.empty(); }),
              parts.end());
  std::sort(parts.begin(), parts.end(), part_less);
}

std::strong_ordering compare_parts(const std::vector<std::vector<int>>& a,
                                   const std::vector<std::vector<int>>& b) {
  size_t k = std::min(a.size(), b.size());
  for (size_t i = 0; i < k; ++i) {
    if (part_less(a[i], b[i])) return std::strong_ordering::less;
    if (part_less(b[i], a[i])) return std::strong_ordering::greater;
  }
  return a.size() <=> b.size();
}

}  // namespace

StablePartition::StablePartition(int budget, std::vector<std::vector<int>> parts)
    : budget_(budget), parts_(std::move(parts)) {
  canonicalize_parts(parts_);
  if (budget_ < static_cast<int>(parts_.size()))
    throw std::invalid_argument("more nonempty parts than the budget allows");
  int n = 0;
  for (const auto& p : parts_) n += static_cast<int>(p.size());
  part_of_.assign(n, -1);
  for (int i = 0; i < static_cast<int>(parts_.size()); ++i)
    for (int v : parts_[i]) {
      if (v < 0 || v >= n)
        throw std::invalid_argument("partition does not cover 0..n-1");
      if (part_of_[v] != -1)
        throw std::invalid_argument("vertex appears in two parts");
      part_of_[v] = i;
    }
}

int StablePartition::part_containing(int v) const {
  if (v < 0 || v >= ground_size())
    throw IndexOutOfRange("vertex id outside partition ground set");
  return part_of_[v];
}

bool StablePartition::has_part(const std::vector<int>& sorted_part) const {
  return std::binary_search(parts_.begin(), parts_.end(), sorted_part,
                            part_less);
}

bool StablePartition::has_singleton(int v) const {
  return v >= 0 && v < ground_size() && parts_[part_of_[v]].size() == 1;
}

std::string StablePartition::to_string() const {
  std::string s;
  for (size_t i = 0; i < parts_.size(); ++i) {
    if (i) s += '|';
    for (size_t j = 0; j < parts_[i].size(); ++j) {
      if (j) s += ',';
      s += std::to_string(parts_[i][j]);
    }
  }
  return s;
}

StablePartition StablePartition::from_string(const std::string& text,
                                             int budget) {
  std::vector<std::vector<int>> parts;
  if (!text.empty()) {
    size_t pos = 0;
    while (pos <= text.size()) {
      size_t bar = text.find('|', pos);
      std::string part_text =
          text.substr(pos, bar == std::string::npos ? bar : bar - pos);
      std::vector<int> part;
      size_t q = 0;
      while (q < part_text.size()) {
        size_t comma = part_text.find(',', q);
        std::string id_text = part_text.substr(
            q, comma == std::string::npos ? comma : comma - q);
        try {
          size_t used = 0;
          int id = std::stoi(id_text, &used);
          if (used != id_text.size() || id < 0)
            throw std::invalid_argument("bad id");
          part.push_back(id);
        } catch (const std::exception&) {
          throw std::invalid_argument("malformed partition text: '" + text +
                                      "'");
        }
        if (comma == std::string::npos) break;
        q = comma + 1;
      }
      if (part.empty())
        throw std::invalid_argument("malformed partition text: '" + text + "'");
      parts.push_back(std::move(part));
      if (bar == std::string::npos) break;
      pos = bar + 1;
    }
  }
  return StablePartition(budget, std::move(parts));
}

std::strong_ordering operator<=>(const StablePartition& a,
                                 const StablePartition& b) {
  if (auto c = a.budget_ <=> b.budget_; c != 0) return c;
  return compare_parts(a.parts_, b.parts_);
}

std::vector<StablePartition> enumerate_stable_partitions(const Graph& g,
                                                         int k) {
  if (k < 1) throw std::invalid_argument("partition budget must be >= 1");
  int n = g.order();
  std::vector<StablePartition> out;
  std::vector<std::vector<int>> parts;

  // Restricted-growth assignment: vertex v joins an existing part or opens a
  // new one, so every multiset of at most k nonempty parts appears once.
  auto independent_from = [&](const std::vector<int>& part, int v) {
    for (int u : part)
      if (g.adjacent(u, v)) return false;
    return true;
  };
  auto rec = [&](auto&& self, int v) -> void {
    if (v == n) {
      out.emplace_back(k, parts);
      return;
    }
    // Index loop: deeper recursion levels may reallocate parts, which would
    // invalidate any reference or iterator held across the call.
    for (size_t i = 0; i < parts.size(); ++i) {
      if (!independent_from(parts[i], v)) continue;
      parts[i].push_back(v);
      self(self, v + 1);
      parts[i].pop_back();
    }
    if (static_cast<int>(parts.size()) < k) {
      parts.push_back({v});
      self(self, v + 1);
      parts.pop_back();
    }
  };
  rec(rec, 0);
  std::sort(out.begin(), out.end());
  return out;
}

Restriction restrict(const StablePartition& p, int v) {
  return restrict_set(p, {v});
}

Restriction restrict_set(const StablePartition& p, const std::vector<int>& vs) {
  for (int v : vs) p.part_containing(v);  // range check
  std::vector<std::vector<int>> parts;
  parts.reserve(p.parts().size());
  for (const auto& part : p.parts()) {
    std::vector<int> reduced;
    reduced.reserve(part.size());
    for (int x : part)
      if (std::find(vs.begin(), vs.end(), x) == vs.end())
        reduced.push_back(x);
    if (!reduced.empty()) parts.push_back(std::move(reduced));
  }
  std::sort(parts.begin(), parts.end(), part_less);
  return Restriction{p.budget(), std::move(parts)};
}

std::vector<Move> legal_moves(const StablePartition& p, const Graph& g) {
  std::vector<Move> moves;
  const auto& parts = p.parts();
  for (int v = 0; v < p.ground_size(); ++v) {
    int src = p.part_containing(v);
    bool src_singleton = parts[src].size() == 1;
    auto build_with = [&](int dst) {
      // dst == -1 places v alone in an empty slot.
      std::vector<std::vector<int>> np;
      np.reserve(parts.size() + 1);
      for (int i = 0; i < static_cast<int>(parts.size()); ++i) {
        std::vector<int> part;
        for (int x : parts[i])
          if (x != v) part.push_back(x);
        if (i == dst) part.push_back(v);
        if (!part.empty()) np.push_back(std::move(part));
      }
      if (dst == -1) np.push_back({v});
      return StablePartition(p.budget(), std::move(np));
    };
    for (int j = 0; j < static_cast<int>(parts.size()); ++j) {
      if (j == src) continue;
      bool blocked = false;
      for (int u : parts[j])
        if (g.adjacent(u, v)) {
          blocked = true;
          break;
        }
      if (blocked) continue;
      moves.push_back({v, build_with(j)});
    }
    if (!src_singleton && p.nonempty_count() < p.budget())
      moves.push_back({v, build_with(-1)});
  }
  std::sort(moves.begin(), moves.end(), [](const Move& a, const Move& b) {
    if (a.witness != b.witness) return a.witness < b.witness;
    return a.result < b.result;
  });
  return moves;
}

std::vector<int> witnesses(const StablePartition& p, const StablePartition& q) {
  std::vector<int> out;
  if (p.budget() != q.budget() || p.ground_size() != q.ground_size() || p == q)
    return out;
  for (int v = 0; v < p.ground_size(); ++v)
    if (restrict(p, v) == restrict(q, v)) out.push_back(v);
  return out;
}

std::optional<DoubleEdgePattern> is_double_edge_pattern(
    const StablePartition& p, const StablePartition& q) {
  if (p.budget() != q.budget() || p.ground_size() != q.ground_size())
    return std::nullopt;
  auto try_orient = [](const StablePartition& pair_side,
                       const StablePartition& split_side)
      -> std::optional<DoubleEdgePattern> {
    for (const auto& part : pair_side.parts()) {
      if (part.size() != 2) continue;
      int a = part[0], b = part[1];
      if (!split_side.has_singleton(a) || !split_side.has_singleton(b))
        continue;
      Restriction rp = restrict_set(pair_side, part);
      Restriction rq = restrict_set(split_side, part);
      if (rp == rq) {
        Restriction shared{pair_side.budget() - 2, rp.parts};
        return DoubleEdgePattern{a, b, std::move(shared)};
      }
    }
    return std::nullopt;
  };
  if (auto hit = try_orient(p, q)) return hit;
  return try_orient(q, p);
}

}  // namespace bell
