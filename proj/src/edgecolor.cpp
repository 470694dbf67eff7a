#include "ecsynth/edgecolor.hpp"

#include <algorithm>
#include <cstdint>
#include <set>
#include <string>

#include "ecsynth/errors.hpp"

namespace ecsynth {

void BipartiteGraph::validate() const {
  std::vector<std::uint64_t> keys;
  keys.reserve(edges.size());
  for (const auto& [u, v] : edges) {
    if (u >= left_count || v >= right_count) {
      throw InvalidInput("edge (" + std::to_string(u) + ", " + std::to_string(v) + ") out of range");
    }
    keys.push_back(static_cast<std::uint64_t>(u) * right_count + v);
  }
  std::sort(keys.begin(), keys.end());
  if (std::adjacent_find(keys.begin(), keys.end()) != keys.end()) throw InvalidInput("duplicate edge");
}

std::size_t BipartiteGraph::max_degree() const {
  std::vector<std::size_t> left(left_count, 0);
  std::vector<std::size_t> right(right_count, 0);
  std::size_t best = 0;
  for (const auto& [u, v] : edges) {
    best = std::max({best, ++left[u], ++right[v]});
  }
  return best;
}

BipartiteGraph graph_of_matrix(const BinMatrix& m) {
  BipartiteGraph g;
  g.left_count = m.n();
  g.right_count = m.n();
  for (std::size_t j = 0; j < m.n(); ++j) {
    for (std::size_t i = 0; i < m.n(); ++i) {
      if (m.get(j, i)) g.edges.emplace_back(i, j);
    }
  }
  return g;
}

namespace {

constexpr std::size_t kNone = static_cast<std::size_t>(-1);

// at_[vertex * colors + c] = edge index holding color c at that vertex, or kNone.
class ColorTable {
 public:
  ColorTable(std::size_t vertices, std::size_t colors) : colors_(colors), at_(vertices * colors, kNone) {}

  std::size_t& at(std::size_t vertex, std::size_t color) { return at_[vertex * colors_ + color]; }

  std::size_t first_free(std::size_t vertex) const {
    const std::size_t* row = at_.data() + vertex * colors_;
    for (std::size_t c = 0; c < colors_; ++c) {
      if (row[c] == kNone) return c;
    }
    return kNone;
  }

 private:
  std::size_t colors_;
  std::vector<std::size_t> at_;
};

}  // namespace

EdgeColoring color_edges(const BipartiteGraph& g) {
  g.validate();
  EdgeColoring out;
  out.num_colors = g.max_degree();
  out.color_of.assign(g.edges.size(), kNone);
  if (g.edges.empty()) return out;

  // Left vertices occupy [0, L), right vertices [L, L + R).
  const std::size_t left = g.left_count;
  ColorTable table(g.left_count + g.right_count, out.num_colors);
  auto other_end = [&](std::size_t edge, std::size_t vertex) {
    const std::size_t u = g.edges[edge].first;
    const std::size_t v = left + g.edges[edge].second;
    return vertex == u ? v : u;
  };

  std::vector<std::size_t> path;
  for (std::size_t e = 0; e < g.edges.size(); ++e) {
    const std::size_t u = g.edges[e].first;
    const std::size_t v = left + g.edges[e].second;
    const std::size_t alpha = table.first_free(u);
    const std::size_t beta = table.first_free(v);

    if (table.at(v, alpha) != kNone) {
      // Walk the alpha/beta path starting at v with an alpha edge. It cannot reach u:
      // u has no alpha edge and, by parity, would be entered through one.
      path.clear();
      std::size_t vertex = v;
      std::size_t color = alpha;
      while (table.at(vertex, color) != kNone) {
        const std::size_t edge = table.at(vertex, color);
        path.push_back(edge);
        vertex = other_end(edge, vertex);
        color = color == alpha ? beta : alpha;
      }
      for (std::size_t edge : path) {
        const std::size_t a = g.edges[edge].first;
        const std::size_t b = left + g.edges[edge].second;
        const std::size_t c = out.color_of[edge];
        if (table.at(a, c) == edge) table.at(a, c) = kNone;
        if (table.at(b, c) == edge) table.at(b, c) = kNone;
      }
      for (std::size_t edge : path) {
        const std::size_t a = g.edges[edge].first;
        const std::size_t b = left + g.edges[edge].second;
        const std::size_t c = out.color_of[edge] == alpha ? beta : alpha;
        out.color_of[edge] = c;
        table.at(a, c) = edge;
        table.at(b, c) = edge;
      }
    }
    out.color_of[e] = alpha;
    table.at(u, alpha) = e;
    table.at(v, alpha) = e;
  }
  return out;
}

bool is_proper(const BipartiteGraph& g, const EdgeColoring& coloring) {
  if (coloring.color_of.size() != g.edges.size()) return false;
  std::set<std::pair<std::size_t, std::size_t>> left_used;
  std::set<std::pair<std::size_t, std::size_t>> right_used;
  for (std::size_t e = 0; e < g.edges.size(); ++e) {
    const std::size_t c = coloring.color_of[e];
    if (c >= coloring.num_colors) return false;
    if (!left_used.emplace(g.edges[e].first, c).second) return false;
    if (!right_used.emplace(g.edges[e].second, c).second) return false;
  }
  return true;
}

}  // namespace ecsynth
