#include "pickopt/s_shape.hpp"

#include <algorithm>
#include <array>
#include <cstdlib>
#include <limits>
#include <string>

#include "pickopt/errors.hpp"

namespace pickopt {

namespace {

// Grid distance between artificial vertices, split into vertical and
// horizontal parts. Shortest paths between artificial vertices never need to
// turn inside a subaisle, so both parts are exact.
struct Split {
  Length vertical = 0;
  Length horizontal = 0;
};

Split grid_distance(const PickingGraph& g, VertexId u, VertexId v) {
  const auto& l = g.layout();
  Split s;
  s.vertical = std::abs(g.cross_aisle_of(u) - g.cross_aisle_of(v)) * l.subaisle_length();
  s.horizontal = std::abs(g.aisle_of(u) - g.aisle_of(v)) * l.aisle_spacing;
  return s;
}

std::vector<int> sorted_unique(std::vector<int> v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

}  // namespace

std::string to_string(SShapeKind kind) { return kind == SShapeKind::r_S1 ? "r_S1" : "r_S2"; }

SShapeRoute route_over_sequence(const PickingGraph& g, const std::vector<int>& sequence) {
  SShapeRoute route;
  route.sequence = sequence;
  const std::size_t n = sequence.size();
  if (n == 0) return route;
  constexpr Length kInf = std::numeric_limits<Length>::max() / 4;
  // best[k][dir]: vertical length after traversing sequence[k] in direction dir
  std::vector<std::array<Length, 2>> best(n, {kInf, kInf});
  std::vector<std::array<int, 2>> from(n, {-1, -1});
  Length horizontal = 0;
  auto ends = [&](int i, int dir) {
    const Subaisle& sub = g.subaisle(i);
    return dir == 1 ? std::pair{sub.top, sub.bottom} : std::pair{sub.bottom, sub.top};
  };
  for (std::size_t k = 0; k < n; ++k) {
    const Length d = g.layout().subaisle_length();
    for (int dir = 0; dir < 2; ++dir) {
      const VertexId entry = ends(sequence[k], dir).first;
      if (k == 0) {
        best[k][static_cast<std::size_t>(dir)] = grid_distance(g, g.origin(), entry).vertical + d;
        continue;
      }
      for (int prev = 0; prev < 2; ++prev) {
        const Length base = best[k - 1][static_cast<std::size_t>(prev)];
        const VertexId exit = ends(sequence[k - 1], prev).second;
        const Length c = base + grid_distance(g, exit, entry).vertical + d;
        if (c < best[k][static_cast<std::size_t>(dir)]) {
          best[k][static_cast<std::size_t>(dir)] = c;
          from[k][static_cast<std::size_t>(dir)] = prev;
        }
      }
    }
  }
  int dir = 0;
  Length total_vertical = kInf;
  for (int last = 0; last < 2; ++last) {
    const Length c = best[n - 1][static_cast<std::size_t>(last)] +
                     grid_distance(g, ends(sequence[n - 1], last).second, g.origin()).vertical;
    if (c < total_vertical) {
      total_vertical = c;
      dir = last;
    }
  }
  route.southward.assign(n, false);
  for (std::size_t k = n; k-- > 0;) {
    route.southward[k] = dir == 1;
    if (k > 0) dir = from[k][static_cast<std::size_t>(dir)];
  }
  VertexId cur = g.origin();
  for (std::size_t k = 0; k < n; ++k) {
    const auto [entry, exit] = ends(sequence[k], route.southward[k] ? 1 : 0);
    horizontal += grid_distance(g, cur, entry).horizontal;
    cur = exit;
  }
  horizontal += grid_distance(g, cur, g.origin()).horizontal;
  route.vertical_length = total_vertical;
  route.total_length = total_vertical + horizontal;
  return route;
}

SShapeRoute evaluate_s_shape(const PickingGraph& g, const std::vector<int>& K1_in,
                             const std::vector<int>& K2_in, SShapeKind kind) {
  if (g.layout().n_blocks != 2) throw ValidationError("S-shape routes need a 2-block layout");
  const auto K1 = sorted_unique(K1_in);
  const auto K2 = sorted_unique(K2_in);
  if (K1.empty() && K2.empty()) throw ValidationError("S-shape route needs a picked subaisle");
  const int n = g.layout().n_aisles;
  for (int i : K1) {
    if (i < 0 || i >= n) throw ValidationError("K1 holds subaisle " + std::to_string(i) + " outside block 1");
  }
  for (int i : K2) {
    if (i < n || i >= 2 * n) throw ValidationError("K2 holds subaisle " + std::to_string(i) + " outside block 2");
  }
  if (kind == SShapeKind::r_S1 && K1.empty()) throw ValidationError("r_S1 is undefined for an empty K1");
  std::vector<int> seq;
  int i0 = -1;
  if (kind == SShapeKind::r_S1) {
    i0 = K1.front();
    seq.assign(K1.begin() + 1, K1.end());
  } else {
    seq = K1;
  }
  seq.insert(seq.end(), K2.rbegin(), K2.rend());
  if (kind == SShapeKind::r_S1) seq.push_back(i0);
  SShapeRoute r = route_over_sequence(g, seq);
  r.kind = kind;
  r.i0 = i0;
  return r;
}

Walk s_shape_walk(const PickingGraph& g, const SShapeRoute& route) {
  if (route.sequence.empty()) return minimal_departure(g);
  Walk w(g);
  auto step = [&](VertexId a, VertexId b) {
    ++w.multiplicity[static_cast<std::size_t>(g.arc(g.arc_between(a, b)).edge)];
  };
  // Walks artificial vertex `from` to artificial vertex `to` along a chain of
  // subaisles and then the cross-aisle.
  auto move = [&](VertexId from, VertexId to) {
    int row = g.cross_aisle_of(from);
    const int aisle = g.aisle_of(from);
    while (row != g.cross_aisle_of(to)) {
      const int block = row < g.cross_aisle_of(to) ? row : row - 1;
      auto chain = g.subaisle(g.subaisle_index(block, aisle)).chain();
      if (row > g.cross_aisle_of(to)) std::reverse(chain.begin(), chain.end());
      for (std::size_t k = 0; k + 1 < chain.size(); ++k) step(chain[k], chain[k + 1]);
      row += row < g.cross_aisle_of(to) ? 1 : -1;
    }
    for (int a = aisle; a != g.aisle_of(to); a += a < g.aisle_of(to) ? 1 : -1) {
      const int next = a < g.aisle_of(to) ? a + 1 : a - 1;
      step(g.artificial(row, a), g.artificial(row, next));
    }
  };
  VertexId cur = g.origin();
  for (std::size_t k = 0; k < route.sequence.size(); ++k) {
    const Subaisle& sub = g.subaisle(route.sequence[k]);
    auto chain = sub.chain();
    if (!route.southward[k]) std::reverse(chain.begin(), chain.end());
    move(cur, chain.front());
    for (std::size_t j = 0; j + 1 < chain.size(); ++j) step(chain[j], chain[j + 1]);
    cur = chain.back();
  }
  move(cur, g.origin());
  for (int& m : w.multiplicity) {
    while (m > 2) m -= 2;
  }
  return w;
}

namespace {

SShapeRoute best_route(const PickingGraph& g, const std::vector<VertexId>& picks) {
  std::vector<int> subs;
  for (VertexId v : picks) subs.push_back(g.subaisle_of(v));
  subs = sorted_unique(subs);
  const int blocks = g.layout().n_blocks;
  if (blocks == 1) return route_over_sequence(g, subs);
  if (blocks != 2) throw ValidationError("S-shape estimate supports 1- or 2-block layouts only");
  std::vector<int> K1, K2;
  for (int i : subs) (i < g.layout().n_aisles ? K1 : K2).push_back(i);
  SShapeRoute best = evaluate_s_shape(g, K1, K2, SShapeKind::r_S2);
  if (!K1.empty()) {
    SShapeRoute r1 = evaluate_s_shape(g, K1, K2, SShapeKind::r_S1);
    if (r1.total_length < best.total_length) best = r1;
  }
  return best;
}

}  // namespace

Walk s_shape_route_walk(const PickingGraph& g, const std::vector<VertexId>& picks) {
  if (picks.empty()) return minimal_departure(g);
  return s_shape_walk(g, best_route(g, picks));
}

Length s_shape_estimate(const PickingGraph& g, const std::vector<VertexId>& picks) {
  if (picks.empty()) return 0;
  return best_route(g, picks).total_length;
}

}  // namespace pickopt
