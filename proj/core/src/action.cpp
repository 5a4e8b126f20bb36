#include "psylow/action.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "psylow/errors.hpp"

namespace psylow {

namespace {

std::vector<Point> orbit_unsorted(const PermGroup& g, Point start) {
  std::vector<bool> seen(g.degree(), false);
  std::vector<Point> out{start};
  seen[start] = true;
  for (std::size_t i = 0; i < out.size(); ++i) {
    for (const auto& s : g.generators()) {
      Point c = s.apply(out[i]);
      if (!seen[c]) {
        seen[c] = true;
        out.push_back(c);
      }
    }
  }
  return out;
}

// finest block system in which a and b share a block (union-find)
std::vector<std::vector<Point>> block_system_joining(const PermGroup& g,
                                                     Point a, Point b) {
  const unsigned n = g.degree();
  std::vector<Point> parent(n);
  std::iota(parent.begin(), parent.end(), 0u);
  auto find = [&](Point x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  };
  std::vector<std::pair<Point, Point>> work;
  auto unite = [&](Point x, Point y) {
    Point rx = find(x), ry = find(y);
    if (rx == ry) return;
    if (rx > ry) std::swap(rx, ry);
    parent[ry] = rx;
    work.emplace_back(rx, ry);
  };
  unite(a, b);
  for (std::size_t i = 0; i < work.size(); ++i) {
    auto [x, y] = work[i];
    for (const auto& s : g.generators()) unite(s.apply(x), s.apply(y));
  }
  std::vector<std::vector<Point>> blocks(n);
  for (Point x = 0; x < n; ++x) blocks[find(x)].push_back(x);
  std::vector<std::vector<Point>> out;
  for (auto& blk : blocks)
    if (!blk.empty()) out.push_back(std::move(blk));
  return out;
}

// true if every block of fine sits inside a block of coarse
bool refines(const BlockSystem& fine, const BlockSystem& coarse,
             unsigned degree) {
  std::vector<int> which(degree, -1);
  for (std::size_t i = 0; i < coarse.size(); ++i)
    for (Point x : coarse[i]) which[x] = static_cast<int>(i);
  for (const auto& blk : fine) {
    int id = which[blk.front()];
    for (Point x : blk)
      if (which[x] != id) return false;
  }
  return true;
}

}  // namespace

std::vector<Point> orbit(const PermGroup& g, Point start) {
  if (start >= g.degree()) throw PreconditionError("orbit point out of range");
  auto out = orbit_unsorted(g, start);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::vector<Point>> orbit_partition(const PermGroup& g) {
  std::vector<bool> seen(g.degree(), false);
  std::vector<std::vector<Point>> out;
  for (Point s = 0; s < g.degree(); ++s) {
    if (seen[s]) continue;
    auto orb = orbit(g, s);
    for (Point x : orb) seen[x] = true;
    out.push_back(std::move(orb));
  }
  return out;
}

bool is_transitive(const PermGroup& g) {
  return orbit_unsorted(g, 0).size() == g.degree();
}

std::vector<BlockSystem> minimal_block_systems(const PermGroup& g) {
  if (g.degree() < 2)
    throw PreconditionError("block systems need degree >= 2");
  if (!is_transitive(g))
    throw PreconditionError("block systems need a transitive action");
  std::set<BlockSystem> distinct;
  for (Point seed = 1; seed < g.degree(); ++seed) {
    auto blocks = block_system_joining(g, 0, seed);
    if (blocks.size() <= 1) continue;  // whole set: trivial
    if (blocks.size() == g.degree()) continue;  // singletons: can't happen here
    for (auto& blk : blocks) std::sort(blk.begin(), blk.end());
    std::sort(blocks.begin(), blocks.end());
    distinct.insert(std::move(blocks));
  }
  // keep only systems with no strictly finer nontrivial system
  std::vector<BlockSystem> out;
  for (const auto& cand : distinct) {
    bool minimal = true;
    for (const auto& other : distinct) {
      if (&other == &cand) continue;
      if (other != cand && refines(other, cand, g.degree())) {
        minimal = false;
        break;
      }
    }
    if (minimal) out.push_back(cand);
  }
  return out;
}

bool is_primitive(const PermGroup& g) {
  return minimal_block_systems(g).empty();
}

}  // namespace psylow
