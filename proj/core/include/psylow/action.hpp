#pragma once

#include <vector>

#include "psylow/perm_group.hpp"

namespace psylow {

// points reachable from start, sorted ascending
std::vector<Point> orbit(const PermGroup& g, Point start);

// all orbits, keyed by their minimal representative, ascending
std::vector<std::vector<Point>> orbit_partition(const PermGroup& g);

bool is_transitive(const PermGroup& g);

// one block system per minimal nontrivial block, via the union-find block
// algorithm seeded with {0, seed}; empty for a primitive (or intransitive
// only trivial-block) action. Pre: transitive, degree >= 2.
using BlockSystem = std::vector<std::vector<Point>>;
std::vector<BlockSystem> minimal_block_systems(const PermGroup& g);

// transitive with no nontrivial block system; pre: transitive, degree >= 2
bool is_primitive(const PermGroup& g);

}  // namespace psylow
