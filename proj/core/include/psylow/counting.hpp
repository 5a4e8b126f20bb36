#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "psylow/bigint.hpp"
#include "psylow/element_table.hpp"
#include "psylow/limits.hpp"

namespace psylow {

struct OrbitRow {
  SubgroupHandle rep;         // orbit representative
  std::uint64_t length = 0;   // size of the conjugacy orbit
};

struct CountReport {
  std::string spec_text;  // canonical constructor text when the caller knows it
  unsigned p = 0;
  unsigned a = 0;
  BigInt count;        // number of subgroups of order p^a
  unsigned mod_p = 0;  // count mod p
  unsigned mod_p2 = 0; // count mod p^2
  std::vector<OrbitRow> orbits;  // conjugacy fusion orbits, deterministic order
  BigInt sylow_order;  // p-part of |G|
};

struct CountProfile {
  unsigned p = 0;
  unsigned m = 0;  // exponent of p in |G|
  std::vector<CountReport> per_a;  // indices 0..m
};

// One Sylow p-subgroup, grown deterministically: starting from the identity,
// repeatedly absorb the lowest-index p-element that normalizes the current
// subgroup without lying in it. p must be prime.
SubgroupHandle sylow_subgroup(const ElementTable& t, unsigned p);

// All subgroups of order p^a inside the p-group P (p is inferred from |P|),
// by level-wise cyclic extension. Deterministic order. CapError if a level
// exceeds lim.max_subgroups.
std::vector<SubgroupHandle> p_subgroups_of_order(const ElementTable& t,
                                                 const SubgroupHandle& P,
                                                 unsigned a,
                                                 const Limits& lim = {});

// Subgroups of order p^a in the whole group: enumerate inside one Sylow
// p-subgroup, then fuse under G-conjugation. PreconditionError unless p is
// prime and p^a divides |G|.
CountReport count_subgroups_of_order(const ElementTable& t, unsigned p,
                                     unsigned a, const Limits& lim = {});

// Counts for every a = 0..m at once. Results are memoized on the table, so
// repeated calls (and the verify layer) pay for the enumeration once.
std::shared_ptr<const CountProfile> count_profile(const ElementTable& t,
                                                  unsigned p,
                                                  const Limits& lim = {});

// Number of Sylow p-subgroups (1 if p does not divide |G|).
std::uint64_t count_sylow(const ElementTable& t, unsigned p,
                          const Limits& lim = {});

}  // namespace psylow
