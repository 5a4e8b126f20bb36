#include "psylow/counting.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>
#include <unordered_set>

#include "psylow/errors.hpp"
#include "psylow/numbers.hpp"

namespace psylow {

namespace {

// dense local multiplication tables are worth it only up to this order;
// beyond it products fall back to the (binary-searched) global table
constexpr std::uint32_t kDenseLocalLimit = 4096;

struct Mask {
  std::vector<std::uint64_t> w;

  bool test(unsigned i) const { return (w[i >> 6] >> (i & 63)) & 1; }
  void set(unsigned i) { w[i >> 6] |= std::uint64_t{1} << (i & 63); }
  void or_with(const Mask& o) {
    for (std::size_t i = 0; i < w.size(); ++i) w[i] |= o.w[i];
  }

  std::vector<std::uint32_t> bits() const {
    std::vector<std::uint32_t> out;
    for (std::size_t wi = 0; wi < w.size(); ++wi) {
      std::uint64_t word = w[wi];
      while (word) {
        out.push_back(static_cast<std::uint32_t>(
            wi * 64 + static_cast<unsigned>(std::countr_zero(word))));
        word &= word - 1;
      }
    }
    return out;
  }

  friend bool operator==(const Mask& a, const Mask& b) = default;
};

Mask make_mask(std::uint32_t n) {
  Mask m;
  m.w.assign((n + 63) / 64, 0);
  return m;
}

struct MaskHash {
  std::size_t operator()(const Mask& m) const {
    std::size_t h = 1469598103934665603ull;
    for (auto word : m.w) {
      h ^= word;
      h *= 1099511628211ull;
    }
    return h;
  }
};

// Multiplication inside one p-subgroup, on local indices 0..n-1 that follow
// the sorted order of the global member indices (so local 0 is the identity).
struct LocalPGroup {
  const ElementTable* t = nullptr;
  unsigned p = 0;
  unsigned m = 0;  // |P| = p^m
  std::uint32_t n = 0;
  std::vector<std::uint32_t> global;  // local -> table index, ascending
  std::vector<std::uint16_t> dense;   // n*n local products, empty if too big
  std::vector<std::uint32_t> inv;
  std::vector<std::uint32_t> powp;  // x -> x^p
  bool abelian = false;

  std::uint32_t pos(std::uint32_t table_index) const {
    auto it = std::lower_bound(global.begin(), global.end(), table_index);
    if (it == global.end() || *it != table_index)
      throw PreconditionError("subgroup handle is not closed under products");
    return static_cast<std::uint32_t>(it - global.begin());
  }

  std::uint32_t mul(std::uint32_t i, std::uint32_t j) const {
    if (!dense.empty()) return dense[std::size_t{i} * n + j];
    return pos(t->mult(global[i], global[j]));
  }
};

LocalPGroup make_local(const ElementTable& t, const SubgroupHandle& P) {
  LocalPGroup loc;
  loc.t = &t;
  loc.n = static_cast<std::uint32_t>(P.members.size());
  if (loc.n == 0 || P.members.front() != 0)
    throw PreconditionError("subgroup handle must contain the identity");
  if (!std::is_sorted(P.members.begin(), P.members.end()))
    throw PreconditionError("subgroup handle members must be sorted");
  loc.global = P.members;

  if (loc.n == 1) {
    loc.p = 2;  // never consulted: the trivial group extends nowhere
    loc.m = 0;
    loc.inv = {0};
    loc.powp = {0};
    loc.abelian = true;
    return loc;
  }
  auto factors = factorize(loc.n);
  if (factors.size() != 1)
    throw PreconditionError("handle order is not a prime power");
  loc.p = static_cast<unsigned>(factors[0].first);
  loc.m = factors[0].second;

  if (loc.n <= kDenseLocalLimit) {
    loc.dense.resize(std::size_t{loc.n} * loc.n);
    for (std::uint32_t i = 0; i < loc.n; ++i)
      for (std::uint32_t j = 0; j < loc.n; ++j)
        loc.dense[std::size_t{i} * loc.n + j] = static_cast<std::uint16_t>(
            loc.pos(t.mult(loc.global[i], loc.global[j])));
    loc.abelian = true;
    for (std::uint32_t i = 0; i < loc.n && loc.abelian; ++i)
      for (std::uint32_t j = i + 1; j < loc.n; ++j)
        if (loc.dense[std::size_t{i} * loc.n + j] !=
            loc.dense[std::size_t{j} * loc.n + i]) {
          loc.abelian = false;
          break;
        }
  } else {
    loc.abelian = false;  // unknown; false is always safe, only slower
  }

  loc.inv.resize(loc.n);
  loc.powp.resize(loc.n);
  for (std::uint32_t i = 0; i < loc.n; ++i)
    loc.inv[i] = loc.pos(t.inv(loc.global[i]));
  for (std::uint32_t i = 0; i < loc.n; ++i) {
    std::uint32_t acc = 0, base = i;
    unsigned e = loc.p;
    while (e > 0) {
      if (e & 1) acc = loc.mul(acc, base);
      base = loc.mul(base, base);
      e >>= 1;
    }
    loc.powp[i] = acc;
  }
  return loc;
}

// members must be the bit list of h
bool normalizes(const LocalPGroup& loc, const Mask& h,
                const std::vector<std::uint32_t>& members, std::uint32_t y) {
  std::uint32_t yi = loc.inv[y];
  for (std::uint32_t x : members) {
    if (!h.test(loc.mul(loc.mul(y, x), yi))) return false;
  }
  return true;
}

// K = H u Hx u ... u Hx^(p-1); valid when x normalizes H and x^p lies in H
Mask extend_by(const LocalPGroup& loc, const Mask& h,
               const std::vector<std::uint32_t>& members, std::uint32_t x) {
  Mask k = h;
  std::uint32_t xj = x;
  for (unsigned j = 1; j < loc.p; ++j) {
    for (std::uint32_t hm : members) k.set(loc.mul(hm, xj));
    xj = loc.mul(xj, x);
  }
  return k;
}

// Subgroups of P of order p^k for k = 0..up_to, one vector of masks per
// level, each in deterministic discovery order. Level k+1 is built from
// level k by cyclic extension: every subgroup K of order p^(k+1) has a
// maximal (hence normal) subgroup H with K = <H, x> for any x in K \ H,
// and such x satisfies x^p in H and normalizes H. Candidates x that land
// in an already-built K are skipped via the processed mask: <H, x> for
// x in K \ H is exactly K again.
std::vector<std::vector<Mask>> extension_levels(const LocalPGroup& loc,
                                                unsigned up_to,
                                                const Limits& lim) {
  std::vector<std::vector<Mask>> levels;
  Mask trivial = make_mask(loc.n);
  trivial.set(0);
  levels.push_back({trivial});

  for (unsigned k = 0; k < up_to; ++k) {
    std::vector<Mask> next;
    std::unordered_set<Mask, MaskHash> seen;
    for (const Mask& h : levels[k]) {
      auto members = h.bits();
      Mask processed = h;
      for (std::uint32_t x = 1; x < loc.n; ++x) {
        if (processed.test(x)) continue;
        if (!h.test(loc.powp[x])) {
          // x^p outside H: x generates no extension of H, and it cannot lie
          // in any valid K (every y in K \ H has y^p in H), so mark it done
          processed.set(x);
          continue;
        }
        if (!loc.abelian && !normalizes(loc, h, members, x)) continue;
        Mask kk = extend_by(loc, h, members, x);
        processed.or_with(kk);
        if (seen.insert(kk).second) {
          if (next.size() + 1 > lim.max_subgroups)
            throw CapError("more than " + std::to_string(lim.max_subgroups) +
                           " subgroups of order " + std::to_string(loc.p) +
                           "^" + std::to_string(k + 1) +
                           "; raise the subgroup cap to proceed");
          next.push_back(std::move(kk));
        }
      }
    }
    levels.push_back(std::move(next));
  }
  return levels;
}

struct VecHash {
  std::size_t operator()(const std::vector<std::uint32_t>& v) const {
    std::size_t h = 1469598103934665603ull;
    for (auto x : v) {
      h ^= x;
      h *= 1099511628211ull;
    }
    return h;
  }
};

std::vector<std::uint32_t> locals_to_globals(const LocalPGroup& loc,
                                             const Mask& m) {
  auto bits = m.bits();
  std::vector<std::uint32_t> out;
  out.reserve(bits.size());
  for (auto b : bits) out.push_back(loc.global[b]);
  return out;  // ascending: local order follows sorted global order
}

// expand the conjugation orbits of the given seed subgroups under G;
// returns one row per distinct orbit plus the total number of subgroups
std::pair<std::vector<OrbitRow>, std::uint64_t> fuse_orbits(
    const ElementTable& t, std::vector<std::vector<std::uint32_t>> seeds,
    bool group_abelian, const Limits& lim) {
  std::vector<OrbitRow> rows;
  if (group_abelian) {
    rows.reserve(seeds.size());
    for (auto& s : seeds)
      rows.push_back(OrbitRow{SubgroupHandle{std::move(s)}, 1});
    std::uint64_t total = rows.size();
    return {std::move(rows), total};
  }

  const auto& gens = t.group().generators();
  std::vector<std::pair<Permutation, Permutation>> conj_gens;
  conj_gens.reserve(gens.size());
  for (const auto& g : gens) conj_gens.emplace_back(g, g.inverse());

  std::unordered_set<std::vector<std::uint32_t>, VecHash> seen;
  std::uint64_t total = 0;
  for (auto& seed : seeds) {
    if (seen.count(seed)) continue;
    std::vector<std::vector<std::uint32_t>> queue{seed};
    seen.insert(seed);
    std::uint64_t len = 0;
    for (std::size_t qi = 0; qi < queue.size(); ++qi) {
      ++len;
      std::vector<std::uint32_t> cur = queue[qi];
      for (const auto& [g, gi] : conj_gens) {
        std::vector<std::uint32_t> img;
        img.reserve(cur.size());
        for (auto idx : cur)
          img.push_back(t.index_of(compose(compose(g, t.element(idx)), gi)));
        std::sort(img.begin(), img.end());
        if (seen.insert(img).second) {
          if (seen.size() > lim.max_subgroups)
            throw CapError("conjugation fusion exceeds the subgroup cap of " +
                           std::to_string(lim.max_subgroups));
          queue.push_back(std::move(img));
        }
      }
    }
    total += len;
    rows.push_back(OrbitRow{SubgroupHandle{std::move(seed)}, len});
  }
  if (total != seen.size())
    throw std::logic_error("fusion accounting mismatch");
  return {std::move(rows), total};
}

CountReport build_report(const ElementTable& t, const LocalPGroup& loc,
                         const std::vector<Mask>& level, unsigned p, unsigned a,
                         unsigned m, bool group_abelian, const Limits& lim) {
  CountReport r;
  r.p = p;
  r.a = a;
  std::vector<std::vector<std::uint32_t>> seeds;
  seeds.reserve(level.size());
  for (const auto& mask : level) seeds.push_back(locals_to_globals(loc, mask));
  auto [rows, total] = fuse_orbits(t, std::move(seeds), group_abelian, lim);
  r.orbits = std::move(rows);
  r.count = total;
  BigInt mp = r.count % p;
  BigInt mp2 = r.count % BigInt(std::uint64_t{p} * p);
  r.mod_p = mp.convert_to<unsigned>();
  r.mod_p2 = mp2.convert_to<unsigned>();
  r.sylow_order = 1;
  for (unsigned i = 0; i < m; ++i) r.sylow_order *= p;
  return r;
}

std::vector<std::uint32_t> p_element_candidates(const ElementTable& t,
                                                unsigned p) {
  std::vector<std::uint32_t> out;
  for (std::uint32_t i = 0; i < t.size(); ++i) {
    std::uint64_t ord = t.element_order(i);
    while (ord % p == 0) ord /= p;
    if (ord == 1 && i != 0) out.push_back(i);
  }
  return out;
}

}  // namespace

SubgroupHandle sylow_subgroup(const ElementTable& t, unsigned p) {
  if (!is_prime(p)) throw PreconditionError("p must be prime");
  const unsigned m = p_exponent(t.size(), p);
  const std::uint64_t target = ipow(p, m);

  SubgroupHandle q{{0}};
  if (target == 1) return q;
  auto candidates = p_element_candidates(t, p);
  while (q.members.size() < target) {
    std::uint32_t chosen = 0;
    bool found = false;
    for (std::uint32_t x : candidates) {
      if (q.contains(x)) continue;
      bool ok = true;
      for (auto qm : q.members) {
        if (!q.contains(t.conj(qm, x))) {
          ok = false;
          break;
        }
      }
      if (ok) {
        chosen = x;
        found = true;
        break;
      }
    }
    if (!found)
      throw std::logic_error("Sylow growth stalled; table is inconsistent");
    // absorb <chosen>: Q<x> is a p-group since x normalizes Q
    std::uint64_t xo = t.element_order(chosen);
    std::vector<std::uint32_t> grown;
    std::uint32_t xj = 0;
    for (std::uint64_t j = 0; j < xo; ++j) {
      for (auto qm : q.members) grown.push_back(t.mult(qm, xj));
      xj = t.mult(xj, chosen);
    }
    std::sort(grown.begin(), grown.end());
    grown.erase(std::unique(grown.begin(), grown.end()), grown.end());
    q.members = std::move(grown);
  }
  return q;
}

std::vector<SubgroupHandle> p_subgroups_of_order(const ElementTable& t,
                                                 const SubgroupHandle& P,
                                                 unsigned a,
                                                 const Limits& lim) {
  LocalPGroup loc = make_local(t, P);
  if (a > loc.m)
    throw PreconditionError("p^a exceeds the order of the given p-group");
  auto levels = extension_levels(loc, a, lim);
  std::vector<SubgroupHandle> out;
  out.reserve(levels[a].size());
  for (const auto& mask : levels[a])
    out.push_back(SubgroupHandle{locals_to_globals(loc, mask)});
  return out;
}

namespace {

std::shared_ptr<const CountProfile> compute_profile(const ElementTable& t,
                                                    unsigned p, unsigned up_to,
                                                    const Limits& lim) {
  const unsigned m = p_exponent(t.size(), p);
  SubgroupHandle P = sylow_subgroup(t, p);
  LocalPGroup loc = make_local(t, P);
  auto levels = extension_levels(loc, std::min(up_to, m), lim);
  const bool group_abelian = is_abelian(t.group());
  auto profile = std::make_shared<CountProfile>();
  profile->p = p;
  profile->m = m;
  for (unsigned a = 0; a < levels.size(); ++a)
    profile->per_a.push_back(
        build_report(t, loc, levels[a], p, a, m, group_abelian, lim));
  return profile;
}

bool fits_cap(const CountProfile& profile, const Limits& lim) {
  for (const auto& r : profile.per_a)
    if (r.count > lim.max_subgroups) return false;
  return true;
}

}  // namespace

std::shared_ptr<const CountProfile> count_profile(const ElementTable& t,
                                                  unsigned p,
                                                  const Limits& lim) {
  if (!is_prime(p)) throw PreconditionError("p must be prime");
  {
    std::lock_guard<std::mutex> lk(t.profile_cache().mu);
    auto it = t.profile_cache().by_p.find(p);
    if (it != t.profile_cache().by_p.end()) {
      auto cached = std::static_pointer_cast<const CountProfile>(it->second);
      if (fits_cap(*cached, lim)) return cached;
    }
  }
  auto profile = compute_profile(t, p, ~0u, lim);
  {
    std::lock_guard<std::mutex> lk(t.profile_cache().mu);
    t.profile_cache().by_p[p] = profile;
  }
  return profile;
}

CountReport count_subgroups_of_order(const ElementTable& t, unsigned p,
                                     unsigned a, const Limits& lim) {
  if (!is_prime(p)) throw PreconditionError("p must be prime");
  const unsigned m = p_exponent(t.size(), p);
  if (a > m)
    throw PreconditionError("p^a must divide the group order (p=" +
                            std::to_string(p) + ", a=" + std::to_string(a) +
                            ")");
  {
    std::lock_guard<std::mutex> lk(t.profile_cache().mu);
    auto it = t.profile_cache().by_p.find(p);
    if (it != t.profile_cache().by_p.end()) {
      auto cached = std::static_pointer_cast<const CountProfile>(it->second);
      if (fits_cap(*cached, lim)) return cached->per_a[a];
    }
  }
  // partial run: build levels only up to a, fuse only level a
  SubgroupHandle P = sylow_subgroup(t, p);
  LocalPGroup loc = make_local(t, P);
  auto levels = extension_levels(loc, a, lim);
  return build_report(t, loc, levels[a], p, a, m, is_abelian(t.group()), lim);
}

std::uint64_t count_sylow(const ElementTable& t, unsigned p,
                          const Limits& lim) {
  SubgroupHandle P = sylow_subgroup(t, p);
  if (P.members.size() == 1) return 1;
  auto [rows, total] =
      fuse_orbits(t, {P.members}, is_abelian(t.group()), lim);
  (void)rows;
  return total;
}

}  // namespace psylow
