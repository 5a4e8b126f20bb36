#include "psylow/element_table.hpp"

#include <algorithm>
#include <unordered_set>

#include "psylow/errors.hpp"

namespace psylow {

ElementTable ElementTable::enumerate(const PermGroup& g, const Limits& lim) {
  ElementTable t;
  t.degree_ = g.degree();
  t.group_ = std::make_shared<const PermGroup>(g);
  t.cache_ = std::make_shared<detail::ProfileCache>();

  std::unordered_set<Permutation, PermHash> seen;
  std::vector<Permutation> frontier;
  frontier.emplace_back(g.degree());
  seen.insert(frontier.front());
  for (std::size_t i = 0; i < frontier.size(); ++i) {
    for (const auto& s : g.generators()) {
      Permutation c = compose(frontier[i], s);
      if (seen.insert(c).second) {
        if (seen.size() > lim.max_elements)
          throw CapError("group exceeds the element cap of " +
                         std::to_string(lim.max_elements));
        frontier.push_back(std::move(c));
      }
    }
  }
  std::sort(frontier.begin(), frontier.end());
  t.elems_ = std::move(frontier);

  const std::uint32_t n = static_cast<std::uint32_t>(t.elems_.size());
  t.inv_.resize(n);
  t.ord_.resize(n);
  for (std::uint32_t i = 0; i < n; ++i) {
    t.inv_[i] = t.index_of(t.elems_[i].inverse());
    t.ord_[i] = static_cast<std::uint32_t>(t.elems_[i].order());
  }
  return t;
}

std::uint32_t ElementTable::index_of(const Permutation& p) const {
  auto it = std::lower_bound(elems_.begin(), elems_.end(), p);
  if (it == elems_.end() || *it != p)
    throw PreconditionError("permutation is not a group element");
  return static_cast<std::uint32_t>(it - elems_.begin());
}

std::uint32_t ElementTable::mult(std::uint32_t i, std::uint32_t j) const {
  return index_of(compose(elems_[i], elems_[j]));
}

std::uint32_t ElementTable::conj(std::uint32_t x, std::uint32_t g) const {
  return index_of(
      compose(compose(elems_[g], elems_[x]), elems_[inv_[g]]));
}

std::uint32_t ElementTable::power(std::uint32_t i, std::uint64_t e) const {
  std::uint32_t acc = 0;  // identity
  std::uint32_t base = i;
  while (e > 0) {
    if (e & 1) acc = mult(acc, base);
    base = mult(base, base);
    e >>= 1;
  }
  return acc;
}

bool SubgroupHandle::contains(std::uint32_t idx) const {
  return std::binary_search(members.begin(), members.end(), idx);
}

SubgroupHandle subgroup_closure(const ElementTable& t,
                                std::vector<std::uint32_t> seeds) {
  std::vector<bool> in(t.size(), false);
  std::vector<std::uint32_t> members{0};
  in[0] = true;
  for (auto s : seeds) {
    if (s >= t.size()) throw PreconditionError("seed index out of range");
    if (!in[s]) {
      in[s] = true;
      members.push_back(s);
    }
  }
  // product closure; inverses are free in a finite group
  for (std::size_t i = 0; i < members.size(); ++i) {
    for (std::size_t j = 0; j < members.size(); ++j) {
      for (std::uint32_t c : {t.mult(members[i], members[j]),
                              t.mult(members[j], members[i])}) {
        if (!in[c]) {
          in[c] = true;
          members.push_back(c);
        }
      }
    }
  }
  std::sort(members.begin(), members.end());
  return SubgroupHandle{std::move(members)};
}

bool is_subgroup(const ElementTable& t, const SubgroupHandle& h) {
  if (h.members.empty() || h.members.front() != 0) return false;
  if (!std::is_sorted(h.members.begin(), h.members.end())) return false;
  if (std::adjacent_find(h.members.begin(), h.members.end()) !=
      h.members.end())
    return false;
  if (h.members.back() >= t.size()) return false;
  for (auto a : h.members)
    for (auto b : h.members)
      if (!h.contains(t.mult(a, b))) return false;
  return true;
}

SubgroupHandle normalizer(const ElementTable& t, const SubgroupHandle& h) {
  SubgroupHandle out;
  const std::uint32_t n = static_cast<std::uint32_t>(t.size());
  for (std::uint32_t g = 0; g < n; ++g) {
    bool ok = true;
    for (auto m : h.members) {
      if (!h.contains(t.conj(m, g))) {
        ok = false;
        break;
      }
    }
    if (ok) out.members.push_back(g);
  }
  return out;
}

std::uint64_t stabilizer_order(const ElementTable& t, Point pt) {
  if (pt >= t.degree()) throw PreconditionError("point out of range");
  std::uint64_t n = 0;
  for (const auto& p : t.elements())
    if (p.apply(pt) == pt) ++n;
  return n;
}

bool is_2_transitive(const ElementTable& t) {
  if (t.degree() < 2) return false;
  std::uint64_t s1 = 0, s2 = 0;
  for (const auto& p : t.elements()) {
    std::uint64_t f = fixed_point_count(p);
    s1 += f;
    s2 += f * f;
  }
  // Burnside: s1 == |G| iff transitive; rank 2 iff s2 == 2|G|
  return s1 == t.size() && s2 == 2 * t.size();
}

bool is_2_transitive(const PermGroup& g, const Limits& lim) {
  return is_2_transitive(ElementTable::enumerate(g, lim));
}

}  // namespace psylow
