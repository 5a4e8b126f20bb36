#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <vector>

#include "psylow/limits.hpp"
#include "psylow/perm.hpp"
#include "psylow/perm_group.hpp"

namespace psylow {

namespace detail {
// per-prime memo slot; counting.cpp is the only reader/writer and stores
// CountProfile behind the void pointer (type-erased to avoid a header cycle)
struct ProfileCache {
  std::mutex mu;
  std::map<unsigned, std::shared_ptr<const void>> by_p;
};
}  // namespace detail

// Exhaustive element list of a finite permutation group, lexicographically
// sorted (the identity is always index 0). Enumeration is a plain closure
// walk, independent of the stabilizer chain, so comparing size() against
// Bsgs::order() is a genuine cross-check of two different algorithms.
class ElementTable {
public:
  static ElementTable enumerate(const PermGroup& g, const Limits& lim = {});

  std::uint64_t size() const { return elems_.size(); }
  unsigned degree() const { return degree_; }
  const Permutation& element(std::uint32_t i) const { return elems_[i]; }
  const std::vector<Permutation>& elements() const { return elems_; }
  const PermGroup& group() const { return *group_; }

  std::uint32_t index_of(const Permutation& p) const;  // PreconditionError if absent
  std::uint32_t mult(std::uint32_t i, std::uint32_t j) const;  // element(i) o element(j)
  std::uint32_t inv(std::uint32_t i) const { return inv_[i]; }
  std::uint32_t conj(std::uint32_t x, std::uint32_t g) const;  // g x g^-1
  std::uint32_t power(std::uint32_t i, std::uint64_t e) const;
  std::uint64_t element_order(std::uint32_t i) const { return ord_[i]; }

  detail::ProfileCache& profile_cache() const { return *cache_; }

private:
  ElementTable() = default;

  unsigned degree_ = 0;
  std::vector<Permutation> elems_;
  std::vector<std::uint32_t> inv_;
  std::vector<std::uint32_t> ord_;
  std::shared_ptr<const PermGroup> group_;
  std::shared_ptr<detail::ProfileCache> cache_;
};

// sorted element indices forming a subgroup; always contains 0 (the identity)
struct SubgroupHandle {
  std::vector<std::uint32_t> members;

  std::size_t order() const { return members.size(); }
  bool contains(std::uint32_t idx) const;

  friend bool operator==(const SubgroupHandle& a, const SubgroupHandle& b) {
    return a.members == b.members;
  }
};

// smallest subgroup containing the seeds
SubgroupHandle subgroup_closure(const ElementTable& t,
                                std::vector<std::uint32_t> seeds);

bool is_subgroup(const ElementTable& t, const SubgroupHandle& h);

// N_G(H) by scanning every element; cost O(|G| * |H|)
SubgroupHandle normalizer(const ElementTable& t, const SubgroupHandle& h);

std::uint64_t stabilizer_order(const ElementTable& t, Point pt);

// rank criterion: sum of squared fixed-point counts equals 2|G|
bool is_2_transitive(const ElementTable& t);
bool is_2_transitive(const PermGroup& g, const Limits& lim = {});

}  // namespace psylow
