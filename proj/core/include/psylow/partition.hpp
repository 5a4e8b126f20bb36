#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace psylow {

// integer partition: weakly decreasing positive parts; default is the empty
// partition of 0
class Partition {
public:
  Partition() = default;
  explicit Partition(std::vector<unsigned> parts);

  // "[2,1,1]" or "[]"; spaces allowed after commas
  static Partition parse(std::string_view text);

  const std::vector<unsigned>& parts() const { return parts_; }
  std::size_t size() const { return parts_.size(); }
  bool empty() const { return parts_.empty(); }
  unsigned weight() const;

  // parts_[i] for i < size, 0 beyond the end (1-based indexing is not used)
  unsigned part(std::size_t i) const { return i < parts_.size() ? parts_[i] : 0; }

  Partition conjugate() const;
  std::string to_string() const;

  friend bool operator==(const Partition& a, const Partition& b) {
    return a.parts_ == b.parts_;
  }
  friend bool operator<(const Partition& a, const Partition& b) {
    return a.parts_ < b.parts_;
  }

private:
  std::vector<unsigned> parts_;
};

// all partitions of n in reverse lexicographic order, [n] first, [1,...,1] last
std::vector<Partition> partitions_of(unsigned n);

}  // namespace psylow
