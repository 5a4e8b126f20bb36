#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace psylow {

using Point = unsigned;

// A permutation of {0, ..., degree-1}, stored as its image sequence.
// Degree is capped at kMaxDegree, so images fit in 16 bits.
class Permutation {
public:
  explicit Permutation(unsigned degree);  // identity

  static Permutation from_images(std::vector<std::uint16_t> images);
  static Permutation from_cycles(unsigned degree,
                                 const std::vector<std::vector<Point>>& cycles);

  unsigned degree() const { return static_cast<unsigned>(img_.size()); }
  Point apply(Point pt) const { return img_[pt]; }
  Point operator[](Point pt) const { return img_[pt]; }
  const std::vector<std::uint16_t>& images() const { return img_; }

  bool is_identity() const;
  Permutation inverse() const;
  std::uint64_t order() const;  // lcm of cycle lengths
  std::string to_cycle_string() const;

  friend bool operator==(const Permutation& a, const Permutation& b) {
    return a.img_ == b.img_;
  }
  friend bool operator!=(const Permutation& a, const Permutation& b) {
    return a.img_ != b.img_;
  }
  // lexicographic on image sequences; the identity is minimal
  friend bool operator<(const Permutation& a, const Permutation& b) {
    return a.img_ < b.img_;
  }

  friend Permutation compose(const Permutation& p, const Permutation& q);

private:
  struct Unchecked {};
  Permutation(Unchecked, std::vector<std::uint16_t> images)
      : img_(std::move(images)) {}

  std::vector<std::uint16_t> img_;
};

// compose(p, q) applies q first: the result maps i to p(q(i))
Permutation compose(const Permutation& p, const Permutation& q);

unsigned fixed_point_count(const Permutation& p);

struct PermHash {
  std::size_t operator()(const Permutation& p) const;
};

}  // namespace psylow
