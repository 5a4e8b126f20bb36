#include "psylow/perm.hpp"

#include <numeric>
#include <sstream>

#include "psylow/errors.hpp"
#include "psylow/limits.hpp"

namespace psylow {

Permutation::Permutation(unsigned degree) {
  if (degree == 0 || degree > kMaxDegree)
    throw PreconditionError("permutation degree must be in 1.." +
                            std::to_string(kMaxDegree));
  img_.resize(degree);
  std::iota(img_.begin(), img_.end(), std::uint16_t{0});
}

Permutation Permutation::from_images(std::vector<std::uint16_t> images) {
  const std::size_t n = images.size();
  if (n == 0 || n > kMaxDegree)
    throw PreconditionError("permutation degree must be in 1.." +
                            std::to_string(kMaxDegree));
  std::vector<bool> seen(n, false);
  for (auto v : images) {
    if (v >= n || seen[v])
      throw PreconditionError("image list is not a permutation");
    seen[v] = true;
  }
  return Permutation(Unchecked{}, std::move(images));
}

Permutation Permutation::from_cycles(unsigned degree,
                                     const std::vector<std::vector<Point>>& cycles) {
  Permutation id(degree);
  std::vector<std::uint16_t> img = id.img_;
  std::vector<bool> used(degree, false);
  for (const auto& c : cycles) {
    for (std::size_t i = 0; i < c.size(); ++i) {
      Point from = c[i];
      Point to = c[(i + 1) % c.size()];
      if (from >= degree || to >= degree)
        throw PreconditionError("cycle point out of range");
      if (used[from]) throw PreconditionError("cycles are not disjoint");
      used[from] = true;
      img[from] = static_cast<std::uint16_t>(to);
    }
  }
  return from_images(std::move(img));
}

bool Permutation::is_identity() const {
  for (std::size_t i = 0; i < img_.size(); ++i)
    if (img_[i] != i) return false;
  return true;
}

Permutation Permutation::inverse() const {
  std::vector<std::uint16_t> inv(img_.size());
  for (std::size_t i = 0; i < img_.size(); ++i)
    inv[img_[i]] = static_cast<std::uint16_t>(i);
  return Permutation(Unchecked{}, std::move(inv));
}

std::uint64_t Permutation::order() const {
  std::vector<bool> seen(img_.size(), false);
  std::uint64_t ord = 1;
  for (std::size_t i = 0; i < img_.size(); ++i) {
    if (seen[i]) continue;
    std::uint64_t len = 0;
    for (std::size_t j = i; !seen[j]; j = img_[j]) {
      seen[j] = true;
      ++len;
    }
    ord = std::lcm(ord, len);
  }
  return ord;
}

std::string Permutation::to_cycle_string() const {
  std::vector<bool> seen(img_.size(), false);
  std::ostringstream out;
  bool any = false;
  for (std::size_t i = 0; i < img_.size(); ++i) {
    if (seen[i] || img_[i] == i) continue;
    out << '(';
    bool first = true;
    for (std::size_t j = i; !seen[j]; j = img_[j]) {
      seen[j] = true;
      if (!first) out << ' ';
      out << j;
      first = false;
    }
    out << ')';
    any = true;
  }
  return any ? out.str() : "()";
}

Permutation compose(const Permutation& p, const Permutation& q) {
  if (p.degree() != q.degree())
    throw PreconditionError("degree mismatch in compose");
  std::vector<std::uint16_t> img(p.degree());
  for (unsigned i = 0; i < p.degree(); ++i)
    img[i] = p.img_[q.img_[i]];
  return Permutation(Permutation::Unchecked{}, std::move(img));
}

unsigned fixed_point_count(const Permutation& p) {
  unsigned n = 0;
  for (unsigned i = 0; i < p.degree(); ++i)
    if (p.apply(i) == i) ++n;
  return n;
}

std::size_t PermHash::operator()(const Permutation& p) const {
  std::size_t h = 1469598103934665603ull;
  for (auto x : p.images()) {
    h ^= x;
    h *= 1099511628211ull;
  }
  return h;
}

}  // namespace psylow
