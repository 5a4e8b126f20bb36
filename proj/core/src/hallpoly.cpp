#include "psylow/hallpoly.hpp"

#include <stdexcept>

#include "psylow/errors.hpp"
#include "psylow/numbers.hpp"

namespace psylow {

namespace {

BigInt big_pow(unsigned b, unsigned e) {
  BigInt r = 1;
  for (unsigned i = 0; i < e; ++i) r *= b;
  return r;
}

}  // namespace

BigInt gaussian_binomial(unsigned n, unsigned k, unsigned q) {
  if (q < 2) throw PreconditionError("gaussian binomial needs q >= 2");
  if (k > n) return 0;
  if (k > n - k) k = n - k;
  BigInt acc = 1;
  for (unsigned j = 1; j <= k; ++j) {
    acc *= big_pow(q, n - k + j) - 1;
    BigInt den = big_pow(q, j) - 1;
    BigInt rem;
    divide_qr(acc, den, acc, rem);
    if (rem != 0)
      throw std::logic_error("gaussian binomial division was not exact");
  }
  return acc;
}

BigInt hall_count_type(const Partition& lambda, const Partition& mu,
                       unsigned p) {
  if (!is_prime(p)) throw PreconditionError("p must be prime");
  if (mu.weight() > lambda.weight()) return 0;
  Partition lc = lambda.conjugate();
  Partition mc = mu.conjugate();
  std::size_t rows = std::max(lc.size(), mc.size());
  BigInt acc = 1;
  for (std::size_t i = 0; i < rows; ++i) {
    unsigned li = lc.part(i);
    unsigned mi = mc.part(i);
    unsigned mi1 = mc.part(i + 1);
    if (mi > li) return 0;
    acc *= big_pow(p, mi1 * (li - mi));
    acc *= gaussian_binomial(li - mi1, mi - mi1, p);
  }
  return acc;
}

BigInt hall_count_order(const Partition& lambda, unsigned a, unsigned p) {
  if (!is_prime(p)) throw PreconditionError("p must be prime");
  if (a > lambda.weight())
    throw PreconditionError("subgroup order exceeds the group order");
  BigInt total = 0;
  for (const Partition& mu : partitions_of(a))
    total += hall_count_type(lambda, mu, p);
  return total;
}

}  // namespace psylow
