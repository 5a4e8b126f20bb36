#include "psylow/numbers.hpp"

#include <limits>

#include "psylow/errors.hpp"

namespace psylow {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  if (n % 3 == 0) return n == 3;
  for (std::uint64_t d = 5; d <= n / d; d += 6) {
    if (n % d == 0 || n % (d + 2) == 0) return false;
  }
  return true;
}

std::vector<std::pair<std::uint64_t, unsigned>> factorize(std::uint64_t n) {
  if (n == 0) throw PreconditionError("cannot factorize 0");
  std::vector<std::pair<std::uint64_t, unsigned>> out;
  auto strip = [&](std::uint64_t p) {
    unsigned e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    if (e > 0) out.emplace_back(p, e);
  };
  strip(2);
  strip(3);
  for (std::uint64_t d = 5; d <= n / d; d += 6) {
    strip(d);
    strip(d + 2);
  }
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

unsigned p_exponent(std::uint64_t n, std::uint64_t p) {
  if (n == 0 || p < 2) throw PreconditionError("p_exponent needs n >= 1, p >= 2");
  unsigned e = 0;
  while (n % p == 0) {
    n /= p;
    ++e;
  }
  return e;
}

std::uint64_t ipow(std::uint64_t b, unsigned e) {
  std::uint64_t r = 1;
  for (unsigned i = 0; i < e; ++i) {
    if (b != 0 && r > std::numeric_limits<std::uint64_t>::max() / b)
      throw PreconditionError("integer power overflows 64 bits");
    r *= b;
  }
  return r;
}

bool is_prime_power(std::uint64_t q, std::uint64_t* p, unsigned* k) {
  if (q < 2) return false;
  auto f = factorize(q);
  if (f.size() != 1) return false;
  if (p) *p = f[0].first;
  if (k) *k = f[0].second;
  return true;
}

}  // namespace psylow
