#include "psylow/field.hpp"

#include <cstddef>

#include "psylow/errors.hpp"
#include "psylow/limits.hpp"
#include "psylow/numbers.hpp"

namespace psylow {

namespace {

// polynomials over GF(p), coefficients low degree first, no trailing zeros
using Poly = std::vector<unsigned>;

Poly trim(Poly f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
  return f;
}

Poly poly_rem(Poly r, const Poly& d, unsigned p) {
  r = trim(std::move(r));
  while (r.size() >= d.size()) {
    // d is monic, so the quotient digit is just the leading coefficient
    unsigned c = r.back();
    std::size_t shift = r.size() - d.size();
    for (std::size_t i = 0; i < d.size(); ++i) {
      unsigned sub = (c * d[i]) % p;
      r[shift + i] = (r[shift + i] + p - sub) % p;
    }
    r = trim(std::move(r));
  }
  return r;
}

Poly poly_mul(const Poly& a, const Poly& b, unsigned p) {
  if (a.empty() || b.empty()) return {};
  Poly out(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j)
      out[i + j] = (out[i + j] + a[i] * b[j]) % p;
  return out;
}

bool divides(const Poly& d, const Poly& f, unsigned p) {
  return poly_rem(f, d, p).empty();
}

// trial division by every monic polynomial of degree 1..deg(f)/2
bool is_irreducible(const Poly& f, unsigned p) {
  unsigned deg = static_cast<unsigned>(f.size()) - 1;
  for (unsigned d = 1; 2 * d <= deg; ++d) {
    std::uint64_t count = ipow(p, d);
    for (std::uint64_t code = 0; code < count; ++code) {
      Poly g(d + 1, 0);
      std::uint64_t c = code;
      for (unsigned i = 0; i < d; ++i) {
        g[i] = static_cast<unsigned>(c % p);
        c /= p;
      }
      g[d] = 1;
      if (divides(g, f, p)) return false;
    }
  }
  return true;
}

unsigned encode(const Poly& f, unsigned p) {
  unsigned v = 0;
  for (std::size_t i = f.size(); i-- > 0;) v = v * p + f[i];
  return v;
}

Poly decode(unsigned v, unsigned p, unsigned k) {
  Poly f(k, 0);
  for (unsigned i = 0; i < k; ++i) {
    f[i] = v % p;
    v /= p;
  }
  return trim(std::move(f));
}

}  // namespace

std::uint16_t FieldTable::neg_of(unsigned a) const {
  // digitwise p-complement
  unsigned v = 0, mulp = 1, x = a;
  for (unsigned i = 0; i < k; ++i) {
    unsigned d = x % p;
    x /= p;
    v += ((p - d) % p) * mulp;
    mulp *= p;
  }
  return static_cast<std::uint16_t>(v);
}

std::uint16_t FieldTable::inv_of(unsigned a) const {
  if (a == 0) throw PreconditionError("0 has no multiplicative inverse");
  for (unsigned b = 1; b < q; ++b)
    if (mul_of(a, b) == 1) return static_cast<std::uint16_t>(b);
  throw PreconditionError("field table is corrupt");
}

std::uint16_t FieldTable::pow_of(unsigned a, std::uint64_t e) const {
  unsigned acc = 1, base = a;
  while (e > 0) {
    if (e & 1) acc = mul_of(acc, base);
    base = mul_of(base, base);
    e >>= 1;
  }
  return static_cast<std::uint16_t>(acc);
}

std::uint64_t FieldTable::unit_order(unsigned a) const {
  if (a == 0) throw PreconditionError("0 is not a unit");
  std::uint64_t n = 1;
  unsigned x = a;
  while (x != 1) {
    x = mul_of(x, a);
    ++n;
  }
  return n;
}

FieldTable make_field(unsigned q) {
  std::uint64_t p64 = 0;
  unsigned k = 0;
  if (q > kMaxFieldSize || !is_prime_power(q, &p64, &k))
    throw PreconditionError("field size must be a prime power <= " +
                            std::to_string(kMaxFieldSize));
  const unsigned p = static_cast<unsigned>(p64);

  FieldTable f;
  f.q = q;
  f.p = p;
  f.k = k;
  f.add.resize(std::size_t{q} * q);
  f.mul.resize(std::size_t{q} * q);

  if (k == 1) {
    for (unsigned a = 0; a < q; ++a)
      for (unsigned b = 0; b < q; ++b) {
        f.add[a * q + b] = static_cast<std::uint16_t>((a + b) % q);
        f.mul[a * q + b] = static_cast<std::uint16_t>((a * b) % q);
      }
  } else {
    // smallest monic irreducible of degree k, coefficients compared
    // low degree first (constant term most significant)
    Poly mod;
    bool found = false;
    std::vector<unsigned> c(k, 0);
    while (!found) {
      Poly cand(c.begin(), c.end());
      cand.push_back(1);
      if (is_irreducible(cand, p)) {
        mod = std::move(cand);
        found = true;
        break;
      }
      int i = static_cast<int>(k) - 1;
      while (i >= 0 && c[i] == p - 1) c[i--] = 0;
      if (i < 0) break;
      ++c[i];
    }
    if (!found) throw PreconditionError("no irreducible polynomial found");
    f.modulus.assign(mod.begin(), mod.end());
    f.modulus.resize(k + 1);

    for (unsigned a = 0; a < q; ++a) {
      Poly pa = decode(a, p, k);
      for (unsigned b = 0; b < q; ++b) {
        Poly pb = decode(b, p, k);
        Poly sum(k, 0);
        for (unsigned i = 0; i < k; ++i) {
          unsigned da = i < pa.size() ? pa[i] : 0;
          unsigned db = i < pb.size() ? pb[i] : 0;
          sum[i] = (da + db) % p;
        }
        f.add[a * q + b] = static_cast<std::uint16_t>(encode(trim(sum), p));
        Poly prod = poly_rem(poly_mul(pa, pb, p), mod, p);
        f.mul[a * q + b] = static_cast<std::uint16_t>(encode(prod, p));
      }
    }
  }

  for (unsigned a = 1; a < q; ++a) {
    if (f.unit_order(a) == q - 1) {
      f.primitive = static_cast<std::uint16_t>(a);
      break;
    }
  }
  return f;
}

}  // namespace psylow
