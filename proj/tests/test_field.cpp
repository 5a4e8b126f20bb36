#include <doctest.h>

#include "psylow/errors.hpp"
#include "psylow/field.hpp"
#include "psylow/numbers.hpp"

using namespace psylow;

namespace {

// full axiom sweep; q is small enough that cubic loops are cheap
void check_field_axioms(const FieldTable& f) {
  unsigned q = f.q;
  for (unsigned a = 0; a < q; ++a) {
    CHECK(f.add_of(a, 0) == a);
    CHECK(f.mul_of(a, 1) == a);
    CHECK(f.mul_of(a, 0) == 0);
    CHECK(f.add_of(a, f.neg_of(a)) == 0);
    if (a != 0) CHECK(f.mul_of(a, f.inv_of(a)) == 1);
    for (unsigned b = 0; b < q; ++b) {
      CHECK(f.add_of(a, b) == f.add_of(b, a));
      CHECK(f.mul_of(a, b) == f.mul_of(b, a));
      for (unsigned c = 0; c < q; ++c) {
        CHECK(f.add_of(f.add_of(a, b), c) == f.add_of(a, f.add_of(b, c)));
        CHECK(f.mul_of(f.mul_of(a, b), c) == f.mul_of(a, f.mul_of(b, c)));
        CHECK(f.mul_of(a, f.add_of(b, c)) ==
              f.add_of(f.mul_of(a, b), f.mul_of(a, c)));
      }
    }
  }
}

}  // namespace

TEST_CASE("field axioms hold for every supported size up to 27") {
  for (unsigned q : {2, 3, 4, 5, 7, 8, 9, 11, 13, 16, 25, 27}) {
    CAPTURE(q);
    FieldTable f = make_field(q);
    CHECK(f.q == q);
    check_field_axioms(f);
    CHECK(f.unit_order(f.primitive) == q - 1);
  }
}

TEST_CASE("chosen moduli are the lexicographically smallest irreducibles") {
  // coefficient vectors are compared low degree first
  CHECK(make_field(4).modulus == std::vector<std::uint16_t>{1, 1, 1});
  CHECK(make_field(8).modulus == std::vector<std::uint16_t>{1, 0, 1, 1});
  CHECK(make_field(9).modulus == std::vector<std::uint16_t>{1, 0, 1});
  CHECK(make_field(16).modulus == std::vector<std::uint16_t>{1, 0, 0, 1, 1});
  CHECK(make_field(7).modulus.empty());
}

TEST_CASE("primitive elements are minimal") {
  CHECK(make_field(4).primitive == 2);
  CHECK(make_field(7).primitive == 3);
  CHECK(make_field(8).primitive == 2);
  CHECK(make_field(9).primitive == 4);
  CHECK(make_field(16).primitive == 2);
}

TEST_CASE("powers and unit orders") {
  FieldTable f = make_field(9);
  unsigned g = f.primitive;
  CHECK(f.pow_of(g, 0) == 1);
  CHECK(f.pow_of(g, 8) == 1);
  CHECK(f.pow_of(g, 4) == f.mul_of(f.mul_of(g, g), f.mul_of(g, g)));
  for (unsigned a = 1; a < 9; ++a) CHECK((8 % f.unit_order(a)) == 0);
  // the element used by the affine constructor: g^((q-1)/p)
  FieldTable f7 = make_field(7);
  CHECK(f7.pow_of(f7.primitive, 2) == 2);
}

TEST_CASE("rejects non prime powers and oversized fields") {
  CHECK_THROWS_AS(make_field(1), PreconditionError);
  CHECK_THROWS_AS(make_field(6), PreconditionError);
  CHECK_THROWS_AS(make_field(12), PreconditionError);
  CHECK_THROWS_AS(make_field(1024), PreconditionError);
}

TEST_CASE("prime power detection") {
  std::uint64_t p = 0;
  unsigned k = 0;
  CHECK(is_prime_power(8, &p, &k));
  CHECK(p == 2);
  CHECK(k == 3);
  CHECK(is_prime_power(49, &p, &k));
  CHECK(p == 7);
  CHECK(k == 2);
  CHECK_FALSE(is_prime_power(1));
  CHECK_FALSE(is_prime_power(6));
  CHECK_FALSE(is_prime_power(100));
  CHECK(is_prime(997));
  CHECK_FALSE(is_prime(1));
  CHECK(p_exponent(360, 2) == 3);
  CHECK(p_exponent(360, 7) == 0);
  CHECK(ipow(3, 4) == 81);
  CHECK_THROWS_AS(ipow(10, 30), PreconditionError);
}
