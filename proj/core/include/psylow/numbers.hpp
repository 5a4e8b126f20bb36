#pragma once

#include <cstdint>
#include <utility>
#include <vector>

namespace psylow {

bool is_prime(std::uint64_t n);

// prime factorization with ascending primes, e.g. 360 -> {(2,3),(3,2),(5,1)}
std::vector<std::pair<std::uint64_t, unsigned>> factorize(std::uint64_t n);

// largest e with p^e dividing n; n >= 1, p >= 2
unsigned p_exponent(std::uint64_t n, std::uint64_t p);

// b^e with overflow detection (throws PreconditionError on overflow)
std::uint64_t ipow(std::uint64_t b, unsigned e);

// if q = p^k for a prime p and k >= 1, reports p and k
bool is_prime_power(std::uint64_t q, std::uint64_t* p = nullptr, unsigned* k = nullptr);

}  // namespace psylow
