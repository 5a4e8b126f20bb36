#pragma once

#include "psylow/bigint.hpp"
#include "psylow/partition.hpp"

namespace psylow {

// Gaussian binomial [n choose k]_q, exact: the partial products
// prod_{j<=i} (q^(n-k+j) - 1) / (q^j - 1) are themselves Gaussian
// binomials, so every intermediate division is exact. q >= 2.
BigInt gaussian_binomial(unsigned n, unsigned k, unsigned q);

// Number of subgroups of type mu in a finite abelian p-group of type lambda:
//   prod_i p^(mu'_{i+1} (lambda'_i - mu'_i)) *
//          [lambda'_i - mu'_{i+1} choose mu'_i - mu'_{i+1}]_p
// (primed = conjugate partition, 1-based rows); zero unless mu' <= lambda'
// componentwise. p must be prime.
BigInt hall_count_type(const Partition& lambda, const Partition& mu,
                       unsigned p);

// Number of subgroups of order p^a in an abelian p-group of type lambda:
// the sum of hall_count_type over all partitions mu of a (reverse
// lexicographic order). Requires a <= |lambda|.
BigInt hall_count_order(const Partition& lambda, unsigned a, unsigned p);

}  // namespace psylow
