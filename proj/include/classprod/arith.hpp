#ifndef CLASSPROD_ARITH_HPP_
#define CLASSPROD_ARITH_HPP_

#include <cstddef>
#include <utility>
#include <vector>

namespace classprod {

bool is_prime(std::size_t n) noexcept;

//! Prime factorisation as (prime, exponent) pairs in increasing prime order;
//! empty for n <= 1.
std::vector<std::pair<std::size_t, std::size_t>> factorize(std::size_t n);

//! True iff n = 2^k for some k >= 1.
bool is_power_of_two_above_one(std::size_t n) noexcept;

//! True iff n is 1 or a power of a single prime.
bool is_prime_power_or_one(std::size_t n);

}  // namespace classprod

#endif  // CLASSPROD_ARITH_HPP_
