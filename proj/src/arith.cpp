#include "classprod/arith.hpp"

namespace classprod {

bool is_prime(std::size_t n) noexcept {
  if (n < 2) {
    return false;
  }
  for (std::size_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      return false;
    }
  }
  return true;
}

std::vector<std::pair<std::size_t, std::size_t>> factorize(std::size_t n) {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t d = 2; d * d <= n; ++d) {
    std::size_t e = 0;
    while (n % d == 0) {
      n /= d;
      ++e;
    }
    if (e > 0) {
      out.emplace_back(d, e);
    }
  }
  if (n > 1) {
    out.emplace_back(n, 1);
  }
  return out;
}

bool is_power_of_two_above_one(std::size_t n) noexcept {
  return n > 1 && (n & (n - 1)) == 0;
}

bool is_prime_power_or_one(std::size_t n) {
  return n == 1 || factorize(n).size() == 1;
}

}  // namespace classprod
