#include "qcong/primes.hpp"

#include <gmpxx.h>

namespace qcong {

bool is_prime(long n) {
  if (n < 2) return false;
  const mpz_class z = n;
  return mpz_probab_prime_p(z.get_mpz_t(), 30) != 0;
}

std::vector<long> odd_primes_up_to(long limit) {
  std::vector<long> out;
  if (limit < 3) return out;
  std::vector<bool> composite(static_cast<std::size_t>(limit) + 1, false);
  for (long p = 3; p <= limit; p += 2) {
    if (composite[static_cast<std::size_t>(p)]) continue;
    out.push_back(p);
    for (long m = p * p; m <= limit; m += 2 * p) composite[static_cast<std::size_t>(m)] = true;
  }
  return out;
}

}  // namespace qcong
