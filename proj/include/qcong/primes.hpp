#pragma once

#include <vector>

namespace qcong {

bool is_prime(long n);
/// Odd primes 3 <= p <= limit, ascending (sieve of Eratosthenes).
std::vector<long> odd_primes_up_to(long limit);

}  // namespace qcong
