#ifndef SECRING_COHOMOLOGY_HPP
#define SECRING_COHOMOLOGY_HPP

#include <secring/divisor.hpp>
#include <secring/rational.hpp>

namespace secring {

/// Binomial coefficient as the polynomial n(n-1)...(n-k+1)/k!, exact over
/// arbitrary-precision integers. Defined for any integer n; zero for k < 0.
/// May be negative for negative n (used by Euler-characteristic checks).
BigInt binomial(const BigInt& n, long k);

/// h^i(P^d, O(k)): C(k+d, d) if i = 0 and k >= 0; C(-k-1, d) if i = d and
/// k <= -d-1; zero otherwise. Throws std::out_of_range unless 0 <= i <= d.
BigInt h_line(int d, int i, const BigInt& k);

/// Cohomology of a Q-divisor twist: O(E) = O([E]), so this is
/// h_line(d, i, deg [E]). Rounding happens before taking the degree.
BigInt h_q(const QDivisor& E, int i);

} // namespace secring

#endif
