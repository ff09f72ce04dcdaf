#include <secring/cohomology.hpp>

#include <cassert>
#include <stdexcept>

namespace secring {

BigInt binomial(const BigInt& n, long k) {
    if (k < 0)
        return 0;
    BigInt num = 1;
    BigInt den = 1;
    for (long i = 0; i < k; ++i) {
        num *= n - i;
        den *= i + 1;
    }
    return num / den; // exact: k! divides any product of k consecutive integers
}

BigInt h_line(int d, int i, const BigInt& k) {
    if (d < 1)
        throw std::out_of_range("h_line: ambient dimension must be positive");
    if (i < 0 || i > d)
        throw std::out_of_range("h_line: cohomological index out of [0, d]");
    if (i == 0 && k >= 0)
        return binomial(k + d, d);
    if (i == d && k <= -d - 1)
        return binomial(-k - 1, d);
    return 0;
}

BigInt h_q(const QDivisor& E, int i) {
    QDivisor rounded = floor_divisor(E);
    Rat deg = degree(rounded);
    assert(deg.is_integer());
    return h_line(E.ambient_dim(), i, deg.num());
}

} // namespace secring
