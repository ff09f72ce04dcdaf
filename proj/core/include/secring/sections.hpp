#ifndef SECRING_SECTIONS_HPP
#define SECRING_SECTIONS_HPP

#include <map>
#include <vector>

#include <secring/polynomial.hpp>
#include <secring/section_ring.hpp>

namespace secring {

/// A graded piece element written over the canonical denominator of its
/// degree: numerator / prod_j f_j^{floor(n p_j/q_j)}. The numerator is
/// homogeneous of degree sum_j floor(n p_j/q_j) e_j.
struct Section {
    Polynomial numerator;
    std::map<std::string, long> denominator_exponents;
    long degree = 0;
};

struct SectionOptions {
    long max_basis = 50'000; // guardrail against binomial blow-up on P^d
};

/// Basis of [R]_n: all monomials of the canonical numerator degree over the
/// canonical denominator. Requires every component of R's divisor to carry a
/// defining polynomial; |result| = hilbert(R, n).
std::vector<Section> section_basis(const SectionRing& R, long n,
                                   const SectionOptions& opts = {});

/// Ring multiplication: degrees add, the product is rewritten over the
/// canonical denominator of the sum degree (numerator picks up the deficit
/// powers of the defining polynomials).
Section multiply(const SectionRing& R, const Section& s, const Section& t);

/// Rank of the row span by exact Gaussian elimination over Q; rows are
/// coefficient vectors. Deterministic: pivots chosen by smallest numerator
/// magnitude (ties by lowest row index).
long row_rank(std::vector<std::vector<Rat>> rows);

/// New-generator counts per degree 1..max_degree:
/// hilbert(R, n) - rank of sum over 0 < a < n of [R]_a * [R]_{n-a}.
std::map<long, long> minimal_generator_counts(const SectionRing& R, long max_degree,
                                              const SectionOptions& opts = {});

/// Degrees n in (max generator degree, max_degree] where products of
/// lower-degree elements already span [R]_n; when that holds across the
/// whole tail window the generator set is stable within the window (no
/// global generation claim).
bool generators_stable_within_window(const std::map<long, long>& counts);

} // namespace secring

#endif
