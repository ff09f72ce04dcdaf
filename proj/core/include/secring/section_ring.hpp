#ifndef SECRING_SECTION_RING_HPP
#define SECRING_SECTION_RING_HPP

#include <cstdint>
#include <string>

#include <secring/cohomology.hpp>
#include <secring/divisor.hpp>

namespace secring {

/// The generalized section ring R(P^d, D) of an ample Q-divisor D: the
/// N-graded ring whose degree-n piece is H^0(P^d, O(nD)). Krull dimension
/// d + 1. All invariants derive from the divisor.
class SectionRing {
public:
    explicit SectionRing(QDivisor divisor, std::string label = {});

    int ambient_dim() const { return divisor_.ambient_dim(); }
    int krull_dim() const { return divisor_.ambient_dim() + 1; }
    const QDivisor& divisor() const { return divisor_; }
    const std::string& label() const { return label_; }

private:
    QDivisor divisor_;
    std::string label_;
};

/// K[Y0..Yr] presented as R(P^r, H).
SectionRing polynomial_ring(int num_vars);

/// dim [R]_n = h^0(O([nD])) for n >= 0; zero for n < 0 (N-grading).
BigInt hilbert(const SectionRing& R, std::int64_t n);

/// dim [H^i_m(R)]_n. Zero for i <= 1 (R is normal of dimension >= 2);
/// h^{i-1}(O([nD])) for 2 <= i <= d+1. Throws std::out_of_range otherwise.
BigInt local_coh_dim(const SectionRing& R, int i, std::int64_t n);

/// Highest n with [H^{d+1}_m(R)]_n != 0. The search runs downward from the
/// certified bound ceil((sum_j e_j - d - 1)/deg D); termination below
/// floor(-(d+1)/deg D) is guaranteed by ampleness.
std::int64_t a_invariant(const SectionRing& R);

/// The class K + D' governing the canonical module: dim [omega^(i)]_n =
/// h^0(O(i(K+D') + nD)).
QDivisor canonical_class(const SectionRing& R);

BigInt symbolic_canonical_dim(const SectionRing& R, long i, std::int64_t n);

struct CanonicalOrderResult {
    long order;         // minimal m >= 1 with m(K+D') - cD integral of degree 0
    std::int64_t twist; // the accompanying c; omega^(m) ~ R(c) at dimension level
};

/// Order of a Q-divisor class F in Cl(R): smallest i >= 1 admitting an
/// integer c with iF - cD integral of total degree 0 (integral degree-0
/// divisors on P^d are principal). The degree condition pins c = i*degF/degD,
/// so minimality is certified by the ascending search itself.
CanonicalOrderResult divisor_class_order(const SectionRing& R, const QDivisor& F, long bound);

CanonicalOrderResult canonical_order(const SectionRing& R, long bound);

/// Necessary condition for dense F-regular type: deg(K + D') < 0.
/// false certifies "not of dense F-regular type".
bool f_regular_degree_test(const SectionRing& R);

enum class SingularityVerdict {
    RationalSingularitiesIfPuncturedSpectrumRational,
    NotRationalSingularities,
};

struct RationalSingCertificate {
    bool is_cm;            // always true over P^d: intermediate h^i vanish identically
    bool a_negative;
    bool divisor_effective;
    std::int64_t a_value;
    // The punctured-spectrum hypothesis is an assumption of the criterion,
    // reported as unverified, never as established.
    bool punctured_spectrum_assumed;
    SingularityVerdict verdict;
};

RationalSingCertificate rational_sing_certificate(const SectionRing& R);

} // namespace secring

#endif
