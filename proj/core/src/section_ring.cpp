#include <secring/section_ring.hpp>

#include <secring/errors.hpp>

namespace secring {

SectionRing::SectionRing(QDivisor divisor, std::string label)
    : divisor_(std::move(divisor)), label_(std::move(label)) {
    if (divisor_.ambient_dim() < 1)
        throw domain_error("section ring needs a divisor on P^d, d >= 1");
    if (!is_ample(divisor_))
        throw domain_error("section ring divisor must be ample (degree > 0)");
    if (label_.empty())
        label_ = "R(P^" + std::to_string(ambient_dim()) + ", " + divisor_.str() + ")";
}

SectionRing polynomial_ring(int num_vars) {
    if (num_vars < 2)
        throw domain_error("polynomial_ring: need at least 2 variables");
    int r = num_vars - 1;
    Component h{kGenericHyperplaneName, 1, ComponentKind::GenericHyperplane, std::nullopt};
    return SectionRing(make_divisor(r, {{h, Rat(1)}}),
                       "K[" + std::to_string(num_vars) + " vars]");
}

BigInt hilbert(const SectionRing& R, std::int64_t n) {
    if (n < 0)
        return 0;
    return h_q(scale_divisor(Rat(n), R.divisor()), 0);
}

BigInt local_coh_dim(const SectionRing& R, int i, std::int64_t n) {
    int d = R.ambient_dim();
    if (i < 0 || i > d + 1)
        throw std::out_of_range("local_coh_dim: index out of [0, d+1]");
    if (i <= 1)
        return 0;
    return h_q(scale_divisor(Rat(n), R.divisor()), i - 1);
}

std::int64_t a_invariant(const SectionRing& R) {
    int d = R.ambient_dim();
    Rat deg_d = degree(R.divisor());
    long t = component_degree_sum(R.divisor());
    // eval(n) = 0 for n > hi; eval(n) > 0 for n <= lo.
    std::int64_t hi = to_int64((Rat(t - d - 1) / deg_d).ceil());
    std::int64_t lo = to_int64((Rat(-(d + 1)) / deg_d).floor());
    for (std::int64_t n = hi;; --n) {
        if (local_coh_dim(R, d + 1, n) != 0)
            return n;
        if (n < lo)
            throw internal_consistency_error("a_invariant: scan passed its positivity bound");
    }
}

QDivisor canonical_class(const SectionRing& R) {
    return combine(Rat(1), canonical_divisor(R.ambient_dim()), Rat(1), frac_part(R.divisor()));
}

BigInt symbolic_canonical_dim(const SectionRing& R, long i, std::int64_t n) {
    if (i < 0)
        throw domain_error("symbolic_canonical_dim: power must be nonnegative");
    return h_q(combine(Rat(i), canonical_class(R), Rat(n), R.divisor()), 0);
}

CanonicalOrderResult divisor_class_order(const SectionRing& R, const QDivisor& F, long bound) {
    if (bound < 1)
        throw domain_error("divisor_class_order: bound must be >= 1");
    if (F.ambient_dim() != R.ambient_dim())
        throw domain_error("divisor_class_order: ambient dimension mismatch");
    Rat deg_d = degree(R.divisor());
    Rat deg_f = degree(F);
    for (long i = 1; i <= bound; ++i) {
        // deg(iF - cD) = 0 forces c; the class is trivial iff c is an integer
        // and iF - cD is integral componentwise.
        Rat c = Rat(i) * deg_f / deg_d;
        if (!c.is_integer())
            continue;
        if (is_integral(combine(Rat(i), F, -c, R.divisor())))
            return CanonicalOrderResult{i, to_int64(c.num())};
    }
    throw not_torsion_within_bound(
        "no order within bound " + std::to_string(bound) + "; the class may be non-torsion",
        bound);
}

CanonicalOrderResult canonical_order(const SectionRing& R, long bound) {
    return divisor_class_order(R, canonical_class(R), bound);
}

bool f_regular_degree_test(const SectionRing& R) {
    return degree(canonical_class(R)).sign() < 0;
}

RationalSingCertificate rational_sing_certificate(const SectionRing& R) {
    RationalSingCertificate cert{};
    cert.is_cm = true; // h^i(P^d, O(k)) = 0 for 0 < i < d, identically in k
    cert.a_value = a_invariant(R);
    cert.a_negative = cert.a_value < 0;
    cert.divisor_effective = is_effective(R.divisor());
    cert.punctured_spectrum_assumed = true;
    cert.verdict = (cert.is_cm && cert.a_negative)
                       ? SingularityVerdict::RationalSingularitiesIfPuncturedSpectrumRational
                       : SingularityVerdict::NotRationalSingularities;
    return cert;
}

} // namespace secring
