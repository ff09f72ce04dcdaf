#include <secring/cover.hpp>

#include <numeric>
#include <set>

#include <secring/errors.hpp>

namespace secring {

CoverDescriptor cyclic_cover(const SectionRing& R, const QDivisor& F, long bound) {
    CanonicalOrderResult ord = divisor_class_order(R, F, bound);
    CoverDescriptor C{R, F, ord.order, ord.twist, Rat(-ord.twist, ord.order), ord.order};
    return C;
}

CoverDescriptor canonical_cover(const SectionRing& R, long bound) {
    return cyclic_cover(R, canonical_class(R), bound);
}

std::optional<std::int64_t> cover_summand_degree(const CoverDescriptor& C, long i,
                                                 std::int64_t Q) {
    // True degree of summand i at scaled Q is q - i*c/m with q = Q/m; it
    // contributes exactly when that is an integer: j = (Q - i*c)/m.
    std::int64_t num = Q - i * C.twist;
    if (num % C.order != 0)
        return std::nullopt;
    return num / C.order;
}

namespace {

BigInt summand_sheaf_dim(const CoverDescriptor& C, long i, std::int64_t j, int sheaf_index) {
    QDivisor twisted =
        combine(Rat(i), C.class_divisor, Rat(j), C.base.divisor());
    return h_q(twisted, sheaf_index);
}

} // namespace

BigInt cover_hilbert(const CoverDescriptor& C, std::int64_t Q) {
    BigInt total = 0;
    for (long i = 0; i < C.order; ++i)
        if (auto j = cover_summand_degree(C, i, Q))
            total += summand_sheaf_dim(C, i, *j, 0);
    return total;
}

BigInt cover_local_coh(const CoverDescriptor& C, int j, std::int64_t Q) {
    int d = C.base.ambient_dim();
    if (j < 0 || j > d + 1)
        throw std::out_of_range("cover_local_coh: index out of [0, d+1]");
    if (j <= 1)
        return 0;
    BigInt total = 0;
    for (long i = 0; i < C.order; ++i)
        if (auto q = cover_summand_degree(C, i, Q))
            total += summand_sheaf_dim(C, i, *q, j - 1);
    return total;
}

long cover_tail_constant(const CoverDescriptor& C) {
    std::set<std::string> names;
    long total = 0;
    for (const auto& [comp, c] : C.class_divisor.terms())
        if (names.insert(comp.name).second)
            total += comp.degree;
    for (const auto& [comp, c] : C.base.divisor().terms())
        if (names.insert(comp.name).second)
            total += comp.degree;
    return total;
}

Rat cover_a_invariant_scan(const CoverDescriptor& C) {
    // Direct scan of the top local cohomology in the scaled grading. The
    // grading is supported on multiples of g = gcd(order, twist).
    int d = C.base.ambient_dim();
    long m = C.order;
    std::int64_t g = std::gcd(static_cast<std::int64_t>(m), C.twist);
    Rat deg_d = degree(C.base.divisor());
    long t = cover_tail_constant(C);
    std::int64_t hi = to_int64((Rat(m) * Rat(t - d - 1) / deg_d).ceil());
    std::int64_t lo = to_int64((Rat(-m) * Rat(d + 1) / deg_d).floor());
    // Align the start downward onto the support lattice.
    std::int64_t scan = hi - ((hi % g) + g) % g;
    for (;; scan -= g) {
        if (cover_local_coh(C, d + 1, scan) != 0)
            return Rat(scan, m);
        if (scan < lo)
            throw internal_consistency_error("cover_a_invariant: scan passed its bound");
    }
}

Rat cover_a_invariant(const CoverDescriptor& C) {
    Rat formula(C.twist, C.order);
    Rat scanned = cover_a_invariant_scan(C);
    if (scanned != formula)
        throw internal_consistency_error("cover_a_invariant: twist/order formula " +
                                         formula.str() + " disagrees with scan " +
                                         scanned.str());
    return formula;
}

bool quasi_gorenstein_check(const CoverDescriptor& C, std::int64_t window_lo,
                            std::int64_t window_hi) {
    int top = C.base.ambient_dim() + 1;
    for (std::int64_t Q = window_lo; Q <= window_hi; ++Q)
        if (cover_local_coh(C, top, -Q) != cover_hilbert(C, Q + C.twist))
            return false;
    return true;
}

} // namespace secring
