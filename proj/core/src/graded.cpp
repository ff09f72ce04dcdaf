#include <secring/graded.hpp>

#include <algorithm>
#include <limits>
#include <numeric>

#include <secring/errors.hpp>

namespace secring {

namespace {

// Supports beyond this modulus are overapproximated to "all degrees" and the
// affected positivity certificates dropped (sound, loses precision only).
constexpr std::int64_t kSupportModulusCap = 1'000'000;

std::int64_t canon_residue(std::int64_t n, std::int64_t modulus) {
    return ((n % modulus) + modulus) % modulus;
}

std::optional<Support> intersect_exact(const Support& a, const Support& b) {
    if (a.is_empty() || b.is_empty())
        return Support::none();
    if (a.is_all())
        return b;
    if (b.is_all())
        return a;
    std::int64_t l = std::lcm(a.modulus, b.modulus);
    if (l > kSupportModulusCap)
        return std::nullopt;
    Support out{l, {}};
    for (std::int64_t ra : a.residues)
        for (std::int64_t x = ra; x < l; x += a.modulus)
            if (b.contains(x))
                out.residues.push_back(x);
    std::sort(out.residues.begin(), out.residues.end());
    return out;
}

std::optional<Support> unite_exact(const Support& a, const Support& b) {
    if (a.is_empty())
        return b;
    if (b.is_empty())
        return a;
    if (a.is_all() || b.is_all())
        return Support::all();
    std::int64_t l = std::lcm(a.modulus, b.modulus);
    if (l > kSupportModulusCap)
        return std::nullopt;
    Support out{l, {}};
    for (std::int64_t x = 0; x < l; ++x)
        if (a.contains(x) || b.contains(x))
            out.residues.push_back(x);
    return out;
}

} // namespace

Support Support::lattice(std::int64_t modulus, std::int64_t residue) {
    if (modulus < 1)
        throw domain_error("Support: modulus must be positive");
    return Support{modulus, {canon_residue(residue, modulus)}};
}

bool Support::contains(std::int64_t n) const {
    if (is_empty())
        return false;
    return std::binary_search(residues.begin(), residues.end(), canon_residue(n, modulus));
}

std::optional<std::int64_t> Support::floor_member(std::int64_t n) const {
    if (is_empty())
        return std::nullopt;
    std::int64_t rn = canon_residue(n, modulus);
    std::int64_t best = n - modulus; // sentinel below any candidate
    for (std::int64_t r : residues)
        best = std::max(best, n - canon_residue(rn - r, modulus));
    return best;
}

std::optional<std::int64_t> Support::ceil_member(std::int64_t n) const {
    if (is_empty())
        return std::nullopt;
    std::int64_t rn = canon_residue(n, modulus);
    std::int64_t best = n + modulus;
    for (std::int64_t r : residues)
        best = std::min(best, n + canon_residue(r - rn, modulus));
    return best;
}

Support Support::scaled(std::int64_t t) const {
    if (t < 1)
        throw domain_error("Support::scaled: factor must be positive");
    Support out{modulus * t, {}};
    out.residues.reserve(residues.size());
    for (std::int64_t r : residues)
        out.residues.push_back(r * t);
    return out;
}

bool Support::subset_of(const Support& other) const {
    if (is_empty() || other.is_all())
        return true;
    if (other.is_empty())
        return false;
    std::int64_t l = std::lcm(modulus, other.modulus);
    if (l > kSupportModulusCap)
        return false; // conservative
    for (std::int64_t r : residues)
        for (std::int64_t x = r; x < l; x += modulus)
            if (!other.contains(x))
                return false;
    return true;
}

Support Support::intersect(const Support& a, const Support& b) {
    auto exact = intersect_exact(a, b);
    return exact ? *exact : Support::all();
}

Support Support::unite(const Support& a, const Support& b) {
    auto exact = unite_exact(a, b);
    return exact ? *exact : Support::all();
}

CertifiedDimFn CertifiedDimFn::zero() {
    CertifiedDimFn f([](std::int64_t) { return BigInt(0); }, Support::none());
    f.zero_below = 0;
    f.zero_above = -1;
    return f;
}

BigInt CertifiedDimFn::operator()(std::int64_t n) const {
    return eval_(n);
}

bool CertifiedDimFn::is_identically_zero_certified() const {
    if (support_.is_empty())
        return true;
    return zero_below && zero_above && *zero_above < *zero_below;
}

void CertifiedDimFn::verify(int samples) const {
    auto expect_zero = [&](std::int64_t n, const char* which) {
        if (eval_(n) != 0)
            throw internal_consistency_error(std::string("CertifiedDimFn: ") + which +
                                             " certificate violated at degree " +
                                             std::to_string(n));
    };
    if (zero_below)
        for (int k = 1; k <= samples; ++k)
            expect_zero(*zero_below - k, "zero_below");
    if (zero_above)
        for (int k = 1; k <= samples; ++k)
            expect_zero(*zero_above + k, "zero_above");
    if (positive_below && !support_.is_empty()) {
        std::int64_t n = *support_.floor_member(*positive_below);
        for (int k = 0; k < samples; ++k, n = *support_.floor_member(n - 1))
            if (eval_(n) <= 0)
                throw internal_consistency_error(
                    "CertifiedDimFn: positive_below certificate violated at degree " +
                    std::to_string(n));
    }
    if (positive_above && !support_.is_empty()) {
        std::int64_t n = *support_.ceil_member(*positive_above);
        for (int k = 0; k < samples; ++k, n = *support_.ceil_member(n + 1))
            if (eval_(n) <= 0)
                throw internal_consistency_error(
                    "CertifiedDimFn: positive_above certificate violated at degree " +
                    std::to_string(n));
    }
    // Support soundness near the origin and the certificate bounds.
    std::vector<std::int64_t> anchors{0};
    if (zero_below)
        anchors.push_back(*zero_below);
    if (zero_above)
        anchors.push_back(*zero_above);
    for (std::int64_t anchor : anchors)
        for (std::int64_t n = anchor - samples / 2; n <= anchor + samples / 2; ++n)
            if (!support_.contains(n))
                expect_zero(n, "support");
}

CertifiedDimFn dim_product(const CertifiedDimFn& a, const CertifiedDimFn& b) {
    if (a.is_identically_zero_certified() || b.is_identically_zero_certified())
        return CertifiedDimFn::zero();

    auto support = intersect_exact(a.support(), b.support());
    bool support_exact = support.has_value();
    if (support && support->is_empty())
        return CertifiedDimFn::zero();

    CertifiedDimFn out([a, b](std::int64_t n) -> BigInt { return a(n) * b(n); },
                       support ? *support : Support::all());

    // Zero wherever either factor is zero.
    if (a.zero_below || b.zero_below)
        out.zero_below = std::max(a.zero_below.value_or(std::numeric_limits<std::int64_t>::min()),
                                  b.zero_below.value_or(std::numeric_limits<std::int64_t>::min()));
    if (a.zero_above || b.zero_above)
        out.zero_above = std::min(a.zero_above.value_or(std::numeric_limits<std::int64_t>::max()),
                                  b.zero_above.value_or(std::numeric_limits<std::int64_t>::max()));
    // Positive only where both factors are.
    if (support_exact) {
        if (a.positive_below && b.positive_below)
            out.positive_below = std::min(*a.positive_below, *b.positive_below);
        if (a.positive_above && b.positive_above)
            out.positive_above = std::max(*a.positive_above, *b.positive_above);
    }
    return out;
}

CertifiedDimFn dim_sum(std::vector<CertifiedDimFn> terms) {
    std::erase_if(terms, [](const CertifiedDimFn& f) { return f.is_identically_zero_certified(); });
    if (terms.empty())
        return CertifiedDimFn::zero();
    if (terms.size() == 1)
        return terms.front();

    std::optional<Support> support = terms.front().support();
    bool support_exact = true;
    for (size_t i = 1; i < terms.size() && support; ++i)
        support = unite_exact(*support, terms[i].support());
    if (!support) {
        support = Support::all();
        support_exact = false;
    }

    CertifiedDimFn out(
        [terms](std::int64_t n) {
            BigInt total = 0;
            for (const auto& f : terms)
                total += f(n);
            return total;
        },
        *support);

    bool all_zb = true, all_za = true;
    std::int64_t zb = std::numeric_limits<std::int64_t>::max();
    std::int64_t za = std::numeric_limits<std::int64_t>::min();
    for (const auto& f : terms) {
        all_zb = all_zb && f.zero_below.has_value();
        all_za = all_za && f.zero_above.has_value();
        if (f.zero_below)
            zb = std::min(zb, *f.zero_below);
        if (f.zero_above)
            za = std::max(za, *f.zero_above);
    }
    if (all_zb)
        out.zero_below = zb;
    if (all_za)
        out.zero_above = za;

    if (support_exact) {
        // Terms are nonnegative, so one positive term suffices. A term's
        // positivity bound is usable for the sum when it covers the whole
        // support, or when every term carries one.
        std::optional<std::int64_t> pb, pa;
        bool all_pb = true, all_pa = true;
        std::int64_t pb_min = std::numeric_limits<std::int64_t>::max();
        std::int64_t pa_max = std::numeric_limits<std::int64_t>::min();
        for (const auto& f : terms) {
            all_pb = all_pb && f.positive_below.has_value();
            all_pa = all_pa && f.positive_above.has_value();
            if (f.positive_below)
                pb_min = std::min(pb_min, *f.positive_below);
            if (f.positive_above)
                pa_max = std::max(pa_max, *f.positive_above);
            if (f.positive_below && support->subset_of(f.support()))
                pb = std::max(pb.value_or(std::numeric_limits<std::int64_t>::min()),
                              *f.positive_below);
            if (f.positive_above && support->subset_of(f.support()))
                pa = std::min(pa.value_or(std::numeric_limits<std::int64_t>::max()),
                              *f.positive_above);
        }
        if (all_pb)
            pb = std::max(pb.value_or(std::numeric_limits<std::int64_t>::min()), pb_min);
        if (all_pa)
            pa = std::min(pa.value_or(std::numeric_limits<std::int64_t>::max()), pa_max);
        out.positive_below = pb;
        out.positive_above = pa;
    }
    return out;
}

CertifiedDimFn dim_rescaled(const CertifiedDimFn& f, std::int64_t t) {
    if (t < 1)
        throw domain_error("dim_rescaled: factor must be positive");
    if (t == 1)
        return f;
    if (f.is_identically_zero_certified())
        return CertifiedDimFn::zero();
    CertifiedDimFn out(
        [f, t](std::int64_t n) { return n % t == 0 ? f(n / t) : BigInt(0); },
        f.support().scaled(t));
    if (f.zero_below)
        out.zero_below = *f.zero_below * t;
    if (f.zero_above)
        out.zero_above = *f.zero_above * t;
    if (f.positive_below)
        out.positive_below = *f.positive_below * t;
    if (f.positive_above)
        out.positive_above = *f.positive_above * t;
    return out;
}

Vanishing decide_identically_zero(const CertifiedDimFn& f) {
    if (f.is_identically_zero_certified())
        return Vanishing::Zero;
    if (f.support().is_empty())
        return Vanishing::Zero;
    if (f.positive_below || f.positive_above)
        return Vanishing::NonZero;
    if (f.zero_below && f.zero_above) {
        std::int64_t lo = *f.zero_below, hi = *f.zero_above;
        if ((hi - lo) / f.support().modulus > kSupportModulusCap)
            return Vanishing::Undecided;
        auto n = f.support().ceil_member(lo);
        for (; n && *n <= hi; n = f.support().ceil_member(*n + 1))
            if (f(*n) != 0)
                return Vanishing::NonZero;
        return Vanishing::Zero;
    }
    return Vanishing::Undecided;
}

namespace {

CertifiedDimFn validated(CertifiedDimFn f) {
    f.verify();
    return f;
}

} // namespace

GradedObject to_graded_object(const SectionRing& R) {
    int d = R.ambient_dim();
    Rat deg_d = degree(R.divisor());
    long t = component_degree_sum(R.divisor());

    GradedObject obj;
    obj.krull_dim = d + 1;
    obj.scale = 1;
    obj.label = R.label();

    CertifiedDimFn hf([R](std::int64_t n) { return hilbert(R, n); }, Support::all());
    hf.zero_below = 0;
    hf.positive_above = std::max<std::int64_t>(0, to_int64((Rat(t - 1) / deg_d).ceil()));
    obj.hilbert = validated(std::move(hf));

    obj.lc.assign(d + 2, CertifiedDimFn::zero());
    CertifiedDimFn top([R, d](std::int64_t n) { return local_coh_dim(R, d + 1, n); },
                       Support::all());
    top.zero_above = to_int64((Rat(t - d - 1) / deg_d).ceil());
    top.positive_below = to_int64((Rat(-(d + 1)) / deg_d).floor());
    obj.lc[d + 1] = validated(std::move(top));
    return obj;
}

GradedObject export_graded_object(const CoverDescriptor& C) {
    int d = C.base.ambient_dim();
    long m = C.order;
    std::int64_t g = std::gcd(static_cast<std::int64_t>(m), C.twist);
    Rat deg_d = degree(C.base.divisor());
    long t = cover_tail_constant(C);

    GradedObject obj;
    obj.krull_dim = d + 1;
    obj.scale = m / g; // degrees of S lie in (g/m)Z; reduce to a dense grading
    obj.label = "cover(" + C.base.label() + "; order " + std::to_string(m) + ")";

    CertifiedDimFn hf([C, g](std::int64_t q) { return cover_hilbert(C, q * g); },
                      Support::all());
    // Exact: every summand has h^0 = 0 below degree 0, since the twist
    // condition m*deg F = c*deg D makes all summand degrees scale with Q.
    hf.zero_below = 0;
    hf.positive_above =
        std::max<std::int64_t>(0, to_int64((Rat(m) * Rat(t - 1) / (deg_d * Rat(g))).ceil()));
    obj.hilbert = validated(std::move(hf));

    obj.lc.assign(d + 2, CertifiedDimFn::zero());
    CertifiedDimFn top(
        [C, g, d](std::int64_t q) { return cover_local_coh(C, d + 1, q * g); },
        Support::all());
    top.zero_above = to_int64((Rat(m) * Rat(t - d - 1) / (deg_d * Rat(g))).ceil());
    top.positive_below = to_int64((Rat(-m) * Rat(d + 1) / (deg_d * Rat(g))).floor());
    obj.lc[d + 1] = validated(std::move(top));
    return obj;
}

GradedObject segre(const GradedObject& M, const GradedObject& N) {
    int r = M.krull_dim, s = N.krull_dim;
    if (r < 1 || s < 1)
        throw domain_error("segre: factors must have dimension >= 1");

    std::int64_t common = std::lcm(M.scale, N.scale);
    std::int64_t tm = common / M.scale, tn = common / N.scale;

    auto mh = dim_rescaled(M.hilbert, tm);
    auto nh = dim_rescaled(N.hilbert, tn);
    std::vector<CertifiedDimFn> mlc, nlc;
    for (const auto& f : M.lc)
        mlc.push_back(dim_rescaled(f, tm));
    for (const auto& f : N.lc)
        nlc.push_back(dim_rescaled(f, tn));

    GradedObject out;
    out.krull_dim = r + s - 1;
    out.scale = common;
    out.normal_asserted = M.normal_asserted && N.normal_asserted;
    out.reflexive_asserted = M.reflexive_asserted && N.reflexive_asserted;
    out.label = "(" + M.label + " # " + N.label + ")";
    out.hilbert = validated(dim_product(mh, nh));

    out.lc.assign(out.krull_dim + 1, CertifiedDimFn::zero());
    for (int k = 0; k <= out.krull_dim; ++k) {
        std::vector<CertifiedDimFn> terms;
        if (k <= s)
            terms.push_back(dim_product(mh, nlc[k]));
        if (k <= r)
            terms.push_back(dim_product(mlc[k], nh));
        for (int i = 0; i <= std::min<int>(r, k + 1); ++i) {
            int j = k + 1 - i;
            if (j >= 0 && j <= s)
                terms.push_back(dim_product(mlc[i], nlc[j]));
        }
        out.lc[k] = validated(dim_sum(std::move(terms)));
    }
    return out;
}

int depth(const GradedObject& O) {
    for (int k = 0; k <= O.krull_dim; ++k) {
        switch (decide_identically_zero(O.lc[k])) {
        case Vanishing::NonZero:
            return k;
        case Vanishing::Undecided:
            throw undecided_error("depth: vanishing of H^" + std::to_string(k) +
                                  " undecidable from certificates");
        case Vanishing::Zero:
            break;
        }
    }
    throw internal_consistency_error(
        "depth: all local cohomology vanished up to the Krull dimension");
}

bool is_cm(const GradedObject& O) {
    return depth(O) == O.krull_dim;
}

std::int64_t a_inv(const GradedObject& O) {
    const CertifiedDimFn& top = O.lc[O.krull_dim];
    if (!top.zero_above)
        throw undecided_error("a_inv: top local cohomology has no zero_above certificate");
    if (top.support().is_empty() || top.is_identically_zero_certified())
        throw internal_consistency_error("a_inv: top local cohomology is identically zero");
    std::optional<std::int64_t> stop;
    if (top.positive_below)
        stop = top.support().floor_member(*top.positive_below);
    auto n = top.support().floor_member(*top.zero_above);
    for (; n; n = top.support().floor_member(*n - 1)) {
        if (top(*n) != 0)
            return *n;
        if (stop && *n <= *stop)
            throw internal_consistency_error("a_inv: scan passed its positivity bound");
        if (top.zero_below && *n < *top.zero_below)
            throw internal_consistency_error("a_inv: top local cohomology is identically zero");
        if (*top.zero_above - *n > kSupportModulusCap)
            throw undecided_error("a_inv: no lower certificate bounds the scan");
    }
    throw internal_consistency_error("a_inv: support exhausted");
}

bool has_elements_in_all_positive_degrees(const GradedObject& O) {
    const CertifiedDimFn& h = O.hilbert;
    if (!h.support().is_all())
        return false;
    if (!h.positive_above)
        return false;
    for (std::int64_t n = 1; n < *h.positive_above; ++n)
        if (h(n) == 0)
            return false;
    return true;
}

GotoWatanabeReport goto_watanabe_report(const GradedObject& A, const GradedObject& B) {
    GotoWatanabeReport rep;
    rep.a_is_cm = is_cm(A);
    rep.b_is_cm = is_cm(B);
    rep.dims_at_least_two = A.krull_dim >= 2 && B.krull_dim >= 2;
    rep.a_of_a = a_inv(A);
    rep.a_of_b = a_inv(B);
    rep.hypotheses_hold =
        rep.a_is_cm && rep.b_is_cm && rep.dims_at_least_two && rep.a_of_a < 0 && rep.a_of_b < 0;

    GradedObject product = segre(A, B);
    rep.product_dim = product.krull_dim;
    rep.product_depth = depth(product);
    rep.product_cm = rep.product_depth == product.krull_dim;
    rep.product_a = a_inv(product);
    rep.conclusion_holds = rep.product_cm && rep.product_a < 0;

    rep.a_all_positive_degrees = has_elements_in_all_positive_degrees(A);
    rep.b_all_positive_degrees = has_elements_in_all_positive_degrees(B);

    if (rep.hypotheses_hold && !rep.conclusion_holds)
        throw internal_consistency_error(
            "goto_watanabe_report: hypotheses hold but the product is not CM with a < 0");
    if (rep.a_is_cm && rep.b_is_cm && rep.dims_at_least_two && rep.product_cm &&
        rep.a_all_positive_degrees && rep.b_all_positive_degrees &&
        !(rep.a_of_a < 0 && rep.a_of_b < 0))
        throw internal_consistency_error(
            "goto_watanabe_report: converse direction violated");
    return rep;
}

SegreCoverCompat segre_cover_compat(const SectionRing& A, const SectionRing& B, long bound,
                                    std::int64_t window) {
    CoverDescriptor cov_a = canonical_cover(A, bound);
    CoverDescriptor cov_b = canonical_cover(B, bound);
    long m = cov_a.order, n = cov_b.order;

    SegreCoverCompat rec;
    rec.order_a = {m, cov_a.twist};
    rec.order_b = {n, cov_b.twist};
    rec.twist_compatible = n * cov_a.twist == m * cov_b.twist;
    if (!rec.twist_compatible)
        throw incompatible_twists("segre_cover_compat: n*c_A = " +
                                  std::to_string(n * cov_a.twist) + " differs from m*c_B = " +
                                  std::to_string(m * cov_b.twist));
    rec.coprime_orders = std::gcd(m, n) == 1;
    if (!rec.coprime_orders)
        return rec; // Q-Gorenstein conclusion only; cover identification skipped
    rec.product_order = m * n;
    rec.product_twist = n * cov_a.twist + m * cov_b.twist;

    // Dimension-level identification of the canonical cover of A#B with the
    // Segre product of the canonical covers: the cover of A#B decomposes into
    // mn symbolic powers omega^(r) = omega_A^(r) # omega_B^(r) shifted by
    // r*k, and CRT pairs them with the (i, j) summands of the product side.
    std::int64_t l = std::lcm(m, n);
    Rat k = cov_a.shift; // equals cov_b.shift by twist compatibility
    rec.window_lo = 0;
    rec.window_hi = window * l;
    for (std::int64_t bigq = rec.window_lo; bigq <= rec.window_hi; ++bigq) {
        Rat q(bigq, l);
        BigInt direct = 0;
        for (long rr = 0; rr < m * n; ++rr) {
            Rat x = q + k * Rat(rr);
            if (!x.is_integer())
                continue;
            std::int64_t xi = to_int64(x.num());
            direct += symbolic_canonical_dim(A, rr, xi) * symbolic_canonical_dim(B, rr, xi);
        }
        auto factor_dim = [&](const CoverDescriptor& cov) -> BigInt {
            Rat scaled = q * Rat(cov.order);
            if (!scaled.is_integer())
                return 0;
            return cover_hilbert(cov, to_int64(scaled.num()));
        };
        BigInt via_covers = factor_dim(cov_a) * factor_dim(cov_b);
        if (direct != via_covers)
            throw internal_consistency_error(
                "segre_cover_compat: cover of the Segre product and Segre product of the "
                "covers disagree at scaled degree " + std::to_string(bigq));
    }
    rec.cover_identified = true;
    return rec;
}

} // namespace secring
