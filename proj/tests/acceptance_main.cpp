// Acceptance suite: runs every criterion at exact (equality) tolerance and
// prints one pass/fail line per criterion. Exit status 0 iff all pass.

#include <exception>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <vector>

#include <secring/cohomology.hpp>
#include <secring/cover.hpp>
#include <secring/graded.hpp>
#include <secring/scenarios.hpp>
#include <secring/sections.hpp>

#include "test_support.hpp"

using namespace secring;
using secring_test::random_divisor;

namespace {

void check(bool cond, const std::string& what) {
    if (!cond)
        throw std::runtime_error(what);
}

template <typename T, typename U>
void check_eq(const T& actual, const U& expected, const std::string& what) {
    if (!(actual == expected)) {
        std::ostringstream os;
        os << what << ": got " << actual << ", expected " << expected;
        throw std::runtime_error(os.str());
    }
}

Component plain(const std::string& name, int degree = 1) {
    return Component{name, degree, ComponentKind::NamedHypersurface, std::nullopt};
}

// ---- criterion 1: the d = 3 depth-2 construction ------------------------

void criterion_main_construction_d3() {
    SectionRing a = one_third_three_points_ring();
    SectionRing b = one_half_four_points_ring();

    CanonicalOrderResult oa = canonical_order(a, 60);
    check_eq(oa.order, 3L, "order of omega_A");
    check_eq(oa.twist, static_cast<std::int64_t>(0), "twist of omega_A");
    CanonicalOrderResult ob = canonical_order(b, 60);
    check_eq(ob.order, 2L, "order of omega_B");
    check_eq(ob.twist, static_cast<std::int64_t>(0), "twist of omega_B");

    CoverDescriptor cov_a = canonical_cover(a, 60);
    CoverDescriptor cov_b = canonical_cover(b, 60);
    check_eq(cover_a_invariant(cov_a), Rat(0), "a-invariant of cover of A");
    check_eq(cover_a_invariant(cov_b), Rat(0), "a-invariant of cover of B");

    GradedObject product = segre(to_graded_object(a), to_graded_object(b));
    check(is_cm(product), "A#B must be Cohen-Macaulay");
    check(a_inv(product) < 0, "a(A#B) must be negative");

    SegreCoverCompat compat = segre_cover_compat(a, b, 60);
    check_eq(compat.product_order, 6L, "order of omega_{A#B}");
    check(compat.cover_identified, "cover of A#B must match the product of covers");

    GradedObject covers = segre(export_graded_object(cov_a), export_graded_object(cov_b));
    check_eq(depth(covers), 2, "depth of the canonical cover");
    check(covers.lc[2](0) != 0, "H^2 of the cover must be nonzero in degree 0");
}

// ---- criterion 2: dimensions 4, 5, 6 -------------------------------------

void criterion_main_construction_higher() {
    SectionRing a = one_third_three_points_ring();
    for (int d = 4; d <= 6; ++d) {
        SectionRing b = one_half_even_hypersurface_ring(d);
        check_eq(degree(canonical_class(b)), Rat(0),
                 "deg(K + E') for d = " + std::to_string(d));
        check(!f_regular_degree_test(b), "B must fail the F-regular degree test");

        GradedObject product = segre(to_graded_object(a), to_graded_object(b));
        check_eq(product.krull_dim, d, "dim(A#B) for d = " + std::to_string(d));
        check(is_cm(product), "A#B must be CM for d = " + std::to_string(d));

        GradedObject covers = segre(export_graded_object(canonical_cover(a, 60)),
                                    export_graded_object(canonical_cover(b, 60)));
        check_eq(depth(covers), 2, "cover depth for d = " + std::to_string(d));
    }
}

// ---- criterion 3: the Griffith family ------------------------------------

void criterion_griffith() {
    for (int d = 4; d <= 5; ++d) {
        SectionRing ring = griffith_ring(d);
        check(a_invariant(ring) < 0, "a(R) < 0 for d = " + std::to_string(d));

        CanonicalOrderResult ord = canonical_order(ring, 60);
        check_eq(ord.order, static_cast<long>(d), "order of omega_R");
        check_eq(ord.twist, static_cast<std::int64_t>(0), "twist of omega_R");

        CoverDescriptor cover = canonical_cover(ring, 60);
        check_eq(cover_a_invariant(cover), Rat(0), "a(S) for d = " + std::to_string(d));

        for (int r = 1; r <= 2; ++r) {
            GradedObject poly = to_graded_object(polynomial_ring(r + 1));
            check(is_cm(segre(to_graded_object(ring), poly)),
                  "R # K[" + std::to_string(r + 1) + " vars] must be CM");
            check(!is_cm(segre(export_graded_object(cover), poly)),
                  "S # K[" + std::to_string(r + 1) + " vars] must not be CM");
        }
    }
}

// ---- criterion 4: effective-divisor family sweep --------------------------

void criterion_family_sweep() {
    for (int r = 1; r <= 4; ++r)
        for (int n = 1; n <= 8; ++n)
            for (int m = 3; m <= 5; ++m) {
                SectionRing ring = fermat_quotient_ring(r, n, m);
                auto cert = rational_sing_certificate(ring);
                std::string tag =
                    " (r=" + std::to_string(r) + ", n=" + std::to_string(n) +
                    ", m=" + std::to_string(m) + ")";
                check(cert.divisor_effective, "divisor must be effective" + tag);
                check(cert.is_cm && cert.a_negative, "certificate must be positive" + tag);
                check(cert.verdict ==
                          SingularityVerdict::RationalSingularitiesIfPuncturedSpectrumRational,
                      "verdict must be conditional-positive" + tag);
                bool fails_f_regular = (r - 1) * n - m * r >= 0;
                check_eq(f_regular_degree_test(ring), !fails_f_regular,
                         "F-regular degree test" + tag);
            }
}

// ---- criterion 5: randomized Segre CM criterion ---------------------------

void criterion_goto_watanabe_randomized() {
    std::mt19937 rng(20260808);
    std::vector<GradedObject> pool;
    pool.push_back(to_graded_object(one_third_three_points_ring()));
    pool.push_back(to_graded_object(one_half_four_points_ring()));
    pool.push_back(to_graded_object(griffith_ring(4)));
    for (int nv = 2; nv <= 4; ++nv)
        pool.push_back(to_graded_object(polynomial_ring(nv)));
    // Covers with a-invariant 0 and elements in every positive degree: the
    // only members for which the converse branch can fire.
    pool.push_back(export_graded_object(canonical_cover(griffith_ring(4), 60)));
    pool.push_back(export_graded_object(canonical_cover(griffith_ring(5), 60)));
    pool.push_back(export_graded_object(canonical_cover(one_half_four_points_ring(), 60)));
    secring_test::DivisorGenOptions effective;
    effective.effective_only = true;
    for (int i = 0; i < 25; ++i)
        pool.push_back(to_graded_object(SectionRing{random_divisor(rng, effective)}));
    secring_test::DivisorGenOptions any;
    for (int i = 0; i < 10; ++i)
        pool.push_back(to_graded_object(SectionRing{random_divisor(rng, any)}));

    std::uniform_int_distribution<size_t> pick(0, pool.size() - 1);
    int forward_hits = 0, converse_hits = 0;
    for (int pair = 0; pair < 200; ++pair) {
        const GradedObject& a = pool[pick(rng)];
        const GradedObject& b = pool[pick(rng)];
        // goto_watanabe_report itself throws on any violated implication.
        GotoWatanabeReport rep = goto_watanabe_report(a, b);
        if (rep.hypotheses_hold) {
            ++forward_hits;
            check(rep.product_cm && rep.product_a < 0,
                  "forward direction must give a CM product with a < 0");
        }
        if ((rep.a_of_a >= 0 || rep.a_of_b >= 0) && rep.a_all_positive_degrees &&
            rep.b_all_positive_degrees && rep.a_is_cm && rep.b_is_cm &&
            rep.dims_at_least_two) {
            ++converse_hits;
            check(!rep.product_cm, "a factor with a >= 0 must force a non-CM product");
        }
    }
    check(forward_hits >= 30, "randomized suite must exercise the forward direction");
    check(converse_hits >= 5, "randomized suite must exercise the converse direction");
}

// ---- criterion 6: divisor-calculus property suite --------------------------

void criterion_divisor_properties() {
    // Round identity on 500 random divisors.
    std::mt19937 rng(424242);
    secring_test::DivisorGenOptions opts;
    opts.ample_only = false;
    for (int trial = 0; trial < 500; ++trial) {
        QDivisor d = random_divisor(rng, opts);
        QDivisor dp = frac_part(d);
        for (std::int64_t n = -20; n <= 20; ++n) {
            QDivisor lhs = scale_divisor(Rat(-1), floor_divisor(scale_divisor(Rat(-n), d)));
            QDivisor rhs = floor_divisor(combine(Rat(n), d, Rat(1), dp));
            check(divisor_json(lhs) == divisor_json(rhs),
                  "round identity -[-nD] = [nD + D'] failed");
        }
    }

    // Serre duality.
    for (int d = 1; d <= 6; ++d)
        for (int k = -50; k <= 50; ++k)
            check(h_line(d, d, k) == h_line(d, 0, -k - d - 1), "Serre duality failed");

    // Kunneth hilbert multiplicativity.
    std::mt19937 rng2(5150);
    for (int trial = 0; trial < 50; ++trial) {
        GradedObject m = to_graded_object(SectionRing{random_divisor(rng2)});
        GradedObject n = to_graded_object(SectionRing{random_divisor(rng2)});
        GradedObject prod = segre(m, n);
        for (std::int64_t deg = -10; deg <= 15; ++deg)
            check(prod.hilbert(deg) == m.hilbert(deg) * n.hilbert(deg),
                  "hilbert multiplicativity failed");
    }

    // Cover grading nonnegativity, [S]_0 = K, and quasi-Gorenstein symmetry
    // for every constructed canonical cover.
    std::vector<CoverDescriptor> covers;
    covers.push_back(canonical_cover(one_third_three_points_ring(), 60));
    covers.push_back(canonical_cover(one_half_four_points_ring(), 60));
    for (int d = 4; d <= 6; ++d) {
        covers.push_back(canonical_cover(one_half_even_hypersurface_ring(d), 60));
        covers.push_back(canonical_cover(griffith_ring(d), 60));
    }
    for (int nv = 2; nv <= 4; ++nv)
        covers.push_back(canonical_cover(polynomial_ring(nv), 60));
    covers.push_back(canonical_cover(
        SectionRing{make_divisor(1, {{plain("P1"), Rat(1, 2)},
                                     {plain("P2"), Rat(1, 2)},
                                     {plain("P3"), Rat(1, 2)}})},
        60));
    std::mt19937 rng3(314159);
    secring_test::DivisorGenOptions eff;
    eff.effective_only = true;
    int randoms = 0;
    for (int trial = 0; trial < 60 && randoms < 20; ++trial) {
        SectionRing r{random_divisor(rng3, eff)};
        try {
            covers.push_back(canonical_cover(r, 60));
            ++randoms;
        } catch (const not_torsion_within_bound&) {
        }
    }
    for (const auto& c : covers) {
        check(cover_hilbert(c, 0) == 1, "[S]_0 must be one-dimensional");
        for (std::int64_t q = -3 * c.order; q < 0; ++q)
            check(cover_hilbert(c, q) == 0, "cover grading must be nonnegative");
        check(quasi_gorenstein_check(c, -24, 24), "canonical cover must be quasi-Gorenstein");
    }
}

// ---- criterion 7: sections and exact linear algebra ------------------------

void criterion_sections_linear_algebra() {
    std::vector<SectionRing> rings{one_third_three_points_ring(), one_half_four_points_ring(),
                                   one_half_even_hypersurface_ring(4),
                                   one_half_even_hypersurface_ring(5), griffith_ring(4),
                                   griffith_ring(5), fermat_quotient_ring(2, 4, 3)};
    for (const auto& r : rings)
        for (long n = 0; n <= 12; ++n)
            check(BigInt(static_cast<long>(section_basis(r, n).size())) == hilbert(r, n),
                  "basis size must match the hilbert function");

    auto ca = minimal_generator_counts(one_third_three_points_ring(), 3);
    check_eq(ca.at(1), 1L, "generators in degree 1");
    check_eq(ca.at(2), 0L, "generators in degree 2");
    check_eq(ca.at(3), 3L, "generators in degree 3");

    auto cb = minimal_generator_counts(one_half_four_points_ring(), 2);
    check_eq(cb.at(1), 1L, "generators of B in degree 1");
    check_eq(cb.at(2), 4L, "generators of B in degree 2");

    GradedObject plane = to_graded_object(polynomial_ring(2));
    GradedObject quadric = segre(plane, plane);
    check_eq(a_inv(quadric), static_cast<std::int64_t>(-2), "a-invariant of the quadric cone");
    auto series = secring_test::hypersurface_series(4, 2, 8);
    for (int n = 0; n < 8; ++n)
        check(quadric.hilbert(n) == series[n], "determinantal hypersurface cross-check");
}

struct Criterion {
    std::string name;
    std::function<void()> run;
};

} // namespace

int main() {
    std::vector<Criterion> criteria{
        {"1: depth-2 canonical cover construction, d = 3", criterion_main_construction_d3},
        {"2: construction for d = 4, 5, 6", criterion_main_construction_higher},
        {"3: Griffith family (d = 4, 5; r = 1, 2)", criterion_griffith},
        {"4: effective family sweep, F-regular degree test", criterion_family_sweep},
        {"5: randomized Segre CM criterion (200 pairs)", criterion_goto_watanabe_randomized},
        {"6: divisor calculus property suite", criterion_divisor_properties},
        {"7: sections and exact linear algebra", criterion_sections_linear_algebra},
    };

    bool all_pass = true;
    for (const auto& c : criteria) {
        try {
            c.run();
            std::cout << "[PASS] criterion " << c.name << "\n";
        } catch (const std::exception& e) {
            std::cout << "[FAIL] criterion " << c.name << ": " << e.what() << "\n";
            all_pass = false;
        }
    }
    return all_pass ? 0 : 1;
}
