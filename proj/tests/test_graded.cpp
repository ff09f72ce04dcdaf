#include <doctest.h>

#include <random>

#include <secring/cohomology.hpp>
#include <secring/graded.hpp>
#include <secring/scenarios.hpp>

#include "test_support.hpp"

using namespace secring;
using secring_test::random_divisor;

namespace {

Component plain(const std::string& name, int degree = 1) {
    return Component{name, degree, ComponentKind::NamedHypersurface, std::nullopt};
}

SectionRing three_half_points_ring() {
    QDivisor d = make_divisor(1, {{plain("P1"), Rat(1, 2)},
                                  {plain("P2"), Rat(1, 2)},
                                  {plain("P3"), Rat(1, 2)}});
    return SectionRing(d);
}

} // namespace

TEST_CASE("support lattices") {
    Support all = Support::all();
    CHECK(all.contains(-7));
    CHECK(all.is_all());

    Support even = Support::lattice(2, 0);
    CHECK(even.contains(-4));
    CHECK_FALSE(even.contains(3));
    CHECK(*even.floor_member(5) == 4);
    CHECK(*even.ceil_member(5) == 6);
    CHECK(*even.floor_member(4) == 4);

    Support shifted = Support::lattice(3, -1); // residue 2 mod 3
    CHECK(shifted.contains(2));
    CHECK(shifted.contains(-1));
    CHECK_FALSE(shifted.contains(0));

    Support inter = Support::intersect(even, shifted);
    CHECK(inter.modulus == 6);
    CHECK(inter.contains(2));
    CHECK(inter.contains(8));
    CHECK_FALSE(inter.contains(4));

    Support uni = Support::unite(even, shifted);
    CHECK(uni.contains(0));
    CHECK(uni.contains(2));
    CHECK(uni.contains(5));
    CHECK_FALSE(uni.contains(1));
    CHECK(even.subset_of(uni));
    CHECK(shifted.subset_of(uni));
    CHECK_FALSE(uni.subset_of(even));

    CHECK(Support::none().is_empty());
    CHECK(Support::intersect(even, Support::lattice(2, 1)).is_empty());
    CHECK(even.scaled(3).contains(6));
    CHECK_FALSE(even.scaled(3).contains(2));
}

TEST_CASE("certificate verification catches false claims") {
    CertifiedDimFn good([](std::int64_t n) { return n >= 0 ? BigInt(1) : BigInt(0); },
                        Support::all());
    good.zero_below = 0;
    good.positive_above = 0;
    CHECK_NOTHROW(good.verify());

    CertifiedDimFn bad = good;
    bad.zero_below = 5; // false: eval(4) = 1
    CHECK_THROWS_AS(bad.verify(), internal_consistency_error);

    CertifiedDimFn bad2 = good;
    bad2.positive_below = -3; // false: eval(-4) = 0
    CHECK_THROWS_AS(bad2.verify(), internal_consistency_error);
}

TEST_CASE("graded objects of section rings") {
    GradedObject poly = to_graded_object(polynomial_ring(3)); // dim 3
    CHECK(poly.krull_dim == 3);
    CHECK(poly.scale == 1);
    CHECK(*poly.hilbert.zero_below == 0);
    CHECK(poly.lc[3](-3) != 0);
    for (std::int64_t n = -2; n <= 10; ++n)
        CHECK(poly.lc[3](n) == 0);
    CHECK(decide_identically_zero(poly.lc[0]) == Vanishing::Zero);
    CHECK(decide_identically_zero(poly.lc[1]) == Vanishing::Zero);
    CHECK(decide_identically_zero(poly.lc[2]) == Vanishing::Zero);
    CHECK(decide_identically_zero(poly.lc[3]) == Vanishing::NonZero);
    CHECK(depth(poly) == 3);
    CHECK(is_cm(poly));
    CHECK(a_inv(poly) == -3);

    GradedObject a = to_graded_object(one_third_three_points_ring());
    for (std::int64_t n = -10; n <= -1; ++n)
        CHECK(a.lc[2](n) != 0);
    for (std::int64_t n = 0; n <= 10; ++n)
        CHECK(a.lc[2](n) == 0);
    CHECK(a_inv(a) == -1);

    // Intermediate indices are identically zero for any P^d section ring.
    std::mt19937 rng(73);
    for (int trial = 0; trial < 25; ++trial) {
        GradedObject g = to_graded_object(SectionRing{random_divisor(rng)});
        for (int k = 2; k < g.krull_dim; ++k)
            CHECK(decide_identically_zero(g.lc[k]) == Vanishing::Zero);
        CHECK(is_cm(g)); // every section ring over P^d is CM
    }
}

TEST_CASE("segre of two planes is the determinantal cone") {
    GradedObject plane = to_graded_object(polynomial_ring(2));
    GradedObject q = segre(plane, plane);
    CHECK(q.krull_dim == 3);
    CHECK(depth(q) == 3);
    CHECK(is_cm(q));
    CHECK(a_inv(q) == -2);
    // Cross-check against the quadric hypersurface K[a,b,c,d]/(ad - bc).
    auto series = secring_test::hypersurface_series(4, 2, 10);
    for (int n = 0; n < 10; ++n) {
        CHECK(q.hilbert(n) == series[n]);
        CHECK(q.hilbert(n) == BigInt(n + 1) * BigInt(n + 1));
    }
}

TEST_CASE("kunneth: hilbert multiplicativity and dimension formula") {
    std::mt19937 rng(79);
    for (int trial = 0; trial < 30; ++trial) {
        GradedObject m = to_graded_object(SectionRing{random_divisor(rng)});
        GradedObject n = to_graded_object(SectionRing{random_divisor(rng)});
        GradedObject prod = segre(m, n);
        CHECK(prod.krull_dim == m.krull_dim + n.krull_dim - 1);
        for (std::int64_t deg = -5; deg <= 15; ++deg)
            CHECK(prod.hilbert(deg) == m.hilbert(deg) * n.hilbert(deg));
        CHECK(decide_identically_zero(prod.lc[prod.krull_dim]) == Vanishing::NonZero);
        CHECK(depth(prod) >= 2);
        CHECK(decide_identically_zero(prod.lc[0]) == Vanishing::Zero);
        CHECK(decide_identically_zero(prod.lc[1]) == Vanishing::Zero);
    }
}

TEST_CASE("omega formula: top local cohomology multiplies under segre") {
    std::mt19937 rng(83);
    for (int trial = 0; trial < 20; ++trial) {
        GradedObject m = to_graded_object(SectionRing{random_divisor(rng)});
        GradedObject n = to_graded_object(SectionRing{random_divisor(rng)});
        GradedObject prod = segre(m, n);
        // dim[omega_{M#N}]_k = dim[omega_M]_k * dim[omega_N]_k with
        // dim[omega]_k = lc[top](-k).
        for (std::int64_t k = -10; k <= 30; ++k)
            CHECK(prod.lc[prod.krull_dim](-k) ==
                  m.lc[m.krull_dim](-k) * n.lc[n.krull_dim](-k));
    }
}

TEST_CASE("depth 2 for the cover product of the main construction") {
    SectionRing a = one_third_three_points_ring();
    for (int d = 3; d <= 5; ++d) {
        SectionRing b = d == 3 ? one_half_four_points_ring() : one_half_even_hypersurface_ring(d);
        GradedObject cover_a = export_graded_object(canonical_cover(a, 60));
        GradedObject cover_b = export_graded_object(canonical_cover(b, 60));
        CHECK(cover_a.scale == 1); // twist 0 reduces the scaled grading fully
        CHECK(cover_b.scale == 1);
        GradedObject prod = segre(cover_a, cover_b);
        CHECK(prod.krull_dim == d);
        CHECK(depth(prod) == 2);
        CHECK_FALSE(is_cm(prod));
        if (d == 3)
            CHECK(prod.lc[2](0) == 2); // 1*1 from each Kunneth edge term
        else
            CHECK(prod.lc[2](0) == 1); // only H^2(cover A) # cover B survives
        CHECK(decide_identically_zero(prod.lc[0]) == Vanishing::Zero);
        CHECK(decide_identically_zero(prod.lc[1]) == Vanishing::Zero);
    }
}

TEST_CASE("segre with the base rings of the main construction is CM") {
    GradedObject a = to_graded_object(one_third_three_points_ring());
    GradedObject b = to_graded_object(one_half_four_points_ring());
    GradedObject prod = segre(a, b);
    CHECK(prod.krull_dim == 3);
    CHECK(is_cm(prod));
    CHECK(a_inv(prod) == -1);
}

TEST_CASE("non-CM segre: cover with a-invariant zero against a polynomial ring") {
    for (int d = 4; d <= 5; ++d) {
        GradedObject cover = export_graded_object(canonical_cover(griffith_ring(d), 60));
        CHECK(a_inv(cover) == 0);
        CHECK(is_cm(cover)); // hypersurface
        for (int r = 1; r <= 2; ++r) {
            GradedObject poly = to_graded_object(polynomial_ring(r + 1));
            GradedObject prod = segre(cover, poly);
            CHECK(prod.krull_dim == d + r - 1); // dim S = d-1, dim A = r+1
            CHECK(depth(prod) == d - 1);
            CHECK_FALSE(is_cm(prod));
            GradedObject good = segre(to_graded_object(griffith_ring(d)), poly);
            CHECK(is_cm(good));
        }
    }
}

TEST_CASE("mixed grading scales align on the lcm") {
    GradedObject frac = export_graded_object(canonical_cover(three_half_points_ring(), 60));
    CHECK(frac.scale == 3); // twist -1: no reduction
    CHECK(a_inv(frac) == -1); // scaled units: true a-invariant is -1/3
    CHECK(is_cm(frac));

    GradedObject poly = to_graded_object(polynomial_ring(2));
    GradedObject prod = segre(frac, poly);
    CHECK(prod.scale == 3);
    CHECK(prod.krull_dim == 3);
    // Hilbert multiplicativity at matched true degrees: the polynomial
    // factor only lives on integer degrees (scaled multiples of 3).
    for (std::int64_t q = 0; q <= 24; ++q) {
        BigInt expected = (q % 3 == 0) ? BigInt(frac.hilbert(q) * poly.hilbert(q / 3)) : BigInt(0);
        CHECK(prod.hilbert(q) == expected);
    }
    CHECK(is_cm(prod)); // both factors CM with negative a-invariants
}

TEST_CASE("undecided propagates instead of guessing") {
    CertifiedDimFn no_certs([](std::int64_t) { return BigInt(1); }, Support::all());
    GradedObject o;
    o.krull_dim = 1;
    o.scale = 1;
    o.hilbert = no_certs;
    o.lc.assign(2, CertifiedDimFn::zero());
    o.lc[1] = no_certs;
    CHECK(decide_identically_zero(no_certs) == Vanishing::Undecided);
    CHECK_THROWS_AS(depth(o), undecided_error);
    CHECK_THROWS_AS(a_inv(o), undecided_error);
}

TEST_CASE("goto-watanabe report consistency") {
    GradedObject p3 = to_graded_object(polynomial_ring(3));
    GradedObject p2 = to_graded_object(polynomial_ring(2));
    GotoWatanabeReport rep = goto_watanabe_report(p3, p2);
    CHECK(rep.hypotheses_hold);
    CHECK(rep.conclusion_holds);
    CHECK(rep.product_dim == 4);
    CHECK(rep.a_all_positive_degrees);
    CHECK(rep.b_all_positive_degrees);

    GradedObject cover = export_graded_object(canonical_cover(griffith_ring(4), 60));
    GotoWatanabeReport rep2 = goto_watanabe_report(cover, p2);
    CHECK_FALSE(rep2.hypotheses_hold); // a(cover) = 0
    CHECK_FALSE(rep2.product_cm);      // converse direction
    CHECK(rep2.a_all_positive_degrees);
}

TEST_CASE("segre cover compatibility and CRT identification") {
    SectionRing a = one_third_three_points_ring();
    SectionRing b = one_half_four_points_ring();
    SegreCoverCompat rec = segre_cover_compat(a, b, 60);
    CHECK(rec.twist_compatible);
    CHECK(rec.coprime_orders);
    CHECK(rec.product_order == 6);
    CHECK(rec.product_twist == 0);
    CHECK(rec.cover_identified);

    // Non-coprime orders: compatibility holds, identification skipped.
    SegreCoverCompat self = segre_cover_compat(a, a, 60);
    CHECK(self.twist_compatible);
    CHECK_FALSE(self.coprime_orders);
    CHECK_FALSE(self.cover_identified);
    CHECK(self.product_order == 0); // minimal order only certified for coprime orders

    // Mismatched twists: orders 3 (twist -1) and 1 (twist -2): 3*(-2) != 1*(-1).
    SectionRing frac = three_half_points_ring();
    SectionRing poly = polynomial_ring(2);
    CHECK_THROWS_AS(segre_cover_compat(frac, poly, 60), incompatible_twists);

    // Compatible nonzero twists (shift 1) through order-1 classes:
    // (1/2)V(conic) and (1/2)(two points) both have K + D' ~ -D.
    Component conic{"V(f)", 2, ComponentKind::NamedHypersurface, std::nullopt};
    SectionRing half_conic{make_divisor(1, {{conic, Rat(1, 2)}})};
    SectionRing half_pair{make_divisor(
        1, {{plain("P1"), Rat(1, 2)}, {plain("P2"), Rat(1, 2)}})};
    SegreCoverCompat shifted = segre_cover_compat(half_conic, half_pair, 60);
    CHECK(shifted.order_a.order == 1);
    CHECK(shifted.order_a.twist == -1);
    CHECK(shifted.order_b.twist == -1);
    CHECK(shifted.twist_compatible);
    CHECK(shifted.product_order == 1);
    CHECK(shifted.product_twist == -2);
    CHECK(shifted.cover_identified);
}

TEST_CASE("composed certificates stay sound under spot verification") {
    std::mt19937 rng(89);
    for (int trial = 0; trial < 10; ++trial) {
        GradedObject m = to_graded_object(SectionRing{random_divisor(rng)});
        GradedObject n = to_graded_object(SectionRing{random_divisor(rng)});
        GradedObject prod = segre(m, n);
        CHECK_NOTHROW(prod.hilbert.verify(64));
        for (const auto& f : prod.lc)
            CHECK_NOTHROW(f.verify(64));
    }
}
