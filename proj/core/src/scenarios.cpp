#include <secring/scenarios.hpp>

#include <map>
#include <sstream>

#include <json.hpp>

#include <secring/cover.hpp>
#include <secring/errors.hpp>
#include <secring/sections.hpp>

namespace secring {

std::string provenance_name(Provenance p) {
    switch (p) {
    case Provenance::Reference: return "reference";
    case Provenance::Definition: return "definition";
    case Provenance::Derived: return "derived";
    }
    return "?";
}

void ScenarioReport::expect(const std::string& quantity, const std::string& actual,
                            const std::string& expected, Provenance provenance, bool certified) {
    Expectation e;
    e.quantity = quantity;
    e.expected = expected;
    e.actual = actual;
    e.provenance = provenance;
    e.certified = certified;
    e.pass = actual == expected;
    all_pass = all_pass && e.pass;
    expectations.push_back(std::move(e));
}

namespace {

std::string b2s(bool b) { return b ? "true" : "false"; }

std::string order_str(const CanonicalOrderResult& o) {
    return "(" + std::to_string(o.order) + ", " + std::to_string(o.twist) + ")";
}

template <typename F>
std::string table_str(F&& f, std::int64_t lo, std::int64_t hi) {
    std::ostringstream os;
    for (std::int64_t n = lo; n <= hi; ++n) {
        if (n > lo)
            os << ",";
        os << f(n);
    }
    return os.str();
}

Component named(std::string name, int deg, const std::string& poly,
                const std::vector<std::string>& vars) {
    return Component{std::move(name), deg, ComponentKind::NamedHypersurface,
                     Polynomial::parse(poly, vars)};
}

} // namespace

SectionRing one_third_three_points_ring() {
    std::vector<std::string> vars{"y0", "z0"};
    QDivisor d = make_divisor(1, {{named("V(y0)", 1, "y0", vars), Rat(1, 3)},
                                  {named("V(z0)", 1, "z0", vars), Rat(1, 3)},
                                  {named("V(y0+z0)", 1, "y0+z0", vars), Rat(1, 3)}});
    return SectionRing(d, "A = R(P^1, (1/3)(three points))");
}

SectionRing one_half_four_points_ring() {
    std::vector<std::string> vars{"v0", "w0"};
    QDivisor d = make_divisor(1, {{named("V(v0)", 1, "v0", vars), Rat(1, 2)},
                                  {named("V(w0)", 1, "w0", vars), Rat(1, 2)},
                                  {named("V(v0-w0)", 1, "v0-w0", vars), Rat(1, 2)},
                                  {named("V(v0+w0)", 1, "v0+w0", vars), Rat(1, 2)}});
    return SectionRing(d, "B = R(P^1, (1/2)(four points))");
}

SectionRing one_half_even_hypersurface_ring(int d) {
    if (d < 4)
        throw domain_error("one_half_even_hypersurface_ring: needs d >= 4");
    int m = d - 1;
    std::vector<std::string> vars;
    for (int i = 1; i <= m; ++i)
        vars.push_back("x" + std::to_string(i));
    std::ostringstream poly;
    for (int i = 1; i <= m; ++i) {
        if (i > 1)
            poly << " + ";
        poly << "x" << i << "^" << 2 * m;
    }
    QDivisor div =
        make_divisor(m - 1, {{named("V(f)", 2 * m, poly.str(), vars), Rat(1, 2)}});
    return SectionRing(div, "B = R(P^" + std::to_string(m - 1) + ", (1/2)V(deg " +
                                std::to_string(2 * m) + "))");
}

SectionRing fermat_quotient_ring(int r, int n, int m) {
    if (m < 3)
        throw domain_error("fermat_quotient_ring: needs m >= 3 (irreducibility)");
    if (r < 1 || n < 1)
        throw domain_error("fermat_quotient_ring: needs r, n >= 1");
    std::vector<std::string> vars;
    for (int i = 1; i <= m; ++i)
        vars.push_back("x" + std::to_string(i));
    std::ostringstream poly;
    for (int i = 1; i <= m; ++i) {
        if (i > 1)
            poly << " + ";
        poly << "x" << i << (n > 1 ? "^" + std::to_string(n) : "");
    }
    QDivisor div = make_divisor(m - 1, {{named("V(f)", n, poly.str(), vars), Rat(1, r)}});
    return SectionRing(div, "R(P^" + std::to_string(m - 1) + ", (1/" + std::to_string(r) +
                                ")V(deg " + std::to_string(n) + "))");
}

SectionRing griffith_ring(int d) {
    if (d < 4)
        throw domain_error("griffith_ring: needs d >= 4");
    return fermat_quotient_ring(d, d, d - 1);
}

namespace {

ScenarioReport run_example_45(const ScenarioParams& p) {
    ScenarioReport rep;
    rep.name = "example-4.5";
    rep.window_lo = p.window_lo;
    rep.window_hi = p.window_hi;

    SectionRing a = one_third_three_points_ring();
    rep.construction.push_back(a.label());

    rep.expect("hilbert(A, 0..6)", table_str([&](std::int64_t n) { return hilbert(a, n); }, 0, 6),
               "1,1,1,4,4,4,7", Provenance::Reference);
    rep.expect("a_invariant(A)", std::to_string(a_invariant(a)), "-1", Provenance::Derived,
               true);
    rep.expect("deg(K + D')", degree(canonical_class(a)).str(), "0", Provenance::Derived);
    rep.expect("dim[omega]_{0..4}",
               table_str([&](std::int64_t n) { return symbolic_canonical_dim(a, 1, n); }, 0, 4),
               "0,2,2,2,5", Provenance::Derived);

    CanonicalOrderResult ord = canonical_order(a, p.bound);
    rep.expect("canonical_order(A)", order_str(ord), "(3, 0)", Provenance::Reference, true);

    CoverDescriptor cov = canonical_cover(a, p.bound);
    rep.expect("cover_a_invariant(cover A)", cover_a_invariant(cov).str(), "0",
               Provenance::Reference, true);
    rep.expect("cover hilbert, scaled degrees 0,3,..,12",
               table_str([&](std::int64_t q) { return cover_hilbert(cov, 3 * q); }, 0, 4),
               "1,3,6,9,12", Provenance::Derived);
    rep.expect("quasi_gorenstein_check(cover A)",
               b2s(quasi_gorenstein_check(cov, p.window_lo, p.window_hi)), "true",
               Provenance::Reference);

    auto counts = minimal_generator_counts(a, 3);
    std::ostringstream cs;
    for (const auto& [deg, cnt] : counts)
        cs << deg << ":" << cnt << ";";
    rep.expect("minimal_generator_counts(A, 3)", cs.str(), "1:1;2:0;3:3;", Provenance::Derived);

    auto basis3 = section_basis(a, 3);
    std::ostringstream numerators;
    for (const auto& s : basis3)
        numerators << s.numerator.str() << ";";
    rep.expect("section_basis(A, 3) numerators", numerators.str(),
               "y0^3;y0^2*z0;y0*z0^2;z0^3;", Provenance::Reference);
    return rep;
}

ScenarioReport run_theorem_61(const ScenarioParams& p) {
    ScenarioReport rep;
    rep.name = "theorem-6.1";
    rep.window_lo = p.window_lo;
    rep.window_hi = p.window_hi;
    int d = p.d == 0 ? 3 : p.d;
    if (d < 3)
        throw domain_error("theorem-6.1 scenario needs d >= 3");

    SectionRing a = one_third_three_points_ring();
    SectionRing b = d == 3 ? one_half_four_points_ring() : one_half_even_hypersurface_ring(d);
    rep.construction.push_back(a.label());
    rep.construction.push_back(b.label());
    rep.construction.push_back("d = " + std::to_string(d));

    rep.expect("canonical_order(A)", order_str(canonical_order(a, p.bound)), "(3, 0)",
               Provenance::Reference, true);
    rep.expect("canonical_order(B)", order_str(canonical_order(b, p.bound)), "(2, 0)",
               Provenance::Reference, true);

    CoverDescriptor cov_a = canonical_cover(a, p.bound);
    CoverDescriptor cov_b = canonical_cover(b, p.bound);
    rep.expect("cover_a_invariant(A-cover)", cover_a_invariant(cov_a).str(), "0",
               Provenance::Reference, true);
    rep.expect("cover_a_invariant(B-cover)", cover_a_invariant(cov_b).str(), "0",
               Provenance::Reference, true);
    rep.expect("f_regular_degree_test(B)", b2s(f_regular_degree_test(b)), "false",
               Provenance::Reference, true);

    GradedObject ga = to_graded_object(a);
    GradedObject gb = to_graded_object(b);
    GradedObject product = segre(ga, gb);
    rep.expect("dim(A # B)", std::to_string(product.krull_dim), std::to_string(d),
               Provenance::Reference, true);
    rep.expect("is_cm(A # B)", b2s(is_cm(product)), "true", Provenance::Reference, true);
    rep.expect("a_inv(A # B) < 0", b2s(a_inv(product) < 0), "true", Provenance::Reference,
               true);

    SegreCoverCompat compat = segre_cover_compat(a, b, p.bound);
    rep.expect("omega_{A#B} class order", std::to_string(compat.product_order), "6",
               Provenance::Reference, true);
    rep.expect("product twist", std::to_string(compat.product_twist), "0",
               Provenance::Reference, true);
    rep.expect("cover of A#B identified with (A-cover)#(B-cover)", b2s(compat.cover_identified),
               "true", Provenance::Reference);

    GradedObject cover_product = segre(export_graded_object(cov_a), export_graded_object(cov_b));
    rep.expect("depth of the canonical cover of A#B", std::to_string(depth(cover_product)), "2",
               Provenance::Reference, true);
    rep.expect("H^2 of the cover nonzero in degree 0", b2s(cover_product.lc[2](0) != 0), "true",
               Provenance::Reference);
    rep.expect("is_cm(cover of A#B)", b2s(is_cm(cover_product)), "false", Provenance::Reference,
               true);

    auto cert_a = rational_sing_certificate(a);
    auto cert_b = rational_sing_certificate(b);
    rep.expect("A certificate: CM with a < 0", b2s(cert_a.is_cm && cert_a.a_negative), "true",
               Provenance::Reference, true);
    rep.expect("B certificate: CM with a < 0", b2s(cert_b.is_cm && cert_b.a_negative), "true",
               Provenance::Reference, true);
    rep.notes.push_back("rational-singularity verdicts are conditional on the "
                        "punctured-spectrum hypothesis (assumed, not verified)");
    return rep;
}

ScenarioReport run_griffith(const ScenarioParams& p) {
    ScenarioReport rep;
    rep.name = "griffith";
    rep.window_lo = p.window_lo;
    rep.window_hi = p.window_hi;
    int d = p.d == 0 ? 4 : p.d;
    if (d < 4 || p.r < 1)
        throw domain_error("griffith scenario needs d >= 4, r >= 1");

    SectionRing ring = griffith_ring(d);
    SectionRing poly = polynomial_ring(p.r + 1);
    rep.construction.push_back(ring.label());
    rep.construction.push_back(poly.label());

    rep.expect("a_invariant(R) < 0", b2s(a_invariant(ring) < 0), "true", Provenance::Reference,
               true);
    rep.expect("canonical_order(R)", order_str(canonical_order(ring, p.bound)),
               "(" + std::to_string(d) + ", 0)", Provenance::Reference, true);
    rep.expect("deg(K + D')", degree(canonical_class(ring)).str(), "0", Provenance::Reference);
    rep.expect("f_regular_degree_test(R)", b2s(f_regular_degree_test(ring)), "false",
               Provenance::Reference, true);

    CoverDescriptor cover = canonical_cover(ring, p.bound);
    rep.expect("a(S) for the canonical cover S", cover_a_invariant(cover).str(), "0",
               Provenance::Reference, true);
    rep.expect("quasi_gorenstein_check(S)",
               b2s(quasi_gorenstein_check(cover, p.window_lo, p.window_hi)), "true",
               Provenance::Reference);

    GradedObject g_ring = to_graded_object(ring);
    GradedObject g_cover = export_graded_object(cover);
    GradedObject g_poly = to_graded_object(poly);
    rep.expect("is_cm(R # A)", b2s(is_cm(segre(g_ring, g_poly))), "true", Provenance::Reference,
               true);
    rep.expect("is_cm(S # A)", b2s(is_cm(segre(g_cover, g_poly))), "false",
               Provenance::Reference, true);
    return rep;
}

ScenarioReport run_example_35(const ScenarioParams& p) {
    ScenarioReport rep;
    rep.name = "example-3.5";
    rep.window_lo = p.window_lo;
    rep.window_hi = p.window_hi;

    SectionRing ring = fermat_quotient_ring(p.r, p.n, p.m);
    rep.construction.push_back(ring.label());
    rep.construction.push_back("r = " + std::to_string(p.r) + ", n = " + std::to_string(p.n) +
                               ", m = " + std::to_string(p.m));

    Rat expected_deg = Rat(-p.m) + Rat(p.r - 1, p.r) * Rat(p.n);
    rep.expect("deg(K + D')", degree(canonical_class(ring)).str(), expected_deg.str(),
               Provenance::Reference);

    bool not_f_regular_type = (static_cast<long>(p.r) - 1) * p.n - static_cast<long>(p.m) * p.r >= 0;
    rep.expect("f_regular_degree_test", b2s(f_regular_degree_test(ring)),
               b2s(!not_f_regular_type), Provenance::Reference, true);

    auto cert = rational_sing_certificate(ring);
    rep.expect("divisor effective", b2s(cert.divisor_effective), "true", Provenance::Definition);
    rep.expect("certificate: CM with a < 0", b2s(cert.is_cm && cert.a_negative), "true",
               Provenance::Reference, true);
    rep.expect("verdict",
               cert.verdict == SingularityVerdict::RationalSingularitiesIfPuncturedSpectrumRational
                   ? "rational-singularities-if-punctured-spectrum-rational"
                   : "not-rational-singularities",
               "rational-singularities-if-punctured-spectrum-rational", Provenance::Reference);
    return rep;
}

ScenarioReport run_goto_watanabe(const ScenarioParams& p) {
    ScenarioReport rep;
    rep.name = "goto-watanabe";
    rep.window_lo = p.window_lo;
    rep.window_hi = p.window_hi;

    // Two planes: the Segre product is the determinantal cone of dim 3.
    GradedObject plane = to_graded_object(polynomial_ring(2));
    GradedObject quadric = segre(plane, plane);
    rep.construction.push_back("K[x,y] # K[x,y]");
    rep.expect("dim(K[x,y] # K[x,y])", std::to_string(quadric.krull_dim), "3",
               Provenance::Derived, true);
    rep.expect("a_inv(K[x,y] # K[x,y])", std::to_string(a_inv(quadric)), "-2",
               Provenance::Derived, true);
    rep.expect("is_cm(K[x,y] # K[x,y])", b2s(is_cm(quadric)), "true", Provenance::Derived, true);
    rep.expect("hilbert of the product, degrees 0..5",
               table_str([&](std::int64_t n) { return quadric.hilbert(n); }, 0, 5),
               "1,4,9,16,25,36", Provenance::Derived);

    GotoWatanabeReport two_polys =
        goto_watanabe_report(to_graded_object(polynomial_ring(3)), to_graded_object(polynomial_ring(2)));
    rep.expect("K[3 vars] # K[2 vars]: hypotheses hold", b2s(two_polys.hypotheses_hold), "true",
               Provenance::Definition, true);
    rep.expect("K[3 vars] # K[2 vars]: conclusion holds", b2s(two_polys.conclusion_holds),
               "true", Provenance::Definition, true);

    GotoWatanabeReport mixed = goto_watanabe_report(to_graded_object(one_third_three_points_ring()),
                                                    to_graded_object(one_half_four_points_ring()));
    rep.expect("A # B of the depth-2 construction: product CM", b2s(mixed.product_cm), "true",
               Provenance::Reference, true);

    // A CM factor with a-invariant 0 and elements in all positive degrees
    // forces a non-CM product (converse direction).
    CoverDescriptor griffith_cover = canonical_cover(griffith_ring(4), p.bound);
    GotoWatanabeReport converse =
        goto_watanabe_report(export_graded_object(griffith_cover), to_graded_object(polynomial_ring(2)));
    rep.expect("cover factor a-invariant", std::to_string(converse.a_of_a), "0",
               Provenance::Reference, true);
    rep.expect("cover factor has elements in all positive degrees",
               b2s(converse.a_all_positive_degrees), "true", Provenance::Derived);
    rep.expect("product with the a=0 factor is CM", b2s(converse.product_cm), "false",
               Provenance::Reference, true);
    return rep;
}

} // namespace

namespace {

using ordered_json = nlohmann::ordered_json;

Provenance parse_provenance(const std::string& text) {
    if (text == "reference")
        return Provenance::Reference;
    if (text == "definition")
        return Provenance::Definition;
    if (text == "derived")
        return Provenance::Derived;
    throw domain_error("malformed scenario file: unknown provenance '" + text + "'");
}

struct ScenarioContext {
    std::map<std::string, SectionRing> rings;
    std::map<std::string, CoverDescriptor> covers;
    std::map<std::string, GradedObject> objects; // every target, as a GradedObject
};

const GradedObject& context_object(const ScenarioContext& ctx, const std::string& id) {
    auto it = ctx.objects.find(id);
    if (it == ctx.objects.end())
        throw domain_error("malformed scenario file: unknown target '" + id + "'");
    return it->second;
}

std::string evaluate_op(ScenarioContext& ctx, const ordered_json& e) {
    const std::string target = e.at("target").get<std::string>();
    const std::string op = e.at("op").get<std::string>();
    auto arg = [&]() -> std::int64_t { return e.at("arg").get<std::int64_t>(); };
    auto range = [&]() -> std::pair<std::int64_t, std::int64_t> {
        return {e.value("lo", 0), e.value("hi", 8)};
    };

    if (auto rit = ctx.rings.find(target); rit != ctx.rings.end()) {
        const SectionRing& r = rit->second;
        if (op == "hilbert")
            return hilbert(r, arg()).get_str();
        if (op == "hilbert_table") {
            auto [lo, hi] = range();
            return table_str([&](std::int64_t n) { return hilbert(r, n); }, lo, hi);
        }
        if (op == "a_invariant")
            return std::to_string(a_invariant(r));
        if (op == "canonical_order")
            return order_str(canonical_order(r, e.value("bound", 60)));
        if (op == "f_regular_degree_test")
            return b2s(f_regular_degree_test(r));
        if (op == "symbolic_canonical_dim")
            return symbolic_canonical_dim(r, e.at("power").get<long>(), arg()).get_str();
        if (op == "generator_counts") {
            std::ostringstream os;
            for (const auto& [deg, cnt] : minimal_generator_counts(r, arg()))
                os << deg << ":" << cnt << ";";
            return os.str();
        }
    }
    if (auto cit = ctx.covers.find(target); cit != ctx.covers.end()) {
        const CoverDescriptor& c = cit->second;
        if (op == "order")
            return std::to_string(c.order);
        if (op == "twist")
            return std::to_string(c.twist);
        if (op == "cover_a_invariant")
            return cover_a_invariant(c).str();
        if (op == "cover_hilbert")
            return cover_hilbert(c, arg()).get_str();
        if (op == "cover_hilbert_table") {
            auto [lo, hi] = range();
            return table_str([&](std::int64_t q) { return cover_hilbert(c, q); }, lo, hi);
        }
        if (op == "quasi_gorenstein") {
            auto [lo, hi] = range();
            return b2s(quasi_gorenstein_check(c, lo, hi));
        }
    }
    // GradedObject-level ops apply to any target.
    const GradedObject& obj = context_object(ctx, target);
    if (op == "dim")
        return std::to_string(obj.krull_dim);
    if (op == "depth")
        return std::to_string(depth(obj));
    if (op == "is_cm")
        return b2s(is_cm(obj));
    if (op == "a_inv")
        return std::to_string(a_inv(obj));
    throw domain_error("malformed scenario file: op '" + op + "' does not apply to target '" +
                       target + "'");
}

} // namespace

ScenarioReport run_scenario_json(const std::string& json_text, const ScenarioParams& params) {
    ordered_json spec;
    try {
        spec = ordered_json::parse(json_text);
    } catch (const nlohmann::json::exception& ex) {
        throw domain_error(std::string("malformed scenario file: ") + ex.what());
    }
    if (!spec.is_object() || !spec.contains("expectations"))
        throw domain_error("malformed scenario file: needs an 'expectations' array");

    ScenarioReport rep;
    rep.name = spec.value("name", "scenario");
    rep.window_lo = params.window_lo;
    rep.window_hi = params.window_hi;

    ScenarioContext ctx;
    try {
        if (spec.contains("rings"))
            for (const auto& [id, body] : spec["rings"].items()) {
                SectionRing r = body.contains("polynomial_ring")
                                    ? polynomial_ring(body["polynomial_ring"].get<int>())
                                    : SectionRing(parse_divisor_json(body.dump()));
                rep.construction.push_back(id + " = " + r.label());
                ctx.objects.emplace(id, to_graded_object(r));
                ctx.rings.emplace(id, std::move(r));
            }
        if (spec.contains("covers"))
            for (const auto& [id, body] : spec["covers"].items()) {
                auto rit = ctx.rings.find(body.at("ring").get<std::string>());
                if (rit == ctx.rings.end())
                    throw domain_error("malformed scenario file: cover over unknown ring");
                long bound = body.value("bound", params.bound);
                CoverDescriptor c =
                    body.contains("class_divisor")
                        ? cyclic_cover(rit->second,
                                       parse_divisor_json(body["class_divisor"].dump()), bound)
                        : canonical_cover(rit->second, bound);
                rep.construction.push_back(id + " = cover of " + rit->second.label() +
                                           " (order " + std::to_string(c.order) + ")");
                ctx.objects.emplace(id, export_graded_object(c));
                ctx.covers.emplace(id, std::move(c));
            }
        if (spec.contains("products"))
            for (const auto& [id, body] : spec["products"].items()) {
                auto factors = body.get<std::vector<std::string>>();
                if (factors.size() != 2)
                    throw domain_error("malformed scenario file: products take two factors");
                GradedObject prod =
                    segre(context_object(ctx, factors[0]), context_object(ctx, factors[1]));
                rep.construction.push_back(id + " = " + factors[0] + " # " + factors[1]);
                ctx.objects.emplace(id, std::move(prod));
            }
    } catch (const nlohmann::json::exception& ex) {
        throw domain_error(std::string("malformed scenario file: ") + ex.what());
    }

    for (const auto& e : spec["expectations"]) {
        std::string quantity;
        std::string expected;
        Provenance prov = Provenance::Derived;
        try {
            quantity = e.at("op").get<std::string>() + "(" + e.at("target").get<std::string>() +
                       (e.contains("arg") ? ", " + e["arg"].dump() : "") + ")";
            expected = e.at("expected").get<std::string>();
            prov = parse_provenance(e.value("provenance", "derived"));
        } catch (const nlohmann::json::exception& ex) {
            throw domain_error(std::string("malformed scenario file: ") + ex.what());
        }
        try {
            rep.expect(quantity, evaluate_op(ctx, e), expected, prov);
        } catch (const undecided_error& ex) {
            rep.expect(quantity, std::string("undecided: ") + ex.what(), expected, prov);
            rep.undecided = true;
        }
    }
    return rep;
}

std::vector<std::string> scenario_names() {
    return {"example-3.5", "example-4.5", "griffith", "theorem-6.1", "goto-watanabe"};
}

ScenarioReport run_scenario(const std::string& name, const ScenarioParams& params) {
    if (name == "example-3.5")
        return run_example_35(params);
    if (name == "example-4.5")
        return run_example_45(params);
    if (name == "griffith")
        return run_griffith(params);
    if (name == "theorem-6.1")
        return run_theorem_61(params);
    if (name == "goto-watanabe")
        return run_goto_watanabe(params);
    throw domain_error("unknown scenario '" + name + "'");
}

} // namespace secring
