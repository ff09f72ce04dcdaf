#include <secring/reports.hpp>

#include <numeric>
#include <sstream>

#include <json.hpp>

#include <secring/errors.hpp>
#include <secring/sections.hpp>

namespace secring {

using ordered_json = nlohmann::ordered_json;

namespace {

ordered_json divisor_to_json(const QDivisor& D) {
    return ordered_json::parse(divisor_json(D));
}

std::string dump(const ordered_json& j, const ReportOptions& opts) {
    return j.dump(opts.indent) + "\n";
}

ordered_json window_json(const ReportOptions& opts) {
    return ordered_json{{"lo", opts.window_lo}, {"hi", opts.window_hi}};
}

ordered_json dimfn_table(const CertifiedDimFn& f, std::int64_t lo, std::int64_t hi) {
    ordered_json table = ordered_json::object();
    for (std::int64_t n = lo; n <= hi; ++n)
        table[std::to_string(n)] = f(n).get_str();
    return table;
}

std::string vanishing_name(Vanishing v) {
    switch (v) {
    case Vanishing::Zero: return "zero";
    case Vanishing::NonZero: return "nonzero";
    case Vanishing::Undecided: return "undecided";
    }
    return "?";
}

} // namespace

std::string divisor_report(const QDivisor& D, const ReportOptions& opts) {
    ordered_json j;
    j["divisor"] = divisor_to_json(D);
    j["degree"] = degree(D).str();
    j["floor"] = divisor_to_json(floor_divisor(D));
    j["frac_part"] = divisor_to_json(frac_part(D));
    j["is_effective"] = is_effective(D);
    j["is_integral"] = is_integral(D);
    j["is_ample"] = is_ample(D);
    if (opts.json)
        return dump(j, opts);
    std::ostringstream os;
    os << "divisor    " << D.str() << "\n"
       << "degree     " << degree(D).str() << "\n"
       << "floor      " << floor_divisor(D).str() << "\n"
       << "frac part  " << frac_part(D).str() << "\n"
       << "effective  " << (is_effective(D) ? "yes" : "no") << "\n"
       << "integral   " << (is_integral(D) ? "yes" : "no") << "\n"
       << "ample      " << (is_ample(D) ? "yes" : "no") << "\n";
    return os.str();
}

std::string ring_report(const SectionRing& R, const ReportOptions& opts) {
    ordered_json j;
    j["ring"] = R.label();
    j["ambient_dim"] = R.ambient_dim();
    j["krull_dim"] = R.krull_dim();
    j["divisor"] = divisor_to_json(R.divisor());
    j["window"] = window_json(opts);

    ordered_json hil = ordered_json::object();
    for (std::int64_t n = std::max<std::int64_t>(0, opts.window_lo); n <= opts.window_hi; ++n)
        hil[std::to_string(n)] = hilbert(R, n).get_str();
    j["hilbert"] = std::move(hil);

    j["a_invariant"] = a_invariant(R); // certified top-down search
    j["canonical_class"] = divisor_to_json(canonical_class(R));
    j["canonical_class_degree"] = degree(canonical_class(R)).str();
    try {
        CanonicalOrderResult ord = canonical_order(R, opts.bound);
        j["canonical_order"] = ordered_json{{"order", ord.order}, {"twist", ord.twist}};
    } catch (const not_torsion_within_bound& e) {
        j["canonical_order"] = ordered_json{{"error", e.what()}, {"bound", e.bound()}};
    }
    j["f_regular_degree_test"] = f_regular_degree_test(R);

    RationalSingCertificate cert = rational_sing_certificate(R);
    j["certificate"] = ordered_json{
        {"is_cm", cert.is_cm},
        {"a_negative", cert.a_negative},
        {"divisor_effective", cert.divisor_effective},
        {"a_value", cert.a_value},
        {"punctured_spectrum_assumed", cert.punctured_spectrum_assumed},
        {"verdict", cert.verdict == SingularityVerdict::RationalSingularitiesIfPuncturedSpectrumRational
                        ? "rational-singularities-if-punctured-spectrum-rational"
                        : "not-rational-singularities"},
    };
    j["certified"] = ordered_json::array(
        {"a_invariant", "canonical_order", "f_regular_degree_test", "certificate"});

    if (opts.json)
        return dump(j, opts);
    std::ostringstream os;
    os << "ring            " << R.label() << "\n"
       << "krull dim       " << R.krull_dim() << "\n"
       << "a-invariant     " << cert.a_value << "  (certified)\n"
       << "canonical class " << canonical_class(R).str() << "  degree "
       << degree(canonical_class(R)).str() << "\n";
    if (j["canonical_order"].contains("order"))
        os << "canonical order " << j["canonical_order"]["order"] << "  twist "
           << j["canonical_order"]["twist"] << "  (certified minimal)\n";
    else
        os << "canonical order not found within bound " << opts.bound << "\n";
    os << "F-regular degree test  " << (f_regular_degree_test(R) ? "passes" : "fails (certified not of dense F-regular type)") << "\n"
       << "verdict         " << j["certificate"]["verdict"].get<std::string>() << "\n"
       << "hilbert [" << std::max<std::int64_t>(0, opts.window_lo) << ".." << opts.window_hi
       << "]  (window-scoped)\n  ";
    for (std::int64_t n = std::max<std::int64_t>(0, opts.window_lo); n <= opts.window_hi; ++n)
        os << hilbert(R, n).get_str() << (n < opts.window_hi ? " " : "\n");
    return os.str();
}

std::string cover_report(const CoverDescriptor& C, const ReportOptions& opts) {
    ordered_json j;
    j["base"] = C.base.label();
    j["class_divisor"] = divisor_to_json(C.class_divisor);
    j["order"] = C.order;
    j["twist"] = C.twist;
    j["shift"] = C.shift.str();
    j["grading_denominator"] = C.grading_denominator;
    j["characteristic_zero_assumed"] = C.characteristic_zero_assumed;
    // For canonical covers the twist/order formula agrees with the scan;
    // an arbitrary torsion class need not satisfy it.
    Rat a_scan = cover_a_invariant_scan(C);
    j["a_invariant"] = a_scan.str();
    j["a_invariant_formula"] = Rat(C.twist, C.order).str();
    j["a_formula_agrees"] = a_scan == Rat(C.twist, C.order);
    j["quasi_gorenstein"] = quasi_gorenstein_check(C, opts.window_lo, opts.window_hi);
    j["window"] = window_json(opts);
    j["grading_note"] = "degrees below are scaled: Q = order * true degree";

    ordered_json hil = ordered_json::object();
    for (std::int64_t q = std::max<std::int64_t>(0, opts.window_lo); q <= opts.window_hi; ++q)
        hil[std::to_string(q)] = cover_hilbert(C, q).get_str();
    j["hilbert"] = std::move(hil);

    int top = C.base.ambient_dim() + 1;
    ordered_json lc = ordered_json::object();
    for (int idx = 2; idx <= top; ++idx)
        lc[std::to_string(idx)] = dimfn_table(
            CertifiedDimFn([C, idx](std::int64_t q) { return cover_local_coh(C, idx, q); },
                           Support::all()),
            opts.window_lo, opts.window_hi);
    j["local_cohomology"] = std::move(lc);
    j["certified"] = ordered_json::array({"order", "twist", "shift", "a_invariant"});

    if (opts.json)
        return dump(j, opts);
    std::ostringstream os;
    os << "cover of        " << C.base.label() << "\n"
       << "order           " << C.order << "   twist " << C.twist << "   shift "
       << C.shift.str() << "  (certified)\n"
       << "a-invariant     " << a_scan.str()
       << (a_scan == Rat(C.twist, C.order) ? "  (certified)" : "  (scan; twist/order formula disagrees)")
       << "\n"
       << "quasi-Gorenstein over window [" << opts.window_lo << ".." << opts.window_hi
       << "]: " << (j["quasi_gorenstein"].get<bool>() ? "yes" : "NO") << "\n"
       << "hilbert (scaled degrees 0.." << opts.window_hi << ")\n  ";
    for (std::int64_t q = std::max<std::int64_t>(0, opts.window_lo); q <= opts.window_hi; ++q)
        os << cover_hilbert(C, q).get_str() << (q < opts.window_hi ? " " : "\n");
    os << "top local cohomology (scaled degrees " << opts.window_lo << "..0)\n  ";
    for (std::int64_t q = opts.window_lo; q <= 0; ++q)
        os << cover_local_coh(C, top, q).get_str() << (q < 0 ? " " : "\n");
    return os.str();
}

std::string segre_report(const GradedObject& left, const GradedObject& right,
                         const ReportOptions& opts) {
    GradedObject product = segre(left, right);
    ordered_json j;
    j["left"] = left.label;
    j["right"] = right.label;
    j["left_scale"] = left.scale;
    j["right_scale"] = right.scale;
    j["product"] = product.label;
    j["scale"] = product.scale;
    // Kunneth hypotheses are not decidable from dimension data.
    j["normality_asserted"] = product.normal_asserted;
    j["reflexivity_asserted"] = product.reflexive_asserted;
    j["dim"] = product.krull_dim;
    int dep = depth(product);
    j["depth"] = dep;
    j["is_cm"] = dep == product.krull_dim;
    j["a_invariant_scaled"] = a_inv(product);
    j["window"] = window_json(opts);
    j["hilbert"] = dimfn_table(product.hilbert, std::max<std::int64_t>(0, opts.window_lo),
                               opts.window_hi);

    // Per-term breakdown: H^k(M#N) = (M # H^k(N)) + (H^k(M) # N)
    //                                 + sum_{i+j=k+1} H^i(M) # H^j(N).
    std::int64_t common = std::lcm(left.scale, right.scale);
    std::int64_t tl = common / left.scale, tr = common / right.scale;
    auto left_at = [&](const CertifiedDimFn& f, std::int64_t n) -> BigInt {
        return n % tl == 0 ? f(n / tl) : BigInt(0);
    };
    auto right_at = [&](const CertifiedDimFn& f, std::int64_t n) -> BigInt {
        return n % tr == 0 ? f(n / tr) : BigInt(0);
    };
    auto term_entry = [&](const CertifiedDimFn& lf, const CertifiedDimFn& rf) {
        ordered_json degrees = ordered_json::array();
        for (std::int64_t n = opts.window_lo; n <= opts.window_hi; ++n)
            if (left_at(lf, n) * right_at(rf, n) != 0)
                degrees.push_back(n);
        return degrees;
    };
    int r = left.krull_dim, s = right.krull_dim;
    ordered_json kunneth = ordered_json::object();
    for (int k = 0; k <= product.krull_dim; ++k) {
        ordered_json entry;
        entry["vanishing"] = vanishing_name(decide_identically_zero(product.lc[k]));
        ordered_json terms = ordered_json::object();
        if (k <= s)
            terms["hilbert # lc[" + std::to_string(k) + "]"] =
                term_entry(left.hilbert, right.lc[k]);
        if (k <= r)
            terms["lc[" + std::to_string(k) + "] # hilbert"] =
                term_entry(left.lc[k], right.hilbert);
        for (int i = 0; i <= std::min(r, k + 1); ++i) {
            int jj = k + 1 - i;
            if (jj >= 0 && jj <= s)
                terms["lc[" + std::to_string(i) + "] # lc[" + std::to_string(jj) + "]"] =
                    term_entry(left.lc[i], right.lc[jj]);
        }
        entry["nonzero_term_degrees_in_window"] = std::move(terms);
        kunneth[std::to_string(k)] = std::move(entry);
    }
    j["kunneth_breakdown"] = std::move(kunneth);
    j["certified"] = ordered_json::array({"dim", "depth", "is_cm", "a_invariant_scaled"});

    if (opts.json)
        return dump(j, opts);
    std::ostringstream os;
    os << "segre product   " << product.label << "\n"
       << "dim             " << product.krull_dim << "\n"
       << "depth           " << dep << "  (certified)\n"
       << "Cohen-Macaulay  " << (dep == product.krull_dim ? "yes" : "no") << "\n"
       << "a-invariant     " << a_inv(product) << "  (in 1/" << product.scale
       << " grading units)\n"
       << "local cohomology over window [" << opts.window_lo << ".." << opts.window_hi << "]\n";
    for (int k = 0; k <= product.krull_dim; ++k) {
        os << "  H^" << k << ": " << vanishing_name(decide_identically_zero(product.lc[k]));
        os << "\n";
    }
    return os.str();
}

std::string sections_report(const SectionRing& R, const ReportOptions& opts) {
    SectionOptions sopts{opts.max_basis};
    auto counts = minimal_generator_counts(R, opts.max_degree, sopts);

    ordered_json j;
    j["ring"] = R.label();
    j["max_degree"] = opts.max_degree;
    ordered_json gens = ordered_json::object();
    for (const auto& [deg, cnt] : counts)
        gens[std::to_string(deg)] = cnt;
    j["new_generators_by_degree"] = std::move(gens);
    j["generators_stable_within_window"] = generators_stable_within_window(counts);

    ordered_json sizes = ordered_json::object();
    for (long n = 0; n <= opts.max_degree; ++n)
        sizes[std::to_string(n)] = hilbert(R, n).get_str();
    j["hilbert"] = std::move(sizes);

    if (opts.dump_basis) {
        ordered_json all = ordered_json::object();
        for (long n = 0; n <= opts.max_degree; ++n) {
            ordered_json level = ordered_json::array();
            for (const auto& s : section_basis(R, n, sopts)) {
                ordered_json sec;
                sec["numerator"] = s.numerator.str();
                ordered_json denom = ordered_json::object();
                for (const auto& [name, e] : s.denominator_exponents)
                    denom[name] = e;
                sec["denominator_exponents"] = std::move(denom);
                level.push_back(std::move(sec));
            }
            all[std::to_string(n)] = std::move(level);
        }
        j["bases"] = std::move(all);
    }

    if (opts.json)
        return dump(j, opts);
    std::ostringstream os;
    os << "ring " << R.label() << "\n"
       << "new generators by degree (1.." << opts.max_degree << ")\n";
    for (const auto& [deg, cnt] : counts)
        if (cnt > 0)
            os << "  degree " << deg << ": " << cnt << "\n";
    os << "stable within window: "
       << (generators_stable_within_window(counts) ? "yes" : "no (raise --max-degree)") << "\n";
    return os.str();
}

std::string scenario_report(const ScenarioReport& rep, const ReportOptions& opts) {
    ordered_json j;
    j["scenario"] = rep.name;
    j["construction"] = rep.construction;
    j["window"] = ordered_json{{"lo", rep.window_lo}, {"hi", rep.window_hi}};
    ordered_json items = ordered_json::array();
    for (const auto& e : rep.expectations) {
        items.push_back(ordered_json{{"quantity", e.quantity},
                                     {"expected", e.expected},
                                     {"actual", e.actual},
                                     {"provenance", provenance_name(e.provenance)},
                                     {"certified", e.certified},
                                     {"pass", e.pass}});
    }
    j["expectations"] = std::move(items);
    j["notes"] = rep.notes;
    j["all_pass"] = rep.all_pass;
    j["undecided"] = rep.undecided;

    if (opts.json)
        return dump(j, opts);
    std::ostringstream os;
    os << "scenario " << rep.name << "\n";
    for (const auto& line : rep.construction)
        os << "  " << line << "\n";
    for (const auto& e : rep.expectations) {
        os << (e.pass ? "  [ok]   " : "  [FAIL] ") << e.quantity << " = " << e.actual;
        if (!e.pass)
            os << "  (expected " << e.expected << ")";
        os << "  [" << provenance_name(e.provenance) << (e.certified ? ", certified" : "")
           << "]\n";
    }
    for (const auto& note : rep.notes)
        os << "  note: " << note << "\n";
    os << (rep.all_pass ? "  PASS" : "  FAIL") << "\n";
    return os.str();
}

} // namespace secring
