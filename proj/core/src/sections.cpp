#include <secring/sections.hpp>

#include <algorithm>

#include <secring/cohomology.hpp>
#include <secring/errors.hpp>

namespace secring {

namespace {

const std::vector<std::string>& ring_vars(const SectionRing& R) {
    const std::vector<std::string>* vars = nullptr;
    for (const auto& [comp, c] : R.divisor().terms()) {
        if (!comp.defining_polynomial)
            throw domain_error("missing defining polynomial for component '" + comp.name + "'");
        if (!vars)
            vars = &comp.defining_polynomial->vars();
        else if (*vars != comp.defining_polynomial->vars())
            throw domain_error("defining polynomials use different variable lists");
    }
    if (!vars)
        throw domain_error("section_basis needs a divisor with at least one component");
    return *vars;
}

long canonical_exponent(const Rat& coeff, long n) {
    return static_cast<long>(to_int64((coeff * Rat(n)).floor()));
}

// Numerator degree sum_j floor(n p_j/q_j) e_j of the canonical representation.
long numerator_degree(const SectionRing& R, long n) {
    long total = 0;
    for (const auto& [comp, c] : R.divisor().terms())
        total += canonical_exponent(c, n) * comp.degree;
    return total;
}

} // namespace

std::vector<Section> section_basis(const SectionRing& R, long n, const SectionOptions& opts) {
    const auto& vars = ring_vars(R);
    std::vector<Section> basis;
    long deg = numerator_degree(R, n);
    if (n < 0 || deg < 0)
        return basis;

    BigInt count = binomial(BigInt(deg) + R.ambient_dim(), R.ambient_dim());
    if (count > opts.max_basis)
        throw basis_too_large("section_basis: degree-" + std::to_string(n) + " piece has " +
                                  count.get_str() + " monomials (cap " +
                                  std::to_string(opts.max_basis) + ")",
                              opts.max_basis);

    std::map<std::string, long> denom;
    for (const auto& [comp, c] : R.divisor().terms())
        denom[comp.name] = canonical_exponent(c, n);

    for (auto& exps : monomial_exponents(static_cast<int>(vars.size()), deg))
        basis.push_back(Section{Polynomial::monomial(vars, std::move(exps)), denom, n});
    return basis;
}

Section multiply(const SectionRing& R, const Section& s, const Section& t) {
    Section out;
    out.degree = s.degree + t.degree;
    out.numerator = s.numerator * t.numerator;
    for (const auto& [comp, c] : R.divisor().terms()) {
        long target = canonical_exponent(c, out.degree);
        long have = 0;
        if (auto it = s.denominator_exponents.find(comp.name);
            it != s.denominator_exponents.end())
            have += it->second;
        if (auto it = t.denominator_exponents.find(comp.name);
            it != t.denominator_exponents.end())
            have += it->second;
        long deficit = target - have;
        if (deficit < 0)
            throw internal_consistency_error("multiply: negative denominator deficit for '" +
                                             comp.name + "'");
        if (deficit > 0)
            out.numerator *= comp.defining_polynomial->pow(static_cast<unsigned>(deficit));
        out.denominator_exponents[comp.name] = target;
    }
    return out;
}

long row_rank(std::vector<std::vector<Rat>> rows) {
    if (rows.empty())
        return 0;
    size_t cols = rows[0].size();
    long rank = 0;
    size_t row_start = 0;
    for (size_t col = 0; col < cols && row_start < rows.size(); ++col) {
        // Pivot: smallest nonzero numerator magnitude, lowest index on ties.
        size_t pivot = rows.size();
        BigInt best_mag;
        for (size_t r = row_start; r < rows.size(); ++r) {
            if (rows[r][col].is_zero())
                continue;
            BigInt mag = abs(rows[r][col].num());
            if (pivot == rows.size() || mag < best_mag) {
                pivot = r;
                best_mag = mag;
            }
        }
        if (pivot == rows.size())
            continue;
        std::swap(rows[row_start], rows[pivot]);
        const Rat lead = rows[row_start][col];
        for (size_t r = row_start + 1; r < rows.size(); ++r) {
            if (rows[r][col].is_zero())
                continue;
            Rat factor = rows[r][col] / lead;
            for (size_t cc = col; cc < cols; ++cc)
                rows[r][cc] -= factor * rows[row_start][cc];
        }
        ++row_start;
        ++rank;
    }
    return rank;
}

namespace {

std::vector<Rat> coefficient_row(const Polynomial& p,
                                 const std::map<Polynomial::Exponents, size_t>& index) {
    std::vector<Rat> row(index.size(), Rat(0));
    for (const auto& [exps, c] : p.terms()) {
        auto it = index.find(exps);
        if (it == index.end())
            throw internal_consistency_error("coefficient_row: monomial outside the basis");
        row[it->second] = c;
    }
    return row;
}

} // namespace

std::map<long, long> minimal_generator_counts(const SectionRing& R, long max_degree,
                                              const SectionOptions& opts) {
    std::map<long, long> counts;
    std::vector<std::vector<Section>> bases(max_degree + 1);
    for (long n = 0; n <= max_degree; ++n)
        bases[n] = section_basis(R, n, opts);

    int nvars = static_cast<int>(ring_vars(R).size());
    for (long n = 1; n <= max_degree; ++n) {
        long dim = static_cast<long>(bases[n].size());
        std::map<Polynomial::Exponents, size_t> index;
        {
            size_t pos = 0;
            for (auto& exps : monomial_exponents(nvars, numerator_degree(R, n)))
                index.emplace(std::move(exps), pos++);
        }
        std::vector<std::vector<Rat>> rows;
        for (long a = 1; a <= n / 2; ++a) {
            for (const auto& s : bases[a])
                for (const auto& t : bases[n - a])
                    rows.push_back(coefficient_row(multiply(R, s, t).numerator, index));
        }
        counts[n] = dim - row_rank(std::move(rows));
    }
    return counts;
}

bool generators_stable_within_window(const std::map<long, long>& counts) {
    long last_generator = 0;
    long max_degree = 0;
    for (const auto& [n, c] : counts) {
        if (c > 0)
            last_generator = n;
        max_degree = std::max(max_degree, n);
    }
    // Stable when a nonempty tail of the window needs no new generators.
    return last_generator < max_degree;
}

} // namespace secring
