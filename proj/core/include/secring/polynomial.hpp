#ifndef SECRING_POLYNOMIAL_HPP
#define SECRING_POLYNOMIAL_HPP

#include <map>
#include <string>
#include <vector>

#include <secring/rational.hpp>

namespace secring {

/// Multivariate polynomial with exact rational coefficients over a fixed,
/// ordered variable list. Terms are keyed by exponent vector; zero
/// coefficients are never stored.
class Polynomial {
public:
    using Exponents = std::vector<int>;

    Polynomial() = default;
    explicit Polynomial(std::vector<std::string> vars) : vars_(std::move(vars)) {}

    static Polynomial monomial(std::vector<std::string> vars, Exponents exps, Rat coeff = Rat(1));
    static Polynomial constant(std::vector<std::string> vars, Rat value);

    /// Parses a sum of terms like "y0^3 - 2*y0*z0 + 1/2*z0^2" over the given
    /// variables. No parentheses; coefficients are integers or p/q fractions.
    static Polynomial parse(const std::string& text, const std::vector<std::string>& vars);

    const std::vector<std::string>& vars() const { return vars_; }
    const std::map<Exponents, Rat>& terms() const { return terms_; }

    bool is_zero() const { return terms_.empty(); }
    /// Total degree; -1 for the zero polynomial.
    long total_degree() const;
    bool is_homogeneous() const;

    void add_term(const Exponents& exps, const Rat& coeff);

    Polynomial operator-() const;
    Polynomial& operator+=(const Polynomial& o);
    Polynomial& operator-=(const Polynomial& o);
    friend Polynomial operator+(Polynomial a, const Polynomial& b) { a += b; return a; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { a -= b; return a; }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
    Polynomial& operator*=(const Polynomial& o) { *this = *this * o; return *this; }
    Polynomial pow(unsigned e) const;

    friend bool operator==(const Polynomial& a, const Polynomial& b) {
        return a.vars_ == b.vars_ && a.terms_ == b.terms_;
    }

    std::string str() const;

private:
    std::vector<std::string> vars_;
    std::map<Exponents, Rat> terms_;

    void check_same_ring(const Polynomial& o) const;
};

/// All exponent vectors of the given total degree in nvars variables,
/// lexicographically ordered. Empty for negative degree.
std::vector<Polynomial::Exponents> monomial_exponents(int nvars, long degree);

} // namespace secring

#endif
