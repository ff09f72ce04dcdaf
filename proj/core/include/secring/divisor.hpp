#ifndef SECRING_DIVISOR_HPP
#define SECRING_DIVISOR_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <secring/polynomial.hpp>
#include <secring/rational.hpp>

namespace secring {

enum class ComponentKind { GenericHyperplane, NamedHypersurface };

/// An irreducible hypersurface in P^d, identified by name. Distinct names are
/// assumed to denote distinct irreducible hypersurfaces in general position;
/// irreducibility of a supplied defining polynomial is not verified.
struct Component {
    std::string name;
    int degree = 1;
    ComponentKind kind = ComponentKind::NamedHypersurface;
    std::optional<Polynomial> defining_polynomial; // required only by module `sections`
};

/// Reserved name of the generic hyperplane component used to represent the
/// canonical divisor K = -(d+1)H. User divisors may reference the same "H",
/// but may not redeclare it with a different degree or kind.
inline const std::string kGenericHyperplaneName = "H";

/// Formal Q-linear combination of named hypersurfaces on P^d. Immutable,
/// normalized: coefficients reduced, zero terms dropped, terms sorted by name.
class QDivisor {
public:
    QDivisor() = default;

    int ambient_dim() const { return ambient_dim_; }
    const std::vector<std::pair<Component, Rat>>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    /// Coefficient of the named component (0 if absent).
    Rat coeff(const std::string& name) const;
    const Component* find(const std::string& name) const;

    std::string str() const;

private:
    int ambient_dim_ = 0;
    std::vector<std::pair<Component, Rat>> terms_;

    friend QDivisor make_divisor(int, std::vector<std::pair<Component, Rat>>);
};

QDivisor make_divisor(int ambient_dim, std::vector<std::pair<Component, Rat>> terms);

/// a*D + b*E with components merged by name.
QDivisor combine(const Rat& a, const QDivisor& D, const Rat& b, const QDivisor& E);
QDivisor scale_divisor(const Rat& a, const QDivisor& D);

/// Componentwise floor [D].
QDivisor floor_divisor(const QDivisor& D);
/// Fractional part D': coefficient p/q in lowest terms becomes (q-1)/q.
QDivisor frac_part(const QDivisor& D);

/// Sum of coefficient * component degree.
Rat degree(const QDivisor& D);

/// K on P^d: the generic hyperplane with coefficient -(d+1).
QDivisor canonical_divisor(int d);

bool is_effective(const QDivisor& D);
bool is_integral(const QDivisor& D);
/// On P^d (Pic = Z) ampleness is degree > 0.
bool is_ample(const QDivisor& D);

/// Sum of the component degrees of D; bounds deg[nD] via
/// n*deg(D) - component_degree_sum(D) < deg[nD] <= n*deg(D).
long component_degree_sum(const QDivisor& D);

// JSON schema:
//   {"ambient_dim": int,
//    "variables": [str, ...]            (optional; default x0..xd)
//    "terms": [{"name": str, "degree": int, "coeff": "p/q",
//               "polynomial": str (optional)}, ...]}
QDivisor parse_divisor_json(const std::string& json_text);
std::string divisor_json(const QDivisor& D, int indent = -1);

} // namespace secring

#endif
