#include <secring/divisor.hpp>

#include <algorithm>
#include <set>
#include <sstream>

#include <json.hpp>

namespace secring {

using ordered_json = nlohmann::ordered_json;

Rat QDivisor::coeff(const std::string& name) const {
    for (const auto& [comp, c] : terms_)
        if (comp.name == name)
            return c;
    return Rat(0);
}

const Component* QDivisor::find(const std::string& name) const {
    for (const auto& [comp, c] : terms_)
        if (comp.name == name)
            return &comp;
    return nullptr;
}

std::string QDivisor::str() const {
    if (terms_.empty())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [comp, c] : terms_) {
        if (!first)
            os << " + ";
        os << "(" << c.str() << ")" << comp.name;
        first = false;
    }
    return os.str();
}

namespace {

void check_component(const Component& comp) {
    if (comp.name.empty())
        throw domain_error("component with empty name");
    if (comp.degree < 1)
        throw domain_error("nonpositive component degree for '" + comp.name + "'");
    if (comp.name == kGenericHyperplaneName &&
        (comp.kind != ComponentKind::GenericHyperplane || comp.degree != 1))
        throw domain_error("'" + kGenericHyperplaneName +
                           "' is reserved for the generic hyperplane (degree 1)");
    if (comp.kind == ComponentKind::GenericHyperplane && comp.degree != 1)
        throw domain_error("generic hyperplane '" + comp.name + "' must have degree 1");
    if (comp.defining_polynomial) {
        const Polynomial& f = *comp.defining_polynomial;
        if (f.is_zero() || !f.is_homogeneous() || f.total_degree() != comp.degree)
            throw domain_error("defining polynomial of '" + comp.name +
                               "' must be homogeneous of degree " + std::to_string(comp.degree));
    }
}

void check_mergeable(const Component& a, const Component& b) {
    if (a.degree != b.degree || a.kind != b.kind)
        throw domain_error("component '" + a.name + "' redeclared with different degree or kind");
}

} // namespace

QDivisor make_divisor(int ambient_dim, std::vector<std::pair<Component, Rat>> terms) {
    if (ambient_dim < 1)
        throw domain_error("ambient dimension must be positive");
    std::set<std::string> seen;
    for (const auto& [comp, c] : terms) {
        check_component(comp);
        if (!seen.insert(comp.name).second)
            throw domain_error("duplicate component name '" + comp.name + "'");
        if (comp.defining_polynomial &&
            comp.defining_polynomial->vars().size() != static_cast<size_t>(ambient_dim + 1))
            throw domain_error("defining polynomial of '" + comp.name + "' must use " +
                               std::to_string(ambient_dim + 1) + " variables");
    }
    QDivisor D;
    D.ambient_dim_ = ambient_dim;
    for (auto& [comp, c] : terms)
        if (!c.is_zero())
            D.terms_.emplace_back(std::move(comp), std::move(c));
    std::sort(D.terms_.begin(), D.terms_.end(),
              [](const auto& a, const auto& b) { return a.first.name < b.first.name; });
    return D;
}

QDivisor combine(const Rat& a, const QDivisor& D, const Rat& b, const QDivisor& E) {
    if (D.ambient_dim() != E.ambient_dim())
        throw domain_error("ambient dimension mismatch");
    int dim = D.ambient_dim();

    std::vector<std::pair<Component, Rat>> merged;
    for (const auto& [comp, c] : D.terms())
        merged.emplace_back(comp, a * c);
    for (const auto& [comp, c] : E.terms()) {
        auto it = std::find_if(merged.begin(), merged.end(),
                               [&](const auto& t) { return t.first.name == comp.name; });
        if (it == merged.end()) {
            merged.emplace_back(comp, b * c);
        } else {
            check_mergeable(it->first, comp);
            it->second += b * c;
            // Prefer whichever declaration carries the defining polynomial.
            if (!it->first.defining_polynomial && comp.defining_polynomial)
                it->first.defining_polynomial = comp.defining_polynomial;
        }
    }
    return make_divisor(dim, std::move(merged));
}

QDivisor scale_divisor(const Rat& a, const QDivisor& D) {
    std::vector<std::pair<Component, Rat>> terms;
    for (const auto& [comp, c] : D.terms())
        terms.emplace_back(comp, a * c);
    return make_divisor(D.ambient_dim(), std::move(terms));
}

QDivisor floor_divisor(const QDivisor& D) {
    std::vector<std::pair<Component, Rat>> terms;
    for (const auto& [comp, c] : D.terms())
        terms.emplace_back(comp, Rat(c.floor()));
    return make_divisor(D.ambient_dim(), std::move(terms));
}

QDivisor frac_part(const QDivisor& D) {
    std::vector<std::pair<Component, Rat>> terms;
    for (const auto& [comp, c] : D.terms()) {
        // p/q in lowest terms -> (q-1)/q; integral coefficients drop out.
        BigInt q = c.den();
        terms.emplace_back(comp, Rat(q - 1, q));
    }
    return make_divisor(D.ambient_dim(), std::move(terms));
}

Rat degree(const QDivisor& D) {
    Rat total(0);
    for (const auto& [comp, c] : D.terms())
        total += c * Rat(comp.degree);
    return total;
}

QDivisor canonical_divisor(int d) {
    if (d < 1)
        throw domain_error("ambient dimension must be positive");
    Component h{kGenericHyperplaneName, 1, ComponentKind::GenericHyperplane, std::nullopt};
    return make_divisor(d, {{h, Rat(-(d + 1))}});
}

bool is_effective(const QDivisor& D) {
    for (const auto& [comp, c] : D.terms())
        if (c.sign() < 0)
            return false;
    return true;
}

bool is_integral(const QDivisor& D) {
    for (const auto& [comp, c] : D.terms())
        if (!c.is_integer())
            return false;
    return true;
}

bool is_ample(const QDivisor& D) {
    return degree(D).sign() > 0;
}

long component_degree_sum(const QDivisor& D) {
    long total = 0;
    for (const auto& [comp, c] : D.terms())
        total += comp.degree;
    return total;
}

namespace {

std::vector<std::string> default_vars(int ambient_dim) {
    std::vector<std::string> vars;
    for (int i = 0; i <= ambient_dim; ++i)
        vars.push_back("x" + std::to_string(i));
    return vars;
}

} // namespace

QDivisor parse_divisor_json(const std::string& json_text) {
    ordered_json j;
    try {
        j = ordered_json::parse(json_text);
    } catch (const nlohmann::json::exception& e) {
        throw domain_error(std::string("invalid divisor JSON: ") + e.what());
    }
    if (!j.is_object() || !j.contains("ambient_dim") || !j.contains("terms"))
        throw domain_error("divisor JSON needs 'ambient_dim' and 'terms'");
    int d = j["ambient_dim"].get<int>();
    std::vector<std::string> vars;
    if (j.contains("variables"))
        vars = j["variables"].get<std::vector<std::string>>();
    else
        vars = default_vars(d);
    if (vars.size() != static_cast<size_t>(d + 1))
        throw domain_error("divisor JSON: expected " + std::to_string(d + 1) + " variables");

    std::vector<std::pair<Component, Rat>> terms;
    for (const auto& t : j["terms"]) {
        Component comp;
        comp.name = t.at("name").get<std::string>();
        comp.degree = t.value("degree", 1);
        comp.kind = comp.name == kGenericHyperplaneName ? ComponentKind::GenericHyperplane
                                                        : ComponentKind::NamedHypersurface;
        if (t.contains("polynomial") && !t["polynomial"].is_null())
            comp.defining_polynomial = Polynomial::parse(t["polynomial"].get<std::string>(), vars);
        Rat c = Rat::parse(t.at("coeff").get<std::string>());
        terms.emplace_back(std::move(comp), std::move(c));
    }
    return make_divisor(d, std::move(terms));
}

std::string divisor_json(const QDivisor& D, int indent) {
    ordered_json j;
    j["ambient_dim"] = D.ambient_dim();
    const Polynomial* any_poly = nullptr;
    for (const auto& [comp, c] : D.terms())
        if (comp.defining_polynomial)
            any_poly = &*comp.defining_polynomial;
    if (any_poly)
        j["variables"] = any_poly->vars();
    ordered_json terms = ordered_json::array();
    for (const auto& [comp, c] : D.terms()) {
        ordered_json t;
        t["name"] = comp.name;
        t["degree"] = comp.degree;
        t["coeff"] = c.str();
        if (comp.defining_polynomial)
            t["polynomial"] = comp.defining_polynomial->str();
        terms.push_back(std::move(t));
    }
    j["terms"] = std::move(terms);
    return indent >= 0 ? j.dump(indent) : j.dump();
}

} // namespace secring
