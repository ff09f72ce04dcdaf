#include <secring/polynomial.hpp>

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>

namespace secring {

Polynomial Polynomial::monomial(std::vector<std::string> vars, Exponents exps, Rat coeff) {
    if (exps.size() != vars.size())
        throw domain_error("Polynomial::monomial: exponent/variable count mismatch");
    Polynomial p(std::move(vars));
    p.add_term(exps, coeff);
    return p;
}

Polynomial Polynomial::constant(std::vector<std::string> vars, Rat value) {
    Exponents exps(vars.size(), 0);
    return monomial(std::move(vars), std::move(exps), std::move(value));
}

void Polynomial::add_term(const Exponents& exps, const Rat& coeff) {
    if (exps.size() != vars_.size())
        throw domain_error("Polynomial: exponent vector has wrong length");
    for (int e : exps)
        if (e < 0)
            throw domain_error("Polynomial: negative exponent");
    auto it = terms_.find(exps);
    if (it == terms_.end()) {
        if (!coeff.is_zero())
            terms_.emplace(exps, coeff);
        return;
    }
    it->second += coeff;
    if (it->second.is_zero())
        terms_.erase(it);
}

long Polynomial::total_degree() const {
    long deg = -1;
    for (const auto& [exps, c] : terms_) {
        long d = std::accumulate(exps.begin(), exps.end(), 0L);
        deg = std::max(deg, d);
    }
    return deg;
}

bool Polynomial::is_homogeneous() const {
    long deg = -1;
    for (const auto& [exps, c] : terms_) {
        long d = std::accumulate(exps.begin(), exps.end(), 0L);
        if (deg == -1)
            deg = d;
        else if (d != deg)
            return false;
    }
    return true;
}

void Polynomial::check_same_ring(const Polynomial& o) const {
    if (vars_ != o.vars_)
        throw domain_error("Polynomial: mixed variable contexts");
}

Polynomial Polynomial::operator-() const {
    Polynomial r(vars_);
    for (const auto& [exps, c] : terms_)
        r.terms_.emplace(exps, -c);
    return r;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
    check_same_ring(o);
    for (const auto& [exps, c] : o.terms_)
        add_term(exps, c);
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
    check_same_ring(o);
    for (const auto& [exps, c] : o.terms_)
        add_term(exps, -c);
    return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    a.check_same_ring(b);
    Polynomial r(a.vars_);
    for (const auto& [ea, ca] : a.terms_) {
        for (const auto& [eb, cb] : b.terms_) {
            Polynomial::Exponents e(ea.size());
            for (size_t i = 0; i < e.size(); ++i)
                e[i] = ea[i] + eb[i];
            r.add_term(e, ca * cb);
        }
    }
    return r;
}

Polynomial Polynomial::pow(unsigned e) const {
    Polynomial r = constant(vars_, Rat(1));
    Polynomial base = *this;
    while (e) {
        if (e & 1u)
            r *= base;
        base *= base;
        e >>= 1u;
    }
    return r;
}

std::string Polynomial::str() const {
    if (terms_.empty())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [exps, c] = *it;
        Rat coeff = c;
        if (first) {
            if (coeff.sign() < 0) {
                os << "-";
                coeff = -coeff;
            }
        } else {
            os << (coeff.sign() < 0 ? " - " : " + ");
            if (coeff.sign() < 0)
                coeff = -coeff;
        }
        bool all_zero = std::all_of(exps.begin(), exps.end(), [](int e) { return e == 0; });
        bool printed_coeff = false;
        if (coeff != Rat(1) || all_zero) {
            os << coeff.str();
            printed_coeff = true;
        }
        bool printed_var = false;
        for (size_t i = 0; i < exps.size(); ++i) {
            if (exps[i] == 0)
                continue;
            if (printed_coeff || printed_var)
                os << "*";
            os << vars_[i];
            if (exps[i] > 1)
                os << "^" << exps[i];
            printed_var = true;
        }
        first = false;
    }
    return os.str();
}

namespace {

struct Lexer {
    const std::string& s;
    size_t i = 0;

    void skip_ws() {
        while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i])))
            ++i;
    }
    bool done() {
        skip_ws();
        return i >= s.size();
    }
    char peek() {
        skip_ws();
        return s[i];
    }
};

} // namespace

Polynomial Polynomial::parse(const std::string& text, const std::vector<std::string>& vars) {
    Polynomial result(vars);
    Lexer lx{text};

    auto var_index = [&](const std::string& name) -> int {
        auto it = std::find(vars.begin(), vars.end(), name);
        if (it == vars.end())
            throw domain_error("Polynomial::parse: unknown variable '" + name + "' in '" + text + "'");
        return static_cast<int>(it - vars.begin());
    };

    auto read_int = [&]() -> BigInt {
        lx.skip_ws();
        size_t start = lx.i;
        while (lx.i < lx.s.size() && std::isdigit(static_cast<unsigned char>(lx.s[lx.i])))
            ++lx.i;
        if (lx.i == start)
            throw domain_error("Polynomial::parse: expected integer in '" + text + "'");
        return BigInt(lx.s.substr(start, lx.i - start));
    };

    auto read_ident = [&]() -> std::string {
        lx.skip_ws();
        size_t start = lx.i;
        while (lx.i < lx.s.size() &&
               (std::isalnum(static_cast<unsigned char>(lx.s[lx.i])) || lx.s[lx.i] == '_'))
            ++lx.i;
        return lx.s.substr(start, lx.i - start);
    };

    bool first_term = true;
    while (!lx.done()) {
        int sign = 1;
        if (lx.peek() == '+' || lx.peek() == '-') {
            sign = (lx.peek() == '-') ? -1 : 1;
            ++lx.i;
        } else if (!first_term) {
            throw domain_error("Polynomial::parse: expected '+' or '-' in '" + text + "'");
        }
        first_term = false;

        Rat coeff(sign);
        Exponents exps(vars.size(), 0);
        bool saw_factor = false;

        while (true) {
            if (lx.done())
                break;
            char c = lx.peek();
            if (c == '+' || c == '-')
                break;
            if (c == '*') {
                ++lx.i;
                continue;
            }
            if (std::isdigit(static_cast<unsigned char>(c))) {
                BigInt num = read_int();
                if (!lx.done() && lx.peek() == '/') {
                    ++lx.i;
                    BigInt den = read_int();
                    coeff *= Rat(num, den);
                } else {
                    coeff *= Rat(num);
                }
                saw_factor = true;
                continue;
            }
            if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
                std::string name = read_ident();
                int idx = var_index(name);
                int e = 1;
                if (!lx.done() && lx.peek() == '^') {
                    ++lx.i;
                    e = static_cast<int>(to_int64(read_int()));
                }
                exps[idx] += e;
                saw_factor = true;
                continue;
            }
            throw domain_error(std::string("Polynomial::parse: unexpected character '") + c +
                               "' in '" + text + "'");
        }
        if (!saw_factor)
            throw domain_error("Polynomial::parse: empty term in '" + text + "'");
        result.add_term(exps, coeff);
    }
    return result;
}

std::vector<Polynomial::Exponents> monomial_exponents(int nvars, long degree) {
    std::vector<Polynomial::Exponents> out;
    if (degree < 0 || nvars <= 0)
        return out;
    Polynomial::Exponents cur(nvars, 0);
    // Recursive enumeration in lexicographic order.
    auto rec = [&](auto&& self, int pos, long remaining) -> void {
        if (pos == nvars - 1) {
            cur[pos] = static_cast<int>(remaining);
            out.push_back(cur);
            return;
        }
        for (long e = remaining; e >= 0; --e) {
            cur[pos] = static_cast<int>(e);
            self(self, pos + 1, remaining - e);
        }
    };
    rec(rec, 0, degree);
    return out;
}

} // namespace secring
