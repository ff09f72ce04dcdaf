#include <secring/rational.hpp>

#include <ostream>

namespace secring {

Rat::Rat(const BigInt& num, const BigInt& den) {
    if (den == 0)
        throw domain_error("Rat: zero denominator");
    v_ = mpq_class(num, den);
    v_.canonicalize();
}

Rat Rat::parse(const std::string& text) {
    auto slash = text.find('/');
    try {
        if (slash == std::string::npos)
            return Rat(BigInt(text));
        return Rat(BigInt(text.substr(0, slash)), BigInt(text.substr(slash + 1)));
    } catch (const std::invalid_argument&) {
        throw domain_error("Rat: cannot parse '" + text + "'");
    }
}

BigInt Rat::floor() const {
    BigInt q;
    mpz_fdiv_q(q.get_mpz_t(), v_.get_num().get_mpz_t(), v_.get_den().get_mpz_t());
    return q;
}

BigInt Rat::ceil() const {
    BigInt q;
    mpz_cdiv_q(q.get_mpz_t(), v_.get_num().get_mpz_t(), v_.get_den().get_mpz_t());
    return q;
}

Rat Rat::frac() const {
    return *this - Rat(floor());
}

std::string Rat::str() const {
    if (is_integer())
        return v_.get_num().get_str();
    return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

Rat Rat::operator-() const {
    Rat r;
    r.v_ = -v_;
    return r;
}

Rat& Rat::operator/=(const Rat& o) {
    if (o.is_zero())
        throw domain_error("Rat: division by zero");
    v_ /= o.v_;
    return *this;
}

std::ostream& operator<<(std::ostream& os, const Rat& r) {
    return os << r.str();
}

std::int64_t to_int64(const BigInt& n) {
    if (!n.fits_slong_p())
        throw domain_error("integer out of int64 range: " + n.get_str());
    return static_cast<std::int64_t>(n.get_si());
}

std::string to_string(const BigInt& n) {
    return n.get_str();
}

} // namespace secring
