#ifndef SECRING_ERRORS_HPP
#define SECRING_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace secring {

// Invalid construction data: duplicate component names, nonpositive degrees,
// ambient dimension mismatches, malformed JSON, bad polynomial input.
class domain_error : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// A divisor class admitted no order within the requested search bound;
// the class may be non-torsion.
class not_torsion_within_bound : public std::runtime_error {
public:
    not_torsion_within_bound(const std::string& what, long bound)
        : std::runtime_error(what), bound_(bound) {}
    long bound() const { return bound_; }

private:
    long bound_;
};

// A global-vanishing question could not be decided from the available
// certificates. Never a silent guess.
class undecided_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Twist compatibility n*c_A = m*c_B failed in segre_cover_compat.
class incompatible_twists : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Two routes that must agree disagreed; signals a bug or a violated
// assumption, not a user error.
class internal_consistency_error : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

// section_basis guardrail: the requested graded piece exceeds the basis cap.
class basis_too_large : public std::runtime_error {
public:
    basis_too_large(const std::string& what, long limit)
        : std::runtime_error(what), limit_(limit) {}
    long limit() const { return limit_; }

private:
    long limit_;
};

} // namespace secring

#endif
