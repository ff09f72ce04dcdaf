#ifndef SECRING_GRADED_HPP
#define SECRING_GRADED_HPP

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include <secring/cover.hpp>
#include <secring/section_ring.hpp>

namespace secring {

/// Certified superset of the degrees where a dimension function can be
/// nonzero: the union of residue classes (mod modulus). Positivity
/// certificates quantify over supported degrees only.
struct Support {
    std::int64_t modulus = 1;
    std::vector<std::int64_t> residues = {0}; // sorted, unique, in [0, modulus)

    static Support all() { return Support{}; }
    static Support none() { return Support{1, {}}; }
    static Support lattice(std::int64_t modulus, std::int64_t residue);

    bool is_empty() const { return residues.empty(); }
    bool is_all() const { return modulus == 1 && residues.size() == 1; }
    bool contains(std::int64_t n) const;
    /// Largest supported degree <= n (nullopt if empty).
    std::optional<std::int64_t> floor_member(std::int64_t n) const;
    /// Smallest supported degree >= n (nullopt if empty).
    std::optional<std::int64_t> ceil_member(std::int64_t n) const;

    Support scaled(std::int64_t t) const;
    bool subset_of(const Support& other) const;

    static Support intersect(const Support& a, const Support& b);
    static Support unite(const Support& a, const Support& b);
};

/// A graded dimension function Z -> N with certified vanishing/positivity
/// tails, making "zero for all n" decidable. Semantics of the certificates:
///   zero_below L:     eval(n) = 0 for all n < L
///   zero_above U:     eval(n) = 0 for all n > U
///   positive_below P: eval(n) > 0 for all supported n <= P
///   positive_above P: eval(n) > 0 for all supported n >= P
/// eval(n) = 0 whenever n is outside the support.
class CertifiedDimFn {
public:
    using Eval = std::function<BigInt(std::int64_t)>;

    CertifiedDimFn() : CertifiedDimFn(zero()) {}
    CertifiedDimFn(Eval eval, Support support) : eval_(std::move(eval)), support_(std::move(support)) {}

    static CertifiedDimFn zero();

    BigInt operator()(std::int64_t n) const;

    const Support& support() const { return support_; }
    std::optional<std::int64_t> zero_below, zero_above, positive_below, positive_above;

    bool is_identically_zero_certified() const;

    /// Spot-verifies every present certificate against eval on `samples`
    /// supported points beyond its bound; throws internal_consistency_error.
    void verify(int samples = 64) const;

private:
    Eval eval_;
    Support support_;
};

CertifiedDimFn dim_product(const CertifiedDimFn& a, const CertifiedDimFn& b);
CertifiedDimFn dim_sum(std::vector<CertifiedDimFn> terms);
/// Reindex onto a finer grading: g(n) = f(n/t) when t | n, else 0.
CertifiedDimFn dim_rescaled(const CertifiedDimFn& f, std::int64_t t);

enum class Vanishing { Zero, NonZero, Undecided };

/// Decides whether f is identically zero, using certificates plus a finite
/// scan; Undecided when the certificates cannot close the question.
Vanishing decide_identically_zero(const CertifiedDimFn& f);

/// Krull dimension plus Hilbert and graded local-cohomology dimension
/// functions; the universal currency of the Kunneth engine. Degrees are in
/// units of 1/scale (scaled integer grading).
struct GradedObject {
    int krull_dim = 0;
    std::int64_t scale = 1;
    CertifiedDimFn hilbert;
    std::vector<CertifiedDimFn> lc; // indexed 0..krull_dim
    // Kunneth hypotheses (normal rings, reflexive modules) are not decidable
    // from dimension data; recorded as caller assertions for reports.
    bool normal_asserted = true;
    bool reflexive_asserted = true;
    std::string label;
};

GradedObject to_graded_object(const SectionRing& R);
GradedObject export_graded_object(const CoverDescriptor& C);

/// Kunneth formula for local cohomology of a Segre product:
/// H^k(M#N) = (M # H^k(N)) + (H^k(M) # N) + sum_{i+j=k+1} H^i(M) # H^j(N),
/// at dimension level, with krull_dim = r + s - 1 and factors aligned on
/// the lcm of their grading scales.
GradedObject segre(const GradedObject& M, const GradedObject& N);

/// Least k with H^k not identically zero. Throws undecided_error when a
/// needed certificate is missing.
int depth(const GradedObject& O);

bool is_cm(const GradedObject& O);

/// Highest degree (in the object's scaled grading) where the top local
/// cohomology is nonzero.
std::int64_t a_inv(const GradedObject& O);

/// hilbert(n) > 0 for all n >= 1 (certificate + finite scan).
bool has_elements_in_all_positive_degrees(const GradedObject& O);

struct GotoWatanabeReport {
    bool a_is_cm = false, b_is_cm = false;
    bool dims_at_least_two = false;
    std::int64_t a_of_a = 0, a_of_b = 0;
    bool hypotheses_hold = false;     // both CM, dims >= 2, both a < 0
    bool product_cm = false;
    std::int64_t product_a = 0;
    bool conclusion_holds = false;    // product CM with a < 0
    bool a_all_positive_degrees = false, b_all_positive_degrees = false;
    int product_dim = 0;
    int product_depth = 0;
};

/// Evaluates both directions of the Segre CM criterion and checks the
/// implications; a violated implication throws internal_consistency_error.
GotoWatanabeReport goto_watanabe_report(const GradedObject& A, const GradedObject& B);

struct SegreCoverCompat {
    CanonicalOrderResult order_a{0, 0}, order_b{0, 0};
    bool twist_compatible = false;    // n*c_A == m*c_B, i.e. n deg u = m deg v
    bool coprime_orders = false;
    long product_order = 0;           // m*n when coprime
    std::int64_t product_twist = 0;   // omega_{A#B}^(mn) ~ (A#B)(this)
    bool cover_identified = false;    // dims of cover-of-Segre == segre-of-covers
    std::int64_t window_lo = 0, window_hi = 0;
};

/// Checks Q-Gorenstein compatibility of a Segre product and, for coprime
/// orders, certifies at dimension level that the canonical cover of A#B is
/// the Segre product of the canonical covers. Throws incompatible_twists
/// when n*c_A != m*c_B.
SegreCoverCompat segre_cover_compat(const SectionRing& A, const SectionRing& B, long bound,
                                    std::int64_t window = 12);

} // namespace secring

#endif
