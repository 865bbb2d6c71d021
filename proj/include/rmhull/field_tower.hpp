#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace rmhull {

/// Element of the middle field F_q = F_p[x]/(mid modulus): its e coefficients
/// over F_p, lowest degree first, each reduced into [0, p).
struct MidElement {
    std::vector<int> digits;
    bool operator==(const MidElement&) const = default;
};

/// Element of the top field F_{q^m} = F_q[y]/(top modulus): m blocks of e
/// base-p digits, innermost level first. Block j is the F_q coordinate of y^j.
struct TopElement {
    std::vector<int> digits;
    bool operator==(const TopElement&) const = default;
};

class FieldTower;
using Tower = std::shared_ptr<const FieldTower>;

/// Two-level extension tower F_p < F_q = F_{p^e} < F_{q^m} with dense
/// coefficient arithmetic throughout. Immutable after construction. The
/// moduli are the dictionary-smallest monic irreducibles of the required
/// degrees (coefficient tuples compared lowest degree first, constant term
/// nonzero), so towers with equal (p, e, m) are interchangeable.
class FieldTower {
public:
    /// Builds the tower for the given prime and degrees. Errors on a
    /// composite p, a degree below one, or sizes past desk scale.
    static Tower make(int p, int e, int m);

    int p() const { return p_; }
    int e() const { return e_; }
    int m() const { return m_; }
    /// Order of the middle field, p^e.
    std::uint64_t q() const { return q_; }
    /// Order of the top field, q^m.
    std::uint64_t top_order() const;

    /// Monic modulus of F_q over F_p, e+1 coefficients, lowest degree first.
    const std::vector<int>& mid_modulus() const { return mid_modulus_; }
    /// Monic modulus of F_{q^m} over F_q, m+1 coefficients.
    const std::vector<MidElement>& top_modulus() const { return top_modulus_; }

    // middle field arithmetic
    MidElement mid_zero() const;
    MidElement mid_one() const;
    MidElement mid_from_int(long long v) const; // embeds v mod p
    MidElement mid_from_digits(std::vector<int> digits) const;
    bool mid_is_zero(const MidElement&) const;
    bool mid_is_one(const MidElement&) const;
    MidElement mid_add(const MidElement&, const MidElement&) const;
    MidElement mid_sub(const MidElement&, const MidElement&) const;
    MidElement mid_neg(const MidElement&) const;
    MidElement mid_mul(const MidElement&, const MidElement&) const;
    MidElement mid_inv(const MidElement&) const;
    MidElement mid_div(const MidElement&, const MidElement&) const;

    /// Deterministic enumeration of F_q: index written base p, digit i giving
    /// the coefficient of x^i. Index 0 is zero, indices below p the prime field.
    MidElement mid(std::uint64_t index) const;
    std::uint64_t mid_index(const MidElement&) const;

    // top field arithmetic
    TopElement top_zero() const;
    TopElement top_one() const;
    TopElement top_from_digits(std::vector<int> digits) const;
    bool top_is_zero(const TopElement&) const;
    bool top_is_one(const TopElement&) const;
    TopElement top_add(const TopElement&, const TopElement&) const;
    TopElement top_sub(const TopElement&, const TopElement&) const;
    TopElement top_neg(const TopElement&) const;
    TopElement top_mul(const TopElement&, const TopElement&) const;
    TopElement top_inv(const TopElement&) const;
    TopElement top_div(const TopElement&, const TopElement&) const;
    TopElement top_pow(const TopElement&, std::uint64_t) const;

    /// Deterministic enumeration of F_{q^m}: index written base q over the
    /// mid enumeration, block j giving the coefficient of y^j.
    TopElement top(std::uint64_t index) const;
    std::uint64_t top_index(const TopElement&) const;

    /// Constant embedding F_q -> F_{q^m}.
    TopElement embed(const MidElement&) const;
    /// Inverse of embed when defined; nullopt for entries outside F_q.
    std::optional<MidElement> try_project(const TopElement&) const;
    bool in_mid(const TopElement&) const;
    /// Block j of x: the F_q coordinate of y^j.
    MidElement mid_coeff(const TopElement&, int j) const;

    /// x^(q^i), computed by i exact q-power steps. Requires i >= 0.
    TopElement frobenius(const TopElement& x, int iterations) const;
    /// Trace onto F_q: sum of x^(q^i) for 0 <= i < m. The sum is verified to
    /// land in F_q; a violation reports a broken modulus.
    MidElement field_trace(const TopElement& x) const;

    std::string describe() const;
    std::string format_mid(const MidElement&) const;
    std::string format_top(const TopElement&) const;

private:
    FieldTower() = default;

    int p_ = 0, e_ = 0, m_ = 0;
    std::uint64_t q_ = 0;
    std::uint64_t top_order_ = 0; // 0 when past the enumeration cap
    std::vector<int> mid_modulus_;
    std::vector<MidElement> top_modulus_;

    void check_mid(const MidElement&) const;
    void check_top(const TopElement&) const;
};

/// True when both towers have equal (p, e, m); such towers share moduli and
/// their elements are interchangeable.
bool same_tower(const Tower&, const Tower&);

} // namespace rmhull
