#include "rmhull/field_tower.hpp"

#include "rmhull/errors.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

namespace rmhull {
namespace {

constexpr std::uint64_t kMidOrderCap = 1u << 16;  // largest F_q handled
constexpr std::uint64_t kEnumCap = 1ull << 48;    // largest enumerable F_{q^m}

bool is_prime(int p) {
    if (p < 2) return false;
    for (long long d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

int mod_norm(long long v, int p) {
    long long r = v % p;
    return int(r < 0 ? r + p : r);
}

int mod_inv(int a, int p) {
    // extended Euclid; a nonzero mod p, p prime
    int t = 0, new_t = 1, r = p, new_r = a % p;
    while (new_r != 0) {
        int q = r / new_r;
        int tmp = t - q * new_t;
        t = new_t;
        new_t = tmp;
        tmp = r - q * new_r;
        r = new_r;
        new_r = tmp;
    }
    if (r != 1) throw Error("mod_inv: value not invertible");
    return mod_norm(t, p);
}

// --- dense polynomial helpers over a coefficient field adaptor ---
// Adaptor F supplies: E, zero(), one(), is_zero(), add, sub, mul, inv.

template <class F>
int poly_deg(const std::vector<typename F::E>& a, const F& f) {
    for (int i = int(a.size()) - 1; i >= 0; --i)
        if (!f.is_zero(a[i])) return i;
    return -1;
}

template <class F>
std::vector<typename F::E> poly_mul(const std::vector<typename F::E>& a,
                                    const std::vector<typename F::E>& b, const F& f) {
    if (a.empty() || b.empty()) return {};
    std::vector<typename F::E> out(a.size() + b.size() - 1, f.zero());
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (f.is_zero(a[i])) continue;
        for (std::size_t j = 0; j < b.size(); ++j)
            out[i + j] = f.add(out[i + j], f.mul(a[i], b[j]));
    }
    return out;
}

template <class F>
std::pair<std::vector<typename F::E>, std::vector<typename F::E>>
poly_divmod(std::vector<typename F::E> num, const std::vector<typename F::E>& den, const F& f) {
    int dd = poly_deg(den, f);
    if (dd < 0) throw Error("poly_divmod: division by the zero polynomial");
    auto lead_inv = f.inv(den[dd]);
    int dn = poly_deg(num, f);
    std::vector<typename F::E> quot(std::size_t(std::max(0, dn - dd + 1)), f.zero());
    while (dn >= dd) {
        auto c = f.mul(num[dn], lead_inv);
        quot[dn - dd] = c;
        for (int j = 0; j <= dd; ++j)
            num[dn - dd + j] = f.sub(num[dn - dd + j], f.mul(c, den[j]));
        dn = poly_deg(num, f);
    }
    return {std::move(quot), std::move(num)};
}

template <class F>
std::vector<typename F::E> poly_sub(const std::vector<typename F::E>& a,
                                    const std::vector<typename F::E>& b, const F& f) {
    std::vector<typename F::E> out(std::max(a.size(), b.size()), f.zero());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i];
    for (std::size_t i = 0; i < b.size(); ++i) out[i] = f.sub(out[i], b[i]);
    return out;
}

/// Inverse of a modulo the (irreducible, monic) modulus. Tracks only the
/// Bezout coefficient of a: s_i * a == r_i (mod modulus) throughout.
template <class F>
std::vector<typename F::E> poly_inv_mod(const std::vector<typename F::E>& a,
                                        const std::vector<typename F::E>& modulus, const F& f) {
    std::vector<typename F::E> old_r = a, r = modulus;
    std::vector<typename F::E> old_s{f.one()}, s;
    while (poly_deg(r, f) >= 0) {
        auto [q, rem] = poly_divmod(old_r, r, f);
        old_r = std::move(r);
        r = std::move(rem);
        auto new_s = poly_sub(old_s, poly_mul(q, s, f), f);
        old_s = std::move(s);
        s = std::move(new_s);
    }
    if (poly_deg(old_r, f) != 0) throw Error("poly_inv_mod: division by zero");
    auto scale = f.inv(old_r[0]);
    for (auto& c : old_s) c = f.mul(c, scale);
    auto [q2, rem2] = poly_divmod(old_s, modulus, f);
    (void)q2;
    rem2.resize(modulus.size() - 1, f.zero());
    return rem2;
}

/// Trial division by every lower-degree monic polynomial up to half degree.
template <class F>
bool poly_irreducible(const std::vector<typename F::E>& cand, const F& f, std::uint64_t field_size,
                      const std::function<typename F::E(std::uint64_t)>& element) {
    int d = poly_deg(cand, f);
    if (d <= 1) return d == 1;
    for (int dd = 1; dd <= d / 2; ++dd) {
        std::uint64_t tuples = 1;
        for (int i = 0; i < dd; ++i) tuples *= field_size;
        for (std::uint64_t t = 0; t < tuples; ++t) {
            std::vector<typename F::E> div(std::size_t(dd) + 1, f.zero());
            std::uint64_t rest = t;
            for (int i = 0; i < dd; ++i) {
                div[i] = element(rest % field_size);
                rest /= field_size;
            }
            div[dd] = f.one();
            auto [q, rem] = poly_divmod(cand, div, f);
            (void)q;
            if (poly_deg(rem, f) < 0) return false;
        }
    }
    return true;
}

/// Dictionary-smallest monic irreducible of degree d: coefficient tuples
/// (c_0 .. c_{d-1}) compared lowest degree first, constant term nonzero.
template <class F>
std::vector<typename F::E> find_modulus(int d, const F& f, std::uint64_t field_size,
                                        const std::function<typename F::E(std::uint64_t)>& element) {
    std::uint64_t tail = 1;
    for (int i = 1; i < d; ++i) tail *= field_size;
    for (std::uint64_t c0 = 1; c0 < field_size; ++c0) {
        for (std::uint64_t t = 0; t < tail; ++t) {
            std::vector<typename F::E> cand(std::size_t(d) + 1, f.zero());
            cand[0] = element(c0);
            // dictionary order: the highest-degree coefficient varies fastest
            std::uint64_t rest = t;
            for (int i = d - 1; i >= 1; --i) {
                cand[i] = element(rest % field_size);
                rest /= field_size;
            }
            cand[d] = f.one();
            if (poly_irreducible(cand, f, field_size, element)) return cand;
        }
    }
    throw InternalError("find_modulus: no irreducible polynomial found");
}

struct PrimeOps {
    int p;
    using E = int;
    E zero() const { return 0; }
    E one() const { return 1; }
    bool is_zero(E a) const { return a == 0; }
    E add(E a, E b) const { return mod_norm((long long)a + b, p); }
    E sub(E a, E b) const { return mod_norm((long long)a - b, p); }
    E mul(E a, E b) const { return mod_norm((long long)a * b, p); }
    E inv(E a) const {
        if (a % p == 0) throw Error("division by zero in F_p");
        return mod_inv(mod_norm(a, p), p);
    }
};

/// Arithmetic of F_q on raw digit vectors of length e.
struct MidOps {
    int p = 0, e = 0;
    std::vector<int> modulus; // e+1 coefficients, monic
    using E = std::vector<int>;

    E zero() const { return E(std::size_t(e), 0); }
    E one() const {
        E v(std::size_t(e), 0);
        v[0] = 1 % p;
        return v;
    }
    bool is_zero(const E& a) const {
        return std::all_of(a.begin(), a.end(), [](int d) { return d == 0; });
    }
    E add(const E& a, const E& b) const {
        E out(std::size_t(e), 0);
        for (int i = 0; i < e; ++i) out[i] = mod_norm((long long)a[i] + b[i], p);
        return out;
    }
    E sub(const E& a, const E& b) const {
        E out(std::size_t(e), 0);
        for (int i = 0; i < e; ++i) out[i] = mod_norm((long long)a[i] - b[i], p);
        return out;
    }
    E neg(const E& a) const {
        E out(std::size_t(e), 0);
        for (int i = 0; i < e; ++i) out[i] = mod_norm(-(long long)a[i], p);
        return out;
    }
    E mul(const E& a, const E& b) const {
        std::vector<long long> tmp(std::size_t(2 * e - 1), 0);
        for (int i = 0; i < e; ++i) {
            if (a[i] == 0) continue;
            for (int j = 0; j < e; ++j) tmp[i + j] += (long long)a[i] * b[j];
        }
        for (auto& v : tmp) v %= p;
        for (int i = 2 * e - 2; i >= e; --i) {
            long long c = mod_norm(tmp[i], p);
            if (c == 0) continue;
            for (int j = 0; j < e; ++j)
                tmp[i - e + j] = mod_norm(tmp[i - e + j] - c * modulus[j], p);
            tmp[i] = 0;
        }
        E out(std::size_t(e), 0);
        for (int i = 0; i < e; ++i) out[i] = mod_norm(tmp[i], p);
        return out;
    }
    E inv(const E& a) const {
        if (is_zero(a)) throw Error("division by zero in F_q");
        PrimeOps fp{p};
        std::vector<int> av(a.begin(), a.end());
        return poly_inv_mod(av, modulus, fp);
    }
};

std::vector<std::vector<int>> to_blocks(const std::vector<int>& flat, int e, int m) {
    std::vector<std::vector<int>> out(std::size_t(m), std::vector<int>{});
    for (int j = 0; j < m; ++j)
        out[j].assign(flat.begin() + std::ptrdiff_t(j) * e, flat.begin() + std::ptrdiff_t(j + 1) * e);
    return out;
}

std::vector<int> to_flat(const std::vector<std::vector<int>>& blocks, int e, int m) {
    std::vector<int> out;
    out.reserve(std::size_t(e) * m);
    for (int j = 0; j < m; ++j) out.insert(out.end(), blocks[j].begin(), blocks[j].end());
    return out;
}

MidOps mid_ops_of(const FieldTower& tw) {
    return MidOps{tw.p(), tw.e(), tw.mid_modulus()};
}

} // namespace

Tower FieldTower::make(int p, int e, int m) {
    if (!is_prime(p)) throw Error("make_tower: p = " + std::to_string(p) + " is not prime");
    if (e < 1 || m < 1) throw Error("make_tower: extension degrees must be at least 1");

    auto tower = std::shared_ptr<FieldTower>(new FieldTower());
    tower->p_ = p;
    tower->e_ = e;
    tower->m_ = m;

    std::uint64_t q = 1;
    for (int i = 0; i < e; ++i) {
        q *= std::uint64_t(p);
        if (q > kMidOrderCap) throw Error("make_tower: p^e exceeds desk scale");
    }
    tower->q_ = q;

    std::uint64_t top = 1;
    bool fits = true;
    for (int i = 0; i < m; ++i) {
        if (top > kEnumCap / q) {
            fits = false;
            break;
        }
        top *= q;
    }
    tower->top_order_ = fits ? top : 0;

    PrimeOps fp{p};
    tower->mid_modulus_ =
        find_modulus(e, fp, std::uint64_t(p), [](std::uint64_t i) { return int(i); });

    MidOps fq{p, e, tower->mid_modulus_};
    auto mid_at = [&](std::uint64_t idx) {
        std::vector<int> d(std::size_t(e), 0);
        for (int i = 0; i < e; ++i) {
            d[i] = int(idx % std::uint64_t(p));
            idx /= std::uint64_t(p);
        }
        return d;
    };
    auto top_mod = find_modulus(m, fq, q, mid_at);
    tower->top_modulus_.reserve(std::size_t(m) + 1);
    for (auto& c : top_mod) tower->top_modulus_.push_back(MidElement{std::move(c)});

    return tower;
}

std::uint64_t FieldTower::top_order() const {
    if (top_order_ == 0) throw Error("top field too large to enumerate");
    return top_order_;
}

void FieldTower::check_mid(const MidElement& a) const {
    if (int(a.digits.size()) != e_)
        throw Error("element does not belong to the middle field of " + describe());
}

void FieldTower::check_top(const TopElement& a) const {
    if (int(a.digits.size()) != e_ * m_)
        throw Error("element does not belong to the top field of " + describe());
}

MidElement FieldTower::mid_zero() const { return MidElement{std::vector<int>(std::size_t(e_), 0)}; }

MidElement FieldTower::mid_one() const { return MidElement{mid_ops_of(*this).one()}; }

MidElement FieldTower::mid_from_int(long long v) const {
    auto out = mid_zero();
    out.digits[0] = mod_norm(v, p_);
    return out;
}

MidElement FieldTower::mid_from_digits(std::vector<int> digits) const {
    if (int(digits.size()) != e_) throw Error("mid element needs exactly e digits");
    for (auto& d : digits) d = mod_norm(d, p_);
    return MidElement{std::move(digits)};
}

bool FieldTower::mid_is_zero(const MidElement& a) const {
    check_mid(a);
    return mid_ops_of(*this).is_zero(a.digits);
}

bool FieldTower::mid_is_one(const MidElement& a) const {
    check_mid(a);
    return a.digits == mid_ops_of(*this).one();
}

MidElement FieldTower::mid_add(const MidElement& a, const MidElement& b) const {
    check_mid(a);
    check_mid(b);
    return MidElement{mid_ops_of(*this).add(a.digits, b.digits)};
}

MidElement FieldTower::mid_sub(const MidElement& a, const MidElement& b) const {
    check_mid(a);
    check_mid(b);
    return MidElement{mid_ops_of(*this).sub(a.digits, b.digits)};
}

MidElement FieldTower::mid_neg(const MidElement& a) const {
    check_mid(a);
    return MidElement{mid_ops_of(*this).neg(a.digits)};
}

MidElement FieldTower::mid_mul(const MidElement& a, const MidElement& b) const {
    check_mid(a);
    check_mid(b);
    return MidElement{mid_ops_of(*this).mul(a.digits, b.digits)};
}

MidElement FieldTower::mid_inv(const MidElement& a) const {
    check_mid(a);
    return MidElement{mid_ops_of(*this).inv(a.digits)};
}

MidElement FieldTower::mid_div(const MidElement& a, const MidElement& b) const {
    return mid_mul(a, mid_inv(b));
}

MidElement FieldTower::mid(std::uint64_t index) const {
    if (index >= q_) throw Error("mid element index out of range");
    std::vector<int> d(std::size_t(e_), 0);
    for (int i = 0; i < e_; ++i) {
        d[i] = int(index % std::uint64_t(p_));
        index /= std::uint64_t(p_);
    }
    return MidElement{std::move(d)};
}

std::uint64_t FieldTower::mid_index(const MidElement& a) const {
    check_mid(a);
    std::uint64_t idx = 0;
    for (int i = e_ - 1; i >= 0; --i) idx = idx * std::uint64_t(p_) + std::uint64_t(a.digits[i]);
    return idx;
}

TopElement FieldTower::top_zero() const {
    return TopElement{std::vector<int>(std::size_t(e_) * m_, 0)};
}

TopElement FieldTower::top_one() const {
    auto out = top_zero();
    out.digits[0] = 1 % p_;
    return out;
}

TopElement FieldTower::top_from_digits(std::vector<int> digits) const {
    if (int(digits.size()) != e_ * m_) throw Error("top element needs exactly e*m digits");
    for (auto& d : digits) d = mod_norm(d, p_);
    return TopElement{std::move(digits)};
}

bool FieldTower::top_is_zero(const TopElement& a) const {
    check_top(a);
    return std::all_of(a.digits.begin(), a.digits.end(), [](int d) { return d == 0; });
}

bool FieldTower::top_is_one(const TopElement& a) const {
    check_top(a);
    return a.digits == top_one().digits;
}

TopElement FieldTower::top_add(const TopElement& a, const TopElement& b) const {
    check_top(a);
    check_top(b);
    TopElement out = a;
    for (std::size_t i = 0; i < out.digits.size(); ++i)
        out.digits[i] = mod_norm((long long)out.digits[i] + b.digits[i], p_);
    return out;
}

TopElement FieldTower::top_sub(const TopElement& a, const TopElement& b) const {
    check_top(a);
    check_top(b);
    TopElement out = a;
    for (std::size_t i = 0; i < out.digits.size(); ++i)
        out.digits[i] = mod_norm((long long)out.digits[i] - b.digits[i], p_);
    return out;
}

TopElement FieldTower::top_neg(const TopElement& a) const {
    check_top(a);
    TopElement out = a;
    for (auto& d : out.digits) d = mod_norm(-(long long)d, p_);
    return out;
}

TopElement FieldTower::top_mul(const TopElement& a, const TopElement& b) const {
    check_top(a);
    check_top(b);
    MidOps fq = mid_ops_of(*this);
    auto ab = to_blocks(a.digits, e_, m_);
    auto bb = to_blocks(b.digits, e_, m_);
    std::vector<std::vector<int>> tmp(std::size_t(2 * m_ - 1), fq.zero());
    for (int i = 0; i < m_; ++i) {
        if (fq.is_zero(ab[i])) continue;
        for (int j = 0; j < m_; ++j)
            tmp[i + j] = fq.add(tmp[i + j], fq.mul(ab[i], bb[j]));
    }
    for (int i = 2 * m_ - 2; i >= m_; --i) {
        if (fq.is_zero(tmp[i])) continue;
        auto c = tmp[i];
        for (int j = 0; j < m_; ++j)
            tmp[i - m_ + j] = fq.sub(tmp[i - m_ + j], fq.mul(c, top_modulus_[j].digits));
        tmp[i] = fq.zero();
    }
    tmp.resize(std::size_t(m_));
    return TopElement{to_flat(tmp, e_, m_)};
}

TopElement FieldTower::top_inv(const TopElement& a) const {
    check_top(a);
    if (top_is_zero(a)) throw Error("division by zero in the top field");
    MidOps fq = mid_ops_of(*this);
    auto av = to_blocks(a.digits, e_, m_);
    std::vector<std::vector<int>> mod;
    mod.reserve(top_modulus_.size());
    for (auto& c : top_modulus_) mod.push_back(c.digits);
    auto inv = poly_inv_mod(av, mod, fq);
    return TopElement{to_flat(inv, e_, m_)};
}

TopElement FieldTower::top_div(const TopElement& a, const TopElement& b) const {
    return top_mul(a, top_inv(b));
}

TopElement FieldTower::top_pow(const TopElement& a, std::uint64_t exp) const {
    check_top(a);
    TopElement base = a, out = top_one();
    while (exp > 0) {
        if (exp & 1) out = top_mul(out, base);
        exp >>= 1;
        if (exp > 0) base = top_mul(base, base);
    }
    return out;
}

TopElement FieldTower::top(std::uint64_t index) const {
    if (top_order_ == 0 || index >= top_order_) throw Error("top element index out of range");
    std::vector<int> flat;
    flat.reserve(std::size_t(e_) * m_);
    for (int j = 0; j < m_; ++j) {
        auto block = mid(index % q_);
        index /= q_;
        flat.insert(flat.end(), block.digits.begin(), block.digits.end());
    }
    return TopElement{std::move(flat)};
}

std::uint64_t FieldTower::top_index(const TopElement& a) const {
    check_top(a);
    if (top_order_ == 0) throw Error("top field too large to enumerate");
    std::uint64_t idx = 0;
    for (int j = m_ - 1; j >= 0; --j) idx = idx * q_ + mid_index(mid_coeff(a, j));
    return idx;
}

TopElement FieldTower::embed(const MidElement& a) const {
    check_mid(a);
    auto out = top_zero();
    std::copy(a.digits.begin(), a.digits.end(), out.digits.begin());
    return out;
}

std::optional<MidElement> FieldTower::try_project(const TopElement& a) const {
    check_top(a);
    for (std::size_t i = std::size_t(e_); i < a.digits.size(); ++i)
        if (a.digits[i] != 0) return std::nullopt;
    return MidElement{std::vector<int>(a.digits.begin(), a.digits.begin() + e_)};
}

bool FieldTower::in_mid(const TopElement& a) const { return try_project(a).has_value(); }

MidElement FieldTower::mid_coeff(const TopElement& a, int j) const {
    check_top(a);
    if (j < 0 || j >= m_) throw Error("mid_coeff: block index out of range");
    return MidElement{std::vector<int>(a.digits.begin() + std::ptrdiff_t(j) * e_,
                                       a.digits.begin() + std::ptrdiff_t(j + 1) * e_)};
}

TopElement FieldTower::frobenius(const TopElement& x, int iterations) const {
    if (iterations < 0) throw Error("frobenius: iteration count must be nonnegative");
    TopElement out = x;
    for (int i = 0; i < iterations; ++i) out = top_pow(out, q_);
    return out;
}

MidElement FieldTower::field_trace(const TopElement& x) const {
    check_top(x);
    TopElement acc = x, cur = x;
    for (int i = 1; i < m_; ++i) {
        cur = top_pow(cur, q_);
        acc = top_add(acc, cur);
    }
    auto projected = try_project(acc);
    if (!projected) throw InternalError("field_trace: sum left the middle field");
    return *projected;
}

std::string FieldTower::describe() const {
    std::ostringstream os;
    os << "F_" << p_ << "^" << (e_ * m_) << " over F_" << p_ << "^" << e_;
    return os.str();
}

std::string FieldTower::format_mid(const MidElement& a) const {
    check_mid(a);
    std::string out;
    for (int i = 0; i < e_; ++i) {
        if (i) out += ',';
        out += std::to_string(a.digits[i]);
    }
    return out;
}

std::string FieldTower::format_top(const TopElement& a) const {
    check_top(a);
    std::string out;
    for (int j = 0; j < m_; ++j) {
        if (j) out += ';';
        out += format_mid(mid_coeff(a, j));
    }
    return out;
}

bool same_tower(const Tower& a, const Tower& b) {
    if (!a || !b) return false;
    return a->p() == b->p() && a->e() == b->e() && a->m() == b->m();
}

} // namespace rmhull
