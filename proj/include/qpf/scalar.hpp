#pragma once

/// Exact scalar arithmetic: Laurent polynomials in q over arbitrary-precision
/// rationals, optionally reduced in the quotient ring by q^M - 1.
///
/// A LaurentScalar is the coefficient ring for everything else in the engine.
/// q is a formal indeterminate; identities proved here hold for every nonzero
/// complex specialization of q (and, in modular mode, for every M-th root of
/// unity).

#include <gmpxx.h>

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>

namespace qpf {

using Rational = mpq_class;

/// Arithmetic regime for scalars: the full Laurent ring, or the quotient by
/// q^M - 1 (exponents folded into [0, M)).
struct ScalarMode {
    unsigned modulus = 0;  // 0 = exact

    static constexpr ScalarMode exact() { return ScalarMode{0}; }
    static ScalarMode modular(unsigned m) {
        if (m == 0) throw std::invalid_argument("modular mode requires M >= 1");
        return ScalarMode{m};
    }
    constexpr bool is_exact() const { return modulus == 0; }

    bool operator==(const ScalarMode&) const = default;
};

class LaurentScalar {
public:
    using TermMap = std::map<std::int64_t, Rational>;

    LaurentScalar() = default;  // zero

    static LaurentScalar integer(long v) {
        LaurentScalar s;
        if (v != 0) s.terms_[0] = Rational(v);
        return s;
    }
    static LaurentScalar rational(const Rational& r) {
        LaurentScalar s;
        if (r != 0) s.terms_[0] = r;
        return s;
    }
    static LaurentScalar one() { return integer(1); }

    /// q^e
    static LaurentScalar q_pow(std::int64_t e) {
        LaurentScalar s;
        s.terms_[e] = Rational(1);
        return s;
    }

    /// (-q)^e = (-1)^e q^e, defined for any integer e.
    static LaurentScalar neg_q_pow(std::int64_t e) {
        LaurentScalar s;
        s.terms_[e] = Rational((e % 2 == 0) ? 1 : -1);
        return s;
    }

    /// q - q^{-1}, the structure constant of the straightening relation.
    static LaurentScalar q_minus_q_inv() {
        LaurentScalar s;
        s.terms_[1] = Rational(1);
        s.terms_[-1] = Rational(-1);
        return s;
    }

    bool is_zero() const { return terms_.empty(); }
    bool is_one() const {
        return terms_.size() == 1 && terms_.begin()->first == 0 &&
               terms_.begin()->second == 1;
    }
    std::size_t term_count() const { return terms_.size(); }
    const TermMap& terms() const { return terms_; }

    /// Coefficient of q^e (zero if absent).
    Rational coeff(std::int64_t e) const {
        auto it = terms_.find(e);
        return it == terms_.end() ? Rational(0) : it->second;
    }

    /// Canonical image under the given mode (folds exponents mod M).
    LaurentScalar reduced(ScalarMode mode) const {
        if (mode.is_exact()) return *this;
        LaurentScalar out;
        const auto m = static_cast<std::int64_t>(mode.modulus);
        for (const auto& [e, c] : terms_) {
            std::int64_t f = ((e % m) + m) % m;
            auto [it, fresh] = out.terms_.try_emplace(f, c);
            if (!fresh) {
                it->second += c;
                if (it->second == 0) out.terms_.erase(it);
            }
        }
        return out;
    }

    void negate() {
        for (auto& [e, c] : terms_) c = -c;
    }

    void add_assign(const LaurentScalar& o) {
        for (const auto& [e, c] : o.terms_) {
            auto [it, fresh] = terms_.try_emplace(e, c);
            if (!fresh) {
                it->second += c;
                if (it->second == 0) terms_.erase(it);
            }
        }
    }
    void sub_assign(const LaurentScalar& o) {
        for (const auto& [e, c] : o.terms_) {
            auto [it, fresh] = terms_.try_emplace(e, -c);
            if (!fresh) {
                it->second -= c;
                if (it->second == 0) terms_.erase(it);
            }
        }
    }

    /// *this *= q^k, folded under the mode. O(terms).
    void shift_assign(std::int64_t k, ScalarMode mode) {
        if (k == 0 || terms_.empty()) return;
        TermMap shifted;
        if (mode.is_exact()) {
            for (auto& [e, c] : terms_) shifted.emplace_hint(shifted.end(), e + k, std::move(c));
        } else {
            const auto m = static_cast<std::int64_t>(mode.modulus);
            for (auto& [e, c] : terms_) {
                std::int64_t f = (((e + k) % m) + m) % m;
                auto [it, fresh] = shifted.try_emplace(f, std::move(c));
                if (!fresh) {
                    it->second += c;
                    if (it->second == 0) shifted.erase(it);
                }
            }
        }
        terms_ = std::move(shifted);
    }

    void scale_assign(const Rational& r) {
        if (r == 0) {
            terms_.clear();
            return;
        }
        for (auto& [e, c] : terms_) c *= r;
    }

    LaurentScalar mul(const LaurentScalar& o, ScalarMode mode) const {
        LaurentScalar out;
        if (terms_.empty() || o.terms_.empty()) return out;
        const auto m = static_cast<std::int64_t>(mode.modulus);
        for (const auto& [ea, ca] : terms_) {
            for (const auto& [eb, cb] : o.terms_) {
                std::int64_t e = ea + eb;
                if (m) e = ((e % m) + m) % m;
                Rational prod = ca * cb;
                auto [it, fresh] = out.terms_.try_emplace(e, std::move(prod));
                if (!fresh) {
                    it->second += prod;
                    if (it->second == 0) out.terms_.erase(it);
                }
            }
        }
        return out;
    }

    LaurentScalar pow(unsigned k, ScalarMode mode) const {
        LaurentScalar out = one();
        for (unsigned i = 0; i < k; ++i) out = out.mul(*this, mode);
        return out;
    }

    friend LaurentScalar operator+(LaurentScalar a, const LaurentScalar& b) {
        a.add_assign(b);
        return a;
    }
    friend LaurentScalar operator-(LaurentScalar a, const LaurentScalar& b) {
        a.sub_assign(b);
        return a;
    }
    friend LaurentScalar operator-(LaurentScalar a) {
        a.negate();
        return a;
    }
    /// Exact-mode product; use mul() when a mode is in force.
    friend LaurentScalar operator*(const LaurentScalar& a, const LaurentScalar& b) {
        return a.mul(b, ScalarMode::exact());
    }

    bool operator==(const LaurentScalar&) const = default;

    std::int64_t min_exponent() const {
        if (terms_.empty()) throw std::domain_error("min_exponent of zero scalar");
        return terms_.begin()->first;
    }
    std::int64_t max_exponent() const {
        if (terms_.empty()) throw std::domain_error("max_exponent of zero scalar");
        return terms_.rbegin()->first;
    }

private:
    TermMap terms_;
};

enum class ScalarOp { Add, Mul };

inline LaurentScalar scalar_arith(const LaurentScalar& a, const LaurentScalar& b,
                                  ScalarOp op, ScalarMode mode) {
    if (op == ScalarOp::Add) return (a + b).reduced(mode);
    return a.mul(b, mode);
}

/// Exact quotient a / b in the Laurent ring; throws if b does not divide a.
LaurentScalar laurent_divexact(const LaurentScalar& a, const LaurentScalar& b);

/// gcd in the Laurent ring, normalized monic with minimum exponent 0.
/// gcd(0, b) = normalized b.
LaurentScalar laurent_gcd(const LaurentScalar& a, const LaurentScalar& b);

}  // namespace qpf
