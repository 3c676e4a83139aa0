#pragma once

/// The Pfaffian algebra B: free polynomials in the generators b_{ij} (i < j),
/// the q-Pfaffian recursion and matching-sum formulas, the two-form volume
/// theorem, the substitution b_{ij} -> sum_m xi^{2m-1,2m}_{i,j}, and the
/// Pf_q = det_q checks with the odd-order padding corollary.
///
/// B is represented freely: words are stored verbatim, identities that hold
/// only modulo the quadratic relation are checked either in the substituted
/// image or through an explicit ideal-membership certificate.

#include <cstdint>
#include <map>
#include <span>
#include <stdexcept>
#include <vector>

#include "qpf/matrix.hpp"
#include "qpf/scalar.hpp"

namespace qpf {

struct BGen {
    std::uint8_t lo, hi;

    BGen(int i, int j) {
        if (i < 1 || j < 1 || i >= j || j > 255)
            throw std::domain_error("BGen: require 1 <= i < j");
        lo = static_cast<std::uint8_t>(i);
        hi = static_cast<std::uint8_t>(j);
    }

    auto operator<=>(const BGen&) const = default;
};

using BWord = std::vector<BGen>;

/// A scalar-weighted sum of free words in the b_{ij}.
class BPoly {
public:
    using TermMap = std::map<BWord, LaurentScalar>;

    explicit BPoly(ScalarMode mode = ScalarMode::exact()) : mode_(mode) {}

    static BPoly unit(ScalarMode mode = ScalarMode::exact()) {
        BPoly p(mode);
        p.add_term({}, LaurentScalar::one());
        return p;
    }
    static BPoly generator(BGen g, ScalarMode mode = ScalarMode::exact()) {
        BPoly p(mode);
        p.add_term({g}, LaurentScalar::one());
        return p;
    }

    ScalarMode mode() const { return mode_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }
    const TermMap& terms() const { return terms_; }

    void add_term(const BWord& w, const LaurentScalar& c) {
        if (c.is_zero()) return;
        auto [it, fresh] = terms_.try_emplace(w, c);
        if (!fresh) {
            it->second.add_assign(c);
            if (it->second.is_zero()) terms_.erase(it);
        }
    }
    void add_assign(const BPoly& o) {
        require_compatible(o);
        for (const auto& [w, c] : o.terms_) add_term(w, c);
    }
    void sub_assign(const BPoly& o) {
        require_compatible(o);
        for (const auto& [w, c] : o.terms_) {
            LaurentScalar neg = c;
            neg.negate();
            add_term(w, neg);
        }
    }
    void negate() {
        for (auto& [w, c] : terms_) c.negate();
    }
    void scale(const LaurentScalar& s) {
        if (s.is_zero()) {
            terms_.clear();
            return;
        }
        TermMap scaled;
        for (const auto& [w, c] : terms_) {
            LaurentScalar sc = c.mul(s, mode_);
            if (!sc.is_zero()) scaled.emplace_hint(scaled.end(), w, std::move(sc));
        }
        terms_ = std::move(scaled);
    }

    friend BPoly operator+(BPoly a, const BPoly& b) {
        a.add_assign(b);
        return a;
    }
    friend BPoly operator-(BPoly a, const BPoly& b) {
        a.sub_assign(b);
        return a;
    }

    bool operator==(const BPoly& o) const { return mode_ == o.mode_ && terms_ == o.terms_; }

    void require_compatible(const BPoly& o) const {
        if (!(mode_ == o.mode_)) throw std::domain_error("BPoly: mode mismatch");
    }

private:
    ScalarMode mode_;
    TermMap terms_;
};

/// Free concatenation product.
BPoly coeff_mul(const BPoly& a, const BPoly& b);

/// A partition of an index set into increasing pairs, in block order.
struct Matching {
    std::vector<BGen> pairs;
    bool operator==(const Matching&) const = default;
};

/// All matchings of the (sorted, even-sized) index set S. Canonical: block
/// first elements increase (the set Pi); otherwise all block orders (Pi').
std::vector<Matching> enumerate_matchings(std::span<const int> S, bool canonical);

/// l(pi): inversion count of the concatenated pair word, entries replaced by
/// their ranks within sorted S.
long matching_length(const Matching& m, std::span<const int> S);

/// The first-index expansion recursion; positional exponents are computed on
/// ranks within S, reducing to the plain j - 2 exponents when S = {1..2n}.
BPoly pf_recursive(std::span<const int> S, ScalarMode mode = ScalarMode::exact());

/// The Pi (canonical = true) or Pi' (canonical = false) matching sum.
BPoly pf_matchings(std::span<const int> S, bool canonical,
                   ScalarMode mode = ScalarMode::exact());

/// Substitute b_{ij} -> sum_{m=1..n} xi^{2m-1,2m}_{i,j} (Row) or the column
/// variant xi^{i,j}_{2m-1,2m}, into M_q(2n), fully normalized.
///
/// padded_from > 0 evaluates generators at the padded point (see
/// quantum_minor); used by the odd-order corollary.
MatPoly substitute_b(const BPoly& p, int n, Orientation variant,
                     ScalarMode mode = ScalarMode::exact(), int padded_from = 0);

/// LHS - RHS of the quadratic relation (i<j<k<l):
/// b_ij b_kl + (-q) b_ik b_jl + (-q)^2 b_il b_jk
///   - b_kl b_ij - (-q)^{-1} b_jl b_ik - (-q)^{-2} b_jk b_il.
BPoly b_relation(int i, int j, int k, int l, ScalarMode mode = ScalarMode::exact());

/// The substituted images of all b_{ij} satisfy the quadratic relation.
bool b_relation_check(int n, Orientation variant, ScalarMode mode = ScalarMode::exact());

/// substitute_b(pf_recursive({1..2n})) equals quantum_det(2n) exactly.
bool pf_det_check(int n, Orientation variant);

/// The (2n+1)-order determinant as an order-(n+1) Pfaffian via zero padding
/// of row/column 2n+2 (diagonal entry 1).
bool odd_pf_det_check(int n, Orientation variant);

/// Coefficient of x_1 ^ ... ^ x_{2n} in wedge^n of
/// Omega = sum_{i<j} b_{ij} x_i ^ x_j, with free B coefficients.
BPoly pf_two_form_volume(int n);

/// wedge^n Omega equals the Pi' sum, and the Pi' sum minus
/// q_factorial_factor(n,4) * Pf is zero or a certified member of the
/// relation ideal.
bool pfaffian_two_form_check(int n);

}  // namespace qpf
