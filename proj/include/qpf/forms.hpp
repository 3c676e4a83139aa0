#pragma once

/// The quantum exterior algebra Lambda_N and A (x) Lambda: q-wedge products,
/// the 1-forms omega_i / omega'_i (and their truncations from the Pluecker
/// proofs), wedge-based determinants, and the Pluecker relation sums.
///
/// Exterior basis tuples are kept as bit sets over [1, N]; the reordering
/// sign of a disjoint merge is (-q)^c where c counts crossing pairs.

#include <bit>
#include <cstdint>
#include <map>
#include <span>
#include <stdexcept>
#include <vector>

#include "qpf/matrix.hpp"

namespace qpf {

/// Bit i-1 represents x_i.
inline std::uint32_t ext_bits(std::span<const int> indices) {
    std::uint32_t b = 0;
    for (int i : indices) {
        if (i < 1 || i > 32) throw std::domain_error("exterior index out of range");
        b |= (1u << (i - 1));
    }
    return b;
}

inline std::vector<int> ext_indices(std::uint32_t bits) {
    std::vector<int> out;
    for (int i = 1; bits; ++i, bits >>= 1)
        if (bits & 1u) out.push_back(i);
    return out;
}

/// #{(s, t) in S x T : s > t} — the exponent of (-q) when x_S ^ x_T is
/// reordered into the sorted basis tuple.
inline int wedge_crossings(std::uint32_t S, std::uint32_t T) {
    int c = 0;
    for (std::uint32_t t = T; t; t &= t - 1) {
        const int bit = std::countr_zero(t);
        // elements of S strictly above `bit`
        c += std::popcount(S & ~((bit == 31) ? 0xffffffffu : ((2u << bit) - 1u)));
    }
    return c;
}

/// An element of Coeff (x) Lambda_N. Coeff is MatPoly for A (x) Lambda and a
/// free B-algebra polynomial for the two-form volume checks.
template <class Coeff>
class FormT {
public:
    FormT(int N, Coeff zero) : N_(N), zero_(std::move(zero)) {
        if (N < 0 || N > 32) throw std::domain_error("Form: exterior size out of range");
        if (!zero_.is_zero()) throw std::domain_error("Form: prototype must be zero");
    }

    int N() const { return N_; }
    const Coeff& zero_coeff() const { return zero_; }
    const std::map<std::uint32_t, Coeff>& components() const { return comps_; }
    bool is_zero() const { return comps_.empty(); }

    const Coeff& component(std::uint32_t bits) const {
        auto it = comps_.find(bits);
        return it == comps_.end() ? zero_ : it->second;
    }

    void add_component(std::uint32_t bits, const Coeff& c) {
        if (c.is_zero()) return;
        if (bits >> N_) throw std::domain_error("Form: component outside ambient size");
        auto [it, fresh] = comps_.try_emplace(bits, c);
        if (!fresh) {
            it->second.add_assign(c);
            if (it->second.is_zero()) comps_.erase(it);
        }
    }

    void add_assign(const FormT& o) {
        require_compatible(o);
        for (const auto& [b, c] : o.comps_) add_component(b, c);
    }
    void sub_assign(const FormT& o) {
        require_compatible(o);
        for (const auto& [b, c] : o.comps_) {
            Coeff neg = c;
            neg.negate();
            add_component(b, neg);
        }
    }
    void scale(const LaurentScalar& s) {
        std::map<std::uint32_t, Coeff> scaled;
        for (auto& [b, c] : comps_) {
            c.scale(s);
            if (!c.is_zero()) scaled.emplace_hint(scaled.end(), b, std::move(c));
        }
        comps_ = std::move(scaled);
    }

    bool operator==(const FormT& o) const {
        return N_ == o.N_ && zero_ == o.zero_ && comps_ == o.comps_;
    }

    void require_compatible(const FormT& o) const {
        if (N_ != o.N_ || !(zero_ == o.zero_))
            throw std::domain_error("Form: ambient size or coefficient ring mismatch");
    }

private:
    int N_;
    Coeff zero_;
    std::map<std::uint32_t, Coeff> comps_;
};

/// Bilinear q-wedge: zero on overlapping tuples, (-q)^crossings on disjoint
/// ones; coefficients multiply in the coefficient ring (they commute with the
/// exterior variables).
template <class Coeff>
FormT<Coeff> wedge(const FormT<Coeff>& f, const FormT<Coeff>& g) {
    f.require_compatible(g);
    FormT<Coeff> out(f.N(), f.zero_coeff());
    const ScalarMode mode = f.zero_coeff().mode();
    for (const auto& [S, a] : f.components()) {
        for (const auto& [T, b] : g.components()) {
            if (S & T) continue;
            Coeff c = coeff_mul(a, b);
            c.scale(LaurentScalar::neg_q_pow(wedge_crossings(S, T)).reduced(mode));
            out.add_component(S | T, c);
        }
    }
    return out;
}

inline MatPoly coeff_mul(const MatPoly& a, const MatPoly& b) { return mat_mul(a, b); }

using Form = FormT<MatPoly>;

/// Which 1-form: omega_i (Row), omega'_i (Col), or the truncations
/// omega_{ir} (RowLo: columns 1..r) and omega'_{ir} (RowHi: columns r+1..N)
/// used inside the Pluecker proofs.
struct OneFormKind {
    enum class Base { Row, Col, RowLo, RowHi };
    Base base = Base::Row;
    int r = 0;

    static OneFormKind row() { return {Base::Row, 0}; }
    static OneFormKind col() { return {Base::Col, 0}; }
    static OneFormKind row_lo(int r) { return {Base::RowLo, r}; }
    static OneFormKind row_hi(int r) { return {Base::RowHi, r}; }
};

Form one_form(int i, int n, int N, OneFormKind kind, ScalarMode mode = ScalarMode::exact());

/// Coefficient of x_1 ^ ... ^ x_n in omega_1 ^ ... ^ omega_n; equals the
/// quantum determinant of the chosen orientation.
MatPoly det_via_wedge(int n, Orientation orient, ScalarMode mode = ScalarMode::exact());

enum class PlueckerVariant { Plus, Minus };

/// One summand of the Pluecker sum: the split columns and the permutation
/// length driving its (-q) weight.
struct PlueckerTerm {
    long sigma_length;
    std::vector<int> cols_first;   // i_1 < ... < i_n (i_k = k for k <= r)
    std::vector<int> cols_second;  // i_{n+1} < ... < i_{2n}
};

std::vector<PlueckerTerm> pluecker_sum_terms(int n, int r);

/// The Pluecker vanishing sum over admissible column splits of {1..2n};
/// normalizes to zero. `rowset` supplies the n upper indices (1..n by
/// default); `transposed` swaps the upper/lower roles of every minor.
MatPoly pluecker_vanishing_sum(int n, int r, std::span<const int> rowset,
                               PlueckerVariant variant, bool transposed,
                               ScalarMode mode = ScalarMode::exact());

/// Left- and right-hand sides of the Pluecker exchange identity (the RHS
/// already carries its (-q)^{n^2-2nr} prefactor).
std::pair<MatPoly, MatPoly> pluecker_exchange_sides(int n, int r,
                                                    ScalarMode mode = ScalarMode::exact());

bool pluecker_exchange_check(int n, int r, ScalarMode mode = ScalarMode::exact());

}  // namespace qpf
