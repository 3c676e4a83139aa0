#pragma once

/// Quantum hyper-Pfaffians: partitions into m-element blocks, the block
/// relation, the recursion and matching-sum formulas, substitution by
/// m-row quantum minors under the modular scalar regime q^{8 C(k,2)} = 1,
/// and the hyper-Pfaffian = determinant checks with padding corollaries.

#include <cstdint>
#include <map>
#include <span>
#include <stdexcept>
#include <vector>

#include "qpf/matrix.hpp"
#include "qpf/scalar.hpp"

namespace qpf {

/// The modulus realizing q^{8 C(k,2)} = 1 as a quotient: M = 4k(k-1).
/// M = 0 (k = 1) signals Exact mode — the hypothesis is vacuous.
inline unsigned modulus_for(unsigned k) {
    if (k < 1) throw std::domain_error("modulus_for: k must be >= 1");
    return 4u * k * (k - 1);
}

inline ScalarMode mode_for_block_size(int m) {
    if (m < 2 || m % 2 != 0) throw std::domain_error("block size m must be even, >= 2");
    const unsigned M = modulus_for(static_cast<unsigned>(m) / 2);
    return M == 0 ? ScalarMode::exact() : ScalarMode::modular(M);
}

/// A word in the block generators b_{i_1,...,i_m}: blocks concatenated flat,
/// each block strictly increasing. Block size is carried by the polynomial.
using HWord = std::vector<std::uint8_t>;

/// A scalar-weighted sum of free block words of a fixed block size m.
class HPoly {
public:
    using TermMap = std::map<HWord, LaurentScalar>;

    explicit HPoly(int m, ScalarMode mode = ScalarMode::exact()) : m_(m), mode_(mode) {
        if (m < 2) throw std::domain_error("HPoly: block size must be >= 2");
    }

    static HPoly unit(int m, ScalarMode mode = ScalarMode::exact()) {
        HPoly p(m, mode);
        p.add_term({}, LaurentScalar::one());
        return p;
    }
    static HPoly generator(std::span<const int> block, int m,
                           ScalarMode mode = ScalarMode::exact()) {
        HPoly p(m, mode);
        p.add_term(p.make_block(block), LaurentScalar::one());
        return p;
    }

    int m() const { return m_; }
    ScalarMode mode() const { return mode_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }
    const TermMap& terms() const { return terms_; }

    /// Validated single block as a flat word fragment.
    HWord make_block(std::span<const int> block) const {
        if (static_cast<int>(block.size()) != m_)
            throw std::domain_error("HPoly: block has wrong size");
        HWord w;
        for (std::size_t i = 0; i < block.size(); ++i) {
            if (block[i] < 1 || block[i] > 255 || (i > 0 && block[i] <= block[i - 1]))
                throw std::domain_error("HPoly: block must be strictly increasing and positive");
            w.push_back(static_cast<std::uint8_t>(block[i]));
        }
        return w;
    }

    void add_term(const HWord& w, const LaurentScalar& c) {
        if (w.size() % static_cast<std::size_t>(m_) != 0)
            throw std::domain_error("HPoly: word length not a multiple of block size");
        if (c.is_zero()) return;
        auto [it, fresh] = terms_.try_emplace(w, c);
        if (!fresh) {
            it->second.add_assign(c);
            if (it->second.is_zero()) terms_.erase(it);
        }
    }
    void add_assign(const HPoly& o) {
        require_compatible(o);
        for (const auto& [w, c] : o.terms_) add_term(w, c);
    }
    void sub_assign(const HPoly& o) {
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

    friend HPoly operator+(HPoly a, const HPoly& b) {
        a.add_assign(b);
        return a;
    }
    friend HPoly operator-(HPoly a, const HPoly& b) {
        a.sub_assign(b);
        return a;
    }

    bool operator==(const HPoly& o) const {
        return m_ == o.m_ && mode_ == o.mode_ && terms_ == o.terms_;
    }

    void require_compatible(const HPoly& o) const {
        if (m_ != o.m_ || !(mode_ == o.mode_))
            throw std::domain_error("HPoly: block size or mode mismatch");
    }

private:
    int m_;
    ScalarMode mode_;
    TermMap terms_;
};

/// Free concatenation product.
HPoly coeff_mul(const HPoly& a, const HPoly& b);

/// A partition of an index set into disjoint increasing m-blocks, in block
/// order.
struct BlockPartition {
    std::vector<std::vector<int>> blocks;
    bool operator==(const BlockPartition&) const = default;
};

/// All partitions of sorted S into m-blocks. Canonical: block first elements
/// increase (Pi); otherwise all block orders (Pi').
std::vector<BlockPartition> enumerate_block_partitions(std::span<const int> S, int m,
                                                       bool canonical);

/// l(pi): inversion count of the concatenated block word over ranks in S.
long block_partition_length(const BlockPartition& p, std::span<const int> S);

/// Expansion over blocks containing min(S), exponent sum_{t=2..m}(rank - t).
HPoly hyperpf_recursive(std::span<const int> S, int m, ScalarMode mode = ScalarMode::exact());

/// The Pi (canonical) or Pi' (ordered) block-partition sum.
HPoly hyperpf_matchings(std::span<const int> S, int m, bool canonical,
                        ScalarMode mode = ScalarMode::exact());

/// Substitute b_{i_1..i_m} -> sum_{i=1..n} xi^{m(i-1)+1,...,mi}_{i_1..i_m}
/// (Row) or the transposed minors (Col) into M_q(mn), fully normalized.
///
/// For k = m/2 >= 2 the mode must be Modular(modulus_for(k)); the
/// determinant identity only holds there. allow_exact_override bypasses the
/// check for diagnostics.
/// padded_from > 0 evaluates at the padded point (see quantum_minor).
MatPoly hyper_substitute(const HPoly& p, int m, int n, Orientation variant, ScalarMode mode,
                         bool allow_exact_override = false, int padded_from = 0);

/// LHS - RHS of the block relation on the 2m-subset S (sorted):
/// sum_{pi in Pi(S)} (-q)^{l(pi)} b_I b_J - sum_{pi in Pi(S)} (-q)^{-l(pi)} b_J b_I.
HPoly hyper_relation(std::span<const int> S, int m, ScalarMode mode = ScalarMode::exact());

/// The substituted block relation vanishes for every 2m-subset of [1, mn].
bool hyper_relation_check(int m, int n, Orientation variant);

/// hyper_substitute(hyperpf_recursive({1..mn})) equals quantum_det(mn) in the
/// proper modular mode.
bool hyper_det_check(int m, int n, Orientation variant);

/// The padded m(n+1)-size hyper-Pfaffian equals quantum_det(mn + l) embedded
/// in the padded ring, 1 <= l <= m-1.
bool hyper_padding_check(int m, int n, int l, Orientation variant);

/// Coefficient of x_1 ^ ... ^ x_{mn} in wedge^n of
/// Omega = sum_{blocks} b_{i_1..i_m} x_{i_1} ^ ... ^ x_{i_m}, with free
/// block-algebra coefficients; equals the Pi' sum.
HPoly hyper_two_form_volume(int m, int n);

}  // namespace qpf
