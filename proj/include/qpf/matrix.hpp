#pragma once

/// The quantum coordinate ring M_q(n): words in the generators a_{ij},
/// normal-form rewriting, quantum determinants, quantum minors, Laplace
/// expansions, cofactors and the orthogonality / generalized-expansion checks.
///
/// A word is NORMAL iff its generators are nondecreasing in (row, col)
/// lexicographic order. The four defining relations, oriented so the
/// lex-larger generator moves right, strictly decrease the (degree, lex)
/// order of every produced term, so rewriting terminates; the relations are
/// a PBW system, so the normal form is independent of rewrite order (this is
/// also spot-checked exhaustively in the tests).

#include <array>
#include <compare>
#include <cstdint>
#include <map>
#include <span>
#include <stdexcept>
#include <vector>

#include "qpf/perm.hpp"
#include "qpf/scalar.hpp"

namespace qpf {

/// One generator a_{row,col}, packed so that integer order == (row, col) lex.
class MatGen {
public:
    MatGen() : v_(0) {}
    MatGen(int row, int col) {
        if (row < 1 || row > 255 || col < 1 || col > 255)
            throw std::domain_error("MatGen: index out of range");
        v_ = static_cast<std::uint16_t>((row << 8) | col);
    }

    int row() const { return v_ >> 8; }
    int col() const { return v_ & 0xff; }
    std::uint16_t packed() const { return v_; }

    auto operator<=>(const MatGen&) const = default;

private:
    std::uint16_t v_;
};

/// A word in the a_{ij}, stored inline. Capacity covers every desk-scale
/// object the engine produces (degree <= matrix size <= 8, plus padding).
class MatWord {
public:
    static constexpr std::size_t kCapacity = 16;

    MatWord() = default;

    std::size_t size() const { return len_; }
    bool empty() const { return len_ == 0; }
    MatGen operator[](std::size_t i) const { return g_[i]; }
    MatGen back() const { return g_[len_ - 1]; }

    void push_back(MatGen g) {
        if (len_ == kCapacity) throw std::length_error("MatWord: capacity exceeded");
        g_[len_++] = g;
    }
    void pop_back() { --len_; }

    MatWord dropped_back() const {
        MatWord w(*this);
        --w.len_;
        return w;
    }

    bool is_normal() const {
        for (std::size_t i = 1; i < len_; ++i)
            if (g_[i - 1] > g_[i]) return false;
        return true;
    }

    /// Degree-first, then lexicographic on the generator sequence.
    std::strong_ordering operator<=>(const MatWord& o) const {
        if (len_ != o.len_) return len_ <=> o.len_;
        for (std::size_t i = 0; i < len_; ++i)
            if (g_[i] != o.g_[i]) return g_[i] <=> o.g_[i];
        return std::strong_ordering::equal;
    }
    bool operator==(const MatWord& o) const {
        return (*this <=> o) == std::strong_ordering::equal;
    }

private:
    std::array<MatGen, kCapacity> g_{};
    std::uint8_t len_ = 0;
};

enum class Orientation { Row, Col };

/// A finite scalar-weighted sum of normal words in M_q(n).
class MatPoly {
public:
    using TermMap = std::map<MatWord, LaurentScalar>;

    MatPoly() : n_(1), mode_(ScalarMode::exact()) {}
    MatPoly(int n, ScalarMode mode) : n_(n), mode_(mode) {
        if (n < 1) throw std::domain_error("MatPoly: ambient size must be >= 1");
    }

    static MatPoly zero(int n, ScalarMode mode) { return MatPoly(n, mode); }
    static MatPoly unit(int n, ScalarMode mode) {
        MatPoly p(n, mode);
        p.add_term(MatWord{}, LaurentScalar::one());
        return p;
    }
    static MatPoly generator(int row, int col, int n, ScalarMode mode) {
        MatPoly p(n, mode);
        if (row < 1 || row > n || col < 1 || col > n)
            throw std::domain_error("generator out of range");
        MatWord w;
        w.push_back(MatGen(row, col));
        p.add_term(w, LaurentScalar::one());
        return p;
    }

    int n() const { return n_; }
    ScalarMode mode() const { return mode_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }
    const TermMap& terms() const { return terms_; }

    /// Merge one (normal) word into the accumulator.
    void add_term(const MatWord& w, const LaurentScalar& c) {
        if (c.is_zero()) return;
        auto [it, fresh] = terms_.try_emplace(w, c);
        if (!fresh) {
            it->second.add_assign(c);
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    void add_assign(const MatPoly& o) {
        require_compatible(o);
        for (const auto& [w, c] : o.terms_) add_term(w, c);
    }
    void sub_assign(const MatPoly& o) {
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

    friend MatPoly operator+(MatPoly a, const MatPoly& b) {
        a.add_assign(b);
        return a;
    }
    friend MatPoly operator-(MatPoly a, const MatPoly& b) {
        a.sub_assign(b);
        return a;
    }

    bool operator==(const MatPoly& o) const {
        return n_ == o.n_ && mode_ == o.mode_ && terms_ == o.terms_;
    }

    void require_compatible(const MatPoly& o) const {
        if (n_ != o.n_ || !(mode_ == o.mode_))
            throw std::domain_error("MatPoly: ambient size or mode mismatch");
    }

private:
    int n_;
    ScalarMode mode_;
    TermMap terms_;
};

enum class RewriteStrategy { Leftmost, Rightmost };

/// Normal form of a word, insertion-based (the production path).
MatPoly normal_form(const MatWord& w, int n, ScalarMode mode);

/// Normal form via the generic worklist rewriter with an explicit strategy;
/// reference implementation used by the confluence spot-checks.
MatPoly normal_form(const MatWord& w, int n, ScalarMode mode, RewriteStrategy strategy);

/// p * a_{g}, fully re-normalized.
MatPoly mul_by_generator(const MatPoly& p, MatGen g);

/// Product of representatives, fully re-normalized. Associative.
MatPoly mat_mul(const MatPoly& p, const MatPoly& r);

/// Sum over S_n with weight (-q)^{l(sigma)}; row and column orientations
/// normalize to the same polynomial.
MatPoly quantum_det(int n, Orientation orient, ScalarMode mode = ScalarMode::exact());

/// Quantum r-minor xi^I_J. Rows I and columns J strictly increasing.
///
/// With padded_from > 0 the generators are evaluated at the padded point:
/// a_{rc} = 0 whenever exactly one of r, c exceeds padded_from or both do
/// with r != c, and a_{rc} = 1 (the letter drops) when r == c > padded_from.
MatPoly quantum_minor(std::span<const int> I, std::span<const int> J, int n,
                      ScalarMode mode = ScalarMode::exact(), int padded_from = 0);

/// Row-permuted variant of the minor: sum over sigma of
/// (-q)^{l(sigma)} a_{i_sigma(1), j_1} ... a_{i_sigma(r), j_r}.
MatPoly quantum_minor_row_permuted(std::span<const int> I, std::span<const int> J, int n,
                                   ScalarMode mode = ScalarMode::exact());

/// Cofactor Delta_q(i, j): minor over the complements of row i and column j.
MatPoly cofactor(int i, int j, int n, ScalarMode mode = ScalarMode::exact());

/// The Laplace sum over complementary column (side Row) or row (side Col)
/// tuples, weighted by (-q)^{sum(J) - sum(I)}.
MatPoly laplace_expansion(int n, std::span<const int> I, Orientation side,
                          ScalarMode mode = ScalarMode::exact());

/// Laplace expansion along the row tuple I (side Row) or column tuple I
/// (side Col) equals det_q exactly.
bool laplace_check(int n, std::span<const int> I, Orientation side,
                   ScalarMode mode = ScalarMode::exact());

/// sum_j (-q)^{j-i} a_{ij} Delta_q(kj) (row side) or the column-side mirror
/// sum_j (-q)^{j-i} a_{ji} Delta_q(jk).
MatPoly orthogonality_sum(int n, int i, int k, Orientation side,
                          ScalarMode mode = ScalarMode::exact());

/// sum_j (-q)^{j-i} a_{ij} Delta_q(kj) = delta_{ik} det_q (row side) and the
/// column-side mirror.
bool orthogonality_check(int n, int i, int k, Orientation side,
                         ScalarMode mode = ScalarMode::exact());

/// sum over S_n of (-q)^{l(sigma)} a_{seq_1,sigma(1)} ... a_{seq_n,sigma(n)}
/// (side Row), or with the index roles swapped (side Col).
MatPoly generalized_expansion_sum(int n, std::span<const int> seq, Orientation side,
                                  ScalarMode mode = ScalarMode::exact());

/// The generalized row/column expansion: 0 on repeated labels, otherwise
/// (-q)^{l(pi)} det_q.
bool generalized_expansion_check(int n, std::span<const int> seq, Orientation side,
                                 ScalarMode mode = ScalarMode::exact());

}  // namespace qpf
