#include "qpf/matrix.hpp"

#include <algorithm>

namespace qpf {

namespace {

void require_gen_in_range(MatGen g, int n) {
    if (g.row() < 1 || g.row() > n || g.col() < 1 || g.col() > n)
        throw std::domain_error("generator outside ambient size");
}

// Append the letters of `suffix` in reverse push order (they were popped off
// the normal word in descending position, so reversing restores ascending
// generator order).
MatWord emit_word(MatWord w, MatGen g, const MatWord& suffix) {
    w.push_back(g);
    for (std::size_t i = suffix.size(); i-- > 0;) w.push_back(suffix[i]);
    return w;
}

// Core of the insertion rewriter: accumulate coeff * NF(w . g . rev(suffix))
// into out. Precondition: w is normal and every letter of suffix is >= every
// letter that can appear while normalizing w . g (suffix letters were popped
// off the right end of a normal word, and rewriting never increases the
// largest letter of a term).
void fold_gen(MatPoly& out, MatWord w, MatGen g, MatWord suffix, LaurentScalar coeff) {
    const ScalarMode mode = out.mode();
    while (!w.empty() && g < w.back()) {
        const MatGen u = w.back();
        if (u.row() == g.row() || u.col() == g.col()) {
            // a_{il} a_{ik} -> q^{-1} a_{ik} a_{il}   (and the same-column twin)
            coeff.shift_assign(-1, mode);
            w.pop_back();
            suffix.push_back(u);
        } else if (g.col() > u.col()) {
            // u = a_{jk}, g = a_{il}, i<j, k<l: commute outright
            w.pop_back();
            suffix.push_back(u);
        } else {
            // u = a_{jl}, g = a_{ik}, i<j, k<l:
            //   u g = g u - (q - q^{-1}) a_{il} a_{jk}
            const MatGen z1(g.row(), u.col());
            const MatGen z2(u.row(), g.col());
            LaurentScalar split = coeff.mul(LaurentScalar::q_minus_q_inv(), mode);
            split.negate();
            MatPoly tmp(out.n(), mode);
            fold_gen(tmp, w.dropped_back(), z1, MatWord{}, LaurentScalar::one());
            for (const auto& [tw, tc] : tmp.terms())
                fold_gen(out, tw, z2, suffix, split.mul(tc, mode));
            w.pop_back();
            suffix.push_back(u);
        }
    }
    out.add_term(emit_word(std::move(w), g, suffix), coeff);
}

// Normalize an arbitrary word through the insertion path, scaled by coeff.
void fold_word(MatPoly& out, const MatWord& w, const LaurentScalar& coeff) {
    MatPoly acc = MatPoly::unit(out.n(), out.mode());
    for (std::size_t i = 0; i < w.size(); ++i) {
        MatPoly next(out.n(), out.mode());
        for (const auto& [tw, tc] : acc.terms()) fold_gen(next, tw, w[i], MatWord{}, tc);
        acc = std::move(next);
    }
    acc.scale(coeff);
    out.add_assign(acc);
}

}  // namespace

MatPoly mul_by_generator(const MatPoly& p, MatGen g) {
    require_gen_in_range(g, p.n());
    MatPoly out(p.n(), p.mode());
    for (const auto& [w, c] : p.terms()) fold_gen(out, w, g, MatWord{}, c);
    return out;
}

MatPoly normal_form(const MatWord& w, int n, ScalarMode mode) {
    for (std::size_t i = 0; i < w.size(); ++i) require_gen_in_range(w[i], n);
    MatPoly out(n, mode);
    fold_word(out, w, LaurentScalar::one());
    return out;
}

MatPoly normal_form(const MatWord& w, int n, ScalarMode mode, RewriteStrategy strategy) {
    for (std::size_t i = 0; i < w.size(); ++i) require_gen_in_range(w[i], n);
    MatPoly out(n, mode);
    std::vector<std::pair<MatWord, LaurentScalar>> work;
    work.emplace_back(w, LaurentScalar::one());
    while (!work.empty()) {
        auto [cur, coeff] = std::move(work.back());
        work.pop_back();
        // Locate the out-of-order adjacent pair dictated by the strategy.
        std::size_t pos = cur.size();
        if (strategy == RewriteStrategy::Leftmost) {
            for (std::size_t i = 0; i + 1 < cur.size(); ++i)
                if (cur[i] > cur[i + 1]) {
                    pos = i;
                    break;
                }
        } else {
            for (std::size_t i = cur.size(); i-- > 1;)
                if (cur[i - 1] > cur[i]) {
                    pos = i - 1;
                    break;
                }
        }
        if (pos == cur.size()) {
            out.add_term(cur, coeff);
            continue;
        }
        const MatGen u = cur[pos], v = cur[pos + 1];  // u > v
        auto with_pair = [&](MatGen a, MatGen b) {
            MatWord next;
            for (std::size_t i = 0; i < cur.size(); ++i) {
                if (i == pos)
                    next.push_back(a);
                else if (i == pos + 1)
                    next.push_back(b);
                else
                    next.push_back(cur[i]);
            }
            return next;
        };
        if (u.row() == v.row() || u.col() == v.col()) {
            LaurentScalar c = coeff;
            c.shift_assign(-1, mode);
            work.emplace_back(with_pair(v, u), std::move(c));
        } else if (v.col() > u.col()) {
            work.emplace_back(with_pair(v, u), coeff);
        } else {
            work.emplace_back(with_pair(v, u), coeff);
            LaurentScalar c = coeff.mul(LaurentScalar::q_minus_q_inv(), mode);
            c.negate();
            work.emplace_back(with_pair(MatGen(v.row(), u.col()), MatGen(u.row(), v.col())),
                              std::move(c));
        }
    }
    return out;
}

MatPoly mat_mul(const MatPoly& p, const MatPoly& r) {
    p.require_compatible(r);
    MatPoly out(p.n(), p.mode());
    for (const auto& [wr, cr] : r.terms()) {
        MatPoly acc = p;
        for (std::size_t i = 0; i < wr.size(); ++i) acc = mul_by_generator(acc, wr[i]);
        acc.scale(cr);
        out.add_assign(acc);
    }
    return out;
}

MatPoly quantum_det(int n, Orientation orient, ScalarMode mode) {
    if (n < 1) throw std::domain_error("quantum_det: n must be >= 1");
    MatPoly out(n, mode);
    for_each_permutation(n, [&](const std::vector<int>& sigma) {
        const LaurentScalar c = LaurentScalar::neg_q_pow(inversion_count(sigma)).reduced(mode);
        if (orient == Orientation::Row) {
            MatWord w;  // rows ascend, so the word is already normal
            for (int k = 1; k <= n; ++k) w.push_back(MatGen(k, sigma[static_cast<std::size_t>(k - 1)]));
            out.add_term(w, c);
        } else {
            MatWord w;
            for (int k = 1; k <= n; ++k) w.push_back(MatGen(sigma[static_cast<std::size_t>(k - 1)], k));
            fold_word(out, w, c);
        }
    });
    return out;
}

namespace {

void validate_tuple(std::span<const int> t, int n, const char* what) {
    if (t.empty()) throw std::domain_error(std::string(what) + ": empty tuple");
    for (std::size_t i = 0; i < t.size(); ++i) {
        if (t[i] < 1 || t[i] > n) throw std::domain_error(std::string(what) + ": index out of range");
        if (i > 0 && t[i - 1] >= t[i])
            throw std::domain_error(std::string(what) + ": tuple not strictly increasing");
    }
}

enum class PadLetter { Keep, Drop, Kill };

PadLetter classify_padded(int row, int col, int padded_from) {
    if (padded_from <= 0) return PadLetter::Keep;
    const bool pr = row > padded_from, pc = col > padded_from;
    if (!pr && !pc) return PadLetter::Keep;
    if (pr && pc && row == col) return PadLetter::Drop;  // a_{ii} = 1 on the padded diagonal
    return PadLetter::Kill;                              // padded off-diagonal entries vanish
}

}  // namespace

MatPoly quantum_minor(std::span<const int> I, std::span<const int> J, int n, ScalarMode mode,
                      int padded_from) {
    validate_tuple(I, n, "quantum_minor rows");
    validate_tuple(J, n, "quantum_minor cols");
    if (I.size() != J.size()) throw std::domain_error("quantum_minor: |I| != |J|");
    const int r = static_cast<int>(I.size());
    MatPoly out(n, mode);
    for_each_permutation(r, [&](const std::vector<int>& sigma) {
        MatWord w;  // rows strictly increase, so each summand is normal
        for (int k = 0; k < r; ++k) {
            const int row = I[static_cast<std::size_t>(k)];
            const int col = J[static_cast<std::size_t>(sigma[static_cast<std::size_t>(k)] - 1)];
            switch (classify_padded(row, col, padded_from)) {
                case PadLetter::Keep: w.push_back(MatGen(row, col)); break;
                case PadLetter::Drop: break;
                case PadLetter::Kill: return;
            }
        }
        out.add_term(w, LaurentScalar::neg_q_pow(inversion_count(sigma)).reduced(mode));
    });
    return out;
}

MatPoly quantum_minor_row_permuted(std::span<const int> I, std::span<const int> J, int n,
                                   ScalarMode mode) {
    validate_tuple(I, n, "quantum_minor rows");
    validate_tuple(J, n, "quantum_minor cols");
    if (I.size() != J.size()) throw std::domain_error("quantum_minor: |I| != |J|");
    const int r = static_cast<int>(I.size());
    MatPoly out(n, mode);
    for_each_permutation(r, [&](const std::vector<int>& sigma) {
        MatWord w;
        for (int k = 0; k < r; ++k)
            w.push_back(MatGen(I[static_cast<std::size_t>(sigma[static_cast<std::size_t>(k)] - 1)],
                               J[static_cast<std::size_t>(k)]));
        fold_word(out, w, LaurentScalar::neg_q_pow(inversion_count(sigma)).reduced(mode));
    });
    return out;
}

MatPoly cofactor(int i, int j, int n, ScalarMode mode) {
    if (n < 2) throw std::domain_error("cofactor: n must be >= 2");
    if (i < 1 || i > n || j < 1 || j > n) throw std::domain_error("cofactor: index out of range");
    std::vector<int> rows, cols;
    for (int k = 1; k <= n; ++k) {
        if (k != i) rows.push_back(k);
        if (k != j) cols.push_back(k);
    }
    return quantum_minor(rows, cols, n, mode);
}

MatPoly laplace_expansion(int n, std::span<const int> I, Orientation side, ScalarMode mode) {
    validate_tuple(I, n, "laplace_expansion I");
    if (static_cast<int>(I.size()) >= n)
        throw std::domain_error("laplace_expansion: I must be a proper subset");
    const int r = static_cast<int>(I.size());
    const auto universe = iota_range(1, n);
    const std::vector<int> Ic = complement_of(I, universe);
    long sumI = 0;
    for (int v : I) sumI += v;
    MatPoly acc(n, mode);
    for_each_k_subset(universe, r, [&](const std::vector<int>& J) {
        const std::vector<int> Jc = complement_of(J, universe);
        long sumJ = 0;
        for (int v : J) sumJ += v;
        MatPoly prod = (side == Orientation::Row)
                           ? mat_mul(quantum_minor(I, J, n, mode), quantum_minor(Ic, Jc, n, mode))
                           : mat_mul(quantum_minor(J, I, n, mode), quantum_minor(Jc, Ic, n, mode));
        prod.scale(LaurentScalar::neg_q_pow(sumJ - sumI).reduced(mode));
        acc.add_assign(prod);
    });
    return acc;
}

bool laplace_check(int n, std::span<const int> I, Orientation side, ScalarMode mode) {
    return laplace_expansion(n, I, side, mode) == quantum_det(n, Orientation::Row, mode);
}

MatPoly orthogonality_sum(int n, int i, int k, Orientation side, ScalarMode mode) {
    if (i < 1 || i > n || k < 1 || k > n)
        throw std::domain_error("orthogonality_sum: index out of range");
    MatPoly acc(n, mode);
    for (int j = 1; j <= n; ++j) {
        MatPoly term = (side == Orientation::Row)
                           ? mat_mul(MatPoly::generator(i, j, n, mode), cofactor(k, j, n, mode))
                           : mat_mul(MatPoly::generator(j, i, n, mode), cofactor(j, k, n, mode));
        term.scale(LaurentScalar::neg_q_pow(j - i).reduced(mode));
        acc.add_assign(term);
    }
    return acc;
}

bool orthogonality_check(int n, int i, int k, Orientation side, ScalarMode mode) {
    const MatPoly sum = orthogonality_sum(n, i, k, side, mode);
    if (i == k) return sum == quantum_det(n, Orientation::Row, mode);
    return sum.is_zero();
}

MatPoly generalized_expansion_sum(int n, std::span<const int> seq, Orientation side,
                                  ScalarMode mode) {
    if (static_cast<int>(seq.size()) != n)
        throw std::domain_error("generalized_expansion: sequence length must equal n");
    for (int v : seq)
        if (v < 1 || v > n) throw std::domain_error("generalized_expansion: label out of range");
    MatPoly acc(n, mode);
    for_each_permutation(n, [&](const std::vector<int>& sigma) {
        MatWord w;
        for (int k = 0; k < n; ++k) {
            const int a = seq[static_cast<std::size_t>(k)];
            const int b = sigma[static_cast<std::size_t>(k)];
            w.push_back(side == Orientation::Row ? MatGen(a, b) : MatGen(b, a));
        }
        fold_word(acc, w, LaurentScalar::neg_q_pow(inversion_count(sigma)).reduced(mode));
    });
    return acc;
}

bool generalized_expansion_check(int n, std::span<const int> seq, Orientation side,
                                 ScalarMode mode) {
    const MatPoly sum = generalized_expansion_sum(n, seq, side, mode);
    std::vector<int> s(seq.begin(), seq.end());
    std::sort(s.begin(), s.end());
    const bool repeats = std::adjacent_find(s.begin(), s.end()) != s.end();
    if (repeats) return sum.is_zero();
    MatPoly expected = quantum_det(n, Orientation::Row, mode);
    expected.scale(
        LaurentScalar::neg_q_pow(inversion_count(std::vector<int>(seq.begin(), seq.end())))
            .reduced(mode));
    return sum == expected;
}

}  // namespace qpf
