#include "qpf/pfaffian.hpp"

#include <algorithm>

#include "qpf/forms.hpp"
#include "qpf/ideal.hpp"
#include "qpf/parallel.hpp"

namespace qpf {

BPoly coeff_mul(const BPoly& a, const BPoly& b) {
    a.require_compatible(b);
    BPoly out(a.mode());
    for (const auto& [wa, ca] : a.terms())
        for (const auto& [wb, cb] : b.terms()) {
            BWord w = wa;
            w.insert(w.end(), wb.begin(), wb.end());
            out.add_term(w, ca.mul(cb, a.mode()));
        }
    return out;
}

namespace {

void validate_index_set(std::span<const int> S) {
    for (std::size_t i = 0; i < S.size(); ++i) {
        if (S[i] < 1 || (i > 0 && S[i] <= S[i - 1]))
            throw std::domain_error("index set must be strictly increasing and positive");
    }
    if (S.size() % 2 != 0) throw std::domain_error("index set must have even size");
}

void enumerate_canonical(std::vector<int>& pool, std::vector<BGen>& cur,
                         std::vector<Matching>& out) {
    if (pool.empty()) {
        out.push_back(Matching{cur});
        return;
    }
    const int first = pool.front();
    for (std::size_t k = 1; k < pool.size(); ++k) {
        const int partner = pool[k];
        std::vector<int> rest;
        rest.reserve(pool.size() - 2);
        for (std::size_t t = 1; t < pool.size(); ++t)
            if (t != k) rest.push_back(pool[t]);
        cur.emplace_back(first, partner);
        enumerate_canonical(rest, cur, out);
        cur.pop_back();
    }
}

long rank_in(std::span<const int> S, int v) {
    const auto it = std::lower_bound(S.begin(), S.end(), v);
    if (it == S.end() || *it != v) throw std::domain_error("index not in set");
    return static_cast<long>(it - S.begin()) + 1;  // 1-based
}

}  // namespace

std::vector<Matching> enumerate_matchings(std::span<const int> S, bool canonical) {
    validate_index_set(S);
    std::vector<int> pool(S.begin(), S.end());
    std::vector<Matching> canon;
    std::vector<BGen> cur;
    enumerate_canonical(pool, cur, canon);
    if (canonical) return canon;
    std::vector<Matching> out;
    for (const auto& mch : canon) {
        std::vector<std::size_t> order(mch.pairs.size());
        for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
        do {
            Matching perm;
            for (std::size_t i : order) perm.pairs.push_back(mch.pairs[i]);
            out.push_back(std::move(perm));
        } while (std::next_permutation(order.begin(), order.end()));
    }
    return out;
}

long matching_length(const Matching& m, std::span<const int> S) {
    std::vector<int> word;
    for (const BGen& p : m.pairs) {
        word.push_back(static_cast<int>(rank_in(S, p.lo)));
        word.push_back(static_cast<int>(rank_in(S, p.hi)));
    }
    if (word.size() != S.size())
        throw std::domain_error("matching_length: matching does not cover the set");
    return inversion_count(word);
}

BPoly pf_recursive(std::span<const int> S, ScalarMode mode) {
    validate_index_set(S);
    if (S.empty()) return BPoly::unit(mode);
    if (S.size() == 2) return BPoly::generator(BGen(S[0], S[1]), mode);
    BPoly out(mode);
    const int head = S[0];
    for (std::size_t k = 1; k < S.size(); ++k) {
        std::vector<int> rest;
        rest.reserve(S.size() - 2);
        for (std::size_t t = 1; t < S.size(); ++t)
            if (t != k) rest.push_back(S[t]);
        BPoly tail = coeff_mul(BPoly::generator(BGen(head, S[k]), mode), pf_recursive(rest, mode));
        // exponent (rank of the partner) - 2, i.e. j - 2 on {1..2n}
        tail.scale(LaurentScalar::neg_q_pow(static_cast<long>(k) - 1).reduced(mode));
        out.add_assign(tail);
    }
    return out;
}

BPoly pf_matchings(std::span<const int> S, bool canonical, ScalarMode mode) {
    BPoly out(mode);
    for (const Matching& m : enumerate_matchings(S, canonical)) {
        BWord w(m.pairs.begin(), m.pairs.end());
        out.add_term(w, LaurentScalar::neg_q_pow(matching_length(m, S)).reduced(mode));
    }
    return out;
}

namespace {

// sum_{m=1..n} xi^{2m-1,2m}_{i,j} (Row) / xi^{i,j}_{2m-1,2m} (Col).
MatPoly b_image(BGen g, int n, Orientation variant, ScalarMode mode, int padded_from) {
    const int amb = 2 * n;
    MatPoly acc(amb, mode);
    const int pair_cols[2] = {g.lo, g.hi};
    for (int m = 1; m <= n; ++m) {
        const int block[2] = {2 * m - 1, 2 * m};
        acc.add_assign(variant == Orientation::Row
                           ? quantum_minor(block, pair_cols, amb, mode, padded_from)
                           : quantum_minor(pair_cols, block, amb, mode, padded_from));
    }
    return acc;
}

}  // namespace

MatPoly substitute_b(const BPoly& p, int n, Orientation variant, ScalarMode mode,
                     int padded_from) {
    const int amb = 2 * n;
    for (const auto& [w, c] : p.terms())
        for (const BGen& g : w)
            if (g.hi > amb) throw std::domain_error("substitute_b: index exceeds 2n");

    std::map<BGen, MatPoly> images;
    for (const auto& [w, c] : p.terms())
        for (const BGen& g : w)
            if (!images.count(g)) images.emplace(g, b_image(g, n, variant, mode, padded_from));

    std::vector<const std::pair<const BWord, LaurentScalar>*> terms;
    terms.reserve(p.term_count());
    for (const auto& t : p.terms()) terms.push_back(&t);

    return parallel_map_reduce(
        terms.size(), MatPoly::zero(amb, mode),
        [&](std::size_t i) {
            const auto& [w, c] = *terms[i];
            MatPoly prod = MatPoly::unit(amb, mode);
            for (const BGen& g : w) prod = mat_mul(prod, images.at(g));
            prod.scale(c.reduced(mode));
            return prod;
        },
        [](MatPoly& acc, MatPoly part) { acc.add_assign(part); });
}

BPoly b_relation(int i, int j, int k, int l, ScalarMode mode) {
    if (!(i < j && j < k && k < l)) throw std::domain_error("b_relation: require i<j<k<l");
    auto term = [&](int a, int b, int c, int d, long e) {
        BPoly t = coeff_mul(BPoly::generator(BGen(a, b), mode), BPoly::generator(BGen(c, d), mode));
        t.scale(LaurentScalar::neg_q_pow(e).reduced(mode));
        return t;
    };
    BPoly lhs = term(i, j, k, l, 0) + term(i, k, j, l, 1) + term(i, l, j, k, 2);
    BPoly rhs = term(k, l, i, j, 0) + term(j, l, i, k, -1) + term(j, k, i, l, -2);
    return lhs - rhs;
}

bool b_relation_check(int n, Orientation variant, ScalarMode mode) {
    const int amb = 2 * n;
    if (amb < 4) throw std::domain_error("b_relation_check: need 2n >= 4");
    bool ok = true;
    for (int i = 1; i <= amb && ok; ++i)
        for (int j = i + 1; j <= amb && ok; ++j)
            for (int k = j + 1; k <= amb && ok; ++k)
                for (int l = k + 1; l <= amb && ok; ++l)
                    ok = substitute_b(b_relation(i, j, k, l, mode), n, variant, mode).is_zero();
    return ok;
}

bool pf_det_check(int n, Orientation variant) {
    const auto S = iota_range(1, 2 * n);
    const MatPoly sub = substitute_b(pf_recursive(S), n, variant);
    return sub == quantum_det(2 * n, Orientation::Row);
}

bool odd_pf_det_check(int n, Orientation variant) {
    const int real = 2 * n + 1;        // size of the determinant
    const int padded = 2 * n + 2;      // padded matrix size
    const auto S = iota_range(1, padded);
    const MatPoly sub = substitute_b(pf_recursive(S), n + 1, variant, ScalarMode::exact(), real);
    const auto full = iota_range(1, real);
    return sub == quantum_minor(full, full, padded);
}

BPoly pf_two_form_volume(int n) {
    if (n < 1 || n > 8) throw std::domain_error("pf_two_form_volume: need 1 <= n <= 8");
    const int N = 2 * n;
    FormT<BPoly> omega(N, BPoly(ScalarMode::exact()));
    for (int i = 1; i <= N; ++i)
        for (int j = i + 1; j <= N; ++j) {
            const int idx[2] = {i, j};
            omega.add_component(ext_bits(idx), BPoly::generator(BGen(i, j)));
        }
    FormT<BPoly> acc = omega;
    for (int k = 1; k < n; ++k) acc = wedge(acc, omega);
    const std::uint32_t fullbits = (1u << N) - 1u;
    return acc.component(fullbits);
}

bool pfaffian_two_form_check(int n) {
    const auto S = iota_range(1, 2 * n);
    const BPoly volume = pf_two_form_volume(n);
    if (!(volume == pf_matchings(S, /*canonical=*/false))) return false;

    BPoly factored = pf_recursive(S);
    factored.scale(q_factorial_factor(static_cast<unsigned>(n), 4, ScalarMode::exact()));
    const BPoly gap = volume - factored;
    if (gap.is_zero()) return true;

    const RelationSet rels = relation_generators(2 * n, 2);
    const MembershipResult res = membership(to_block_poly(gap), rels);
    return res.member && verify_certificate(to_block_poly(gap), rels, res.cert);
}

}  // namespace qpf
