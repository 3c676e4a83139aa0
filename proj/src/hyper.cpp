#include "qpf/hyper.hpp"

#include <algorithm>

#include "qpf/forms.hpp"
#include "qpf/parallel.hpp"

namespace qpf {

HPoly coeff_mul(const HPoly& a, const HPoly& b) {
    a.require_compatible(b);
    HPoly out(a.m(), a.mode());
    for (const auto& [wa, ca] : a.terms())
        for (const auto& [wb, cb] : b.terms()) {
            HWord w = wa;
            w.insert(w.end(), wb.begin(), wb.end());
            out.add_term(w, ca.mul(cb, a.mode()));
        }
    return out;
}

namespace {

void validate_block_set(std::span<const int> S, int m) {
    if (m < 2) throw std::domain_error("block size must be >= 2");
    for (std::size_t i = 0; i < S.size(); ++i)
        if (S[i] < 1 || (i > 0 && S[i] <= S[i - 1]))
            throw std::domain_error("index set must be strictly increasing and positive");
    if (S.size() % static_cast<std::size_t>(m) != 0)
        throw std::domain_error("index set size must be divisible by the block size");
}

void enumerate_blocks(std::vector<int>& pool, int m, std::vector<std::vector<int>>& cur,
                      std::vector<BlockPartition>& out) {
    if (pool.empty()) {
        out.push_back(BlockPartition{cur});
        return;
    }
    // The block containing the least remaining element, to generate Pi once each.
    const int first = pool.front();
    std::vector<int> rest_pool(pool.begin() + 1, pool.end());
    for_each_k_subset(rest_pool, m - 1, [&](const std::vector<int>& tail) {
        std::vector<int> block{first};
        block.insert(block.end(), tail.begin(), tail.end());
        std::vector<int> rest = complement_of(tail, rest_pool);
        cur.push_back(block);
        enumerate_blocks(rest, m, cur, out);
        cur.pop_back();
    });
}

long rank_in(std::span<const int> S, int v) {
    const auto it = std::lower_bound(S.begin(), S.end(), v);
    if (it == S.end() || *it != v) throw std::domain_error("index not in set");
    return static_cast<long>(it - S.begin()) + 1;
}

}  // namespace

std::vector<BlockPartition> enumerate_block_partitions(std::span<const int> S, int m,
                                                       bool canonical) {
    validate_block_set(S, m);
    std::vector<int> pool(S.begin(), S.end());
    std::vector<std::vector<int>> cur;
    std::vector<BlockPartition> canon;
    enumerate_blocks(pool, m, cur, canon);
    if (canonical) return canon;
    std::vector<BlockPartition> out;
    for (const auto& part : canon) {
        std::vector<std::size_t> order(part.blocks.size());
        for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
        do {
            BlockPartition perm;
            for (std::size_t i : order) perm.blocks.push_back(part.blocks[i]);
            out.push_back(std::move(perm));
        } while (std::next_permutation(order.begin(), order.end()));
    }
    return out;
}

long block_partition_length(const BlockPartition& p, std::span<const int> S) {
    std::vector<int> word;
    for (const auto& block : p.blocks)
        for (int v : block) word.push_back(static_cast<int>(rank_in(S, v)));
    if (word.size() != S.size())
        throw std::domain_error("block_partition_length: partition does not cover the set");
    return inversion_count(word);
}

HPoly hyperpf_recursive(std::span<const int> S, int m, ScalarMode mode) {
    validate_block_set(S, m);
    if (S.empty()) return HPoly::unit(m, mode);
    if (static_cast<int>(S.size()) == m) return HPoly::generator(S, m, mode);
    HPoly out(m, mode);
    const int head = S[0];
    std::vector<int> rest_pool(S.begin() + 1, S.end());
    for_each_k_subset(rest_pool, m - 1, [&](const std::vector<int>& tail) {
        std::vector<int> block{head};
        block.insert(block.end(), tail.begin(), tail.end());
        long e = 0;  // sum_{t=2..m} (rank_S(i_t) - t)
        for (std::size_t t = 0; t < tail.size(); ++t)
            e += rank_in(S, tail[t]) - (static_cast<long>(t) + 2);
        std::vector<int> rest = complement_of(tail, rest_pool);
        HPoly term = coeff_mul(HPoly::generator(block, m, mode), hyperpf_recursive(rest, m, mode));
        term.scale(LaurentScalar::neg_q_pow(e).reduced(mode));
        out.add_assign(term);
    });
    return out;
}

HPoly hyperpf_matchings(std::span<const int> S, int m, bool canonical, ScalarMode mode) {
    HPoly out(m, mode);
    for (const BlockPartition& p : enumerate_block_partitions(S, m, canonical)) {
        HWord w;
        for (const auto& block : p.blocks)
            for (int v : block) w.push_back(static_cast<std::uint8_t>(v));
        out.add_term(w, LaurentScalar::neg_q_pow(block_partition_length(p, S)).reduced(mode));
    }
    return out;
}

namespace {

// sum_{i=1..n} xi^{m(i-1)+1..mi}_{block} (Row) / transposed minors (Col).
MatPoly block_image(std::span<const int> block, int m, int n, Orientation variant,
                    ScalarMode mode, int padded_from) {
    const int amb = m * n;
    MatPoly acc(amb, mode);
    for (int i = 1; i <= n; ++i) {
        const std::vector<int> rows = iota_range(m * (i - 1) + 1, m * i);
        acc.add_assign(variant == Orientation::Row
                           ? quantum_minor(rows, block, amb, mode, padded_from)
                           : quantum_minor(block, rows, amb, mode, padded_from));
    }
    return acc;
}

void enforce_modular_regime(int m, ScalarMode mode, bool allow_exact_override) {
    const ScalarMode want = mode_for_block_size(m);
    if (want.is_exact() || allow_exact_override) return;
    if (!(mode == want))
        throw std::domain_error("hyper_substitute: k >= 2 requires Modular(4k(k-1)) mode");
}

}  // namespace

MatPoly hyper_substitute(const HPoly& p, int m, int n, Orientation variant, ScalarMode mode,
                         bool allow_exact_override, int padded_from) {
    if (p.m() != m) throw std::domain_error("hyper_substitute: block size mismatch");
    enforce_modular_regime(m, mode, allow_exact_override);
    const int amb = m * n;
    for (const auto& [w, c] : p.terms())
        for (std::uint8_t v : w)
            if (v > amb) throw std::domain_error("hyper_substitute: index exceeds mn");

    std::map<HWord, MatPoly> images;
    for (const auto& [w, c] : p.terms())
        for (std::size_t b = 0; b + m <= w.size(); b += static_cast<std::size_t>(m)) {
            HWord key(w.begin() + static_cast<long>(b), w.begin() + static_cast<long>(b) + m);
            if (!images.count(key)) {
                std::vector<int> block(key.begin(), key.end());
                images.emplace(key, block_image(block, m, n, variant, mode, padded_from));
            }
        }

    std::vector<const std::pair<const HWord, LaurentScalar>*> terms;
    terms.reserve(p.term_count());
    for (const auto& t : p.terms()) terms.push_back(&t);

    return parallel_map_reduce(
        terms.size(), MatPoly::zero(amb, mode),
        [&](std::size_t i) {
            const auto& [w, c] = *terms[i];
            MatPoly prod = MatPoly::unit(amb, mode);
            for (std::size_t b = 0; b + m <= w.size(); b += static_cast<std::size_t>(m)) {
                HWord key(w.begin() + static_cast<long>(b), w.begin() + static_cast<long>(b) + m);
                prod = mat_mul(prod, images.at(key));
            }
            prod.scale(c.reduced(mode));
            return prod;
        },
        [](MatPoly& acc, MatPoly part) { acc.add_assign(part); });
}

HPoly hyper_relation(std::span<const int> S, int m, ScalarMode mode) {
    validate_block_set(S, m);
    if (static_cast<int>(S.size()) != 2 * m)
        throw std::domain_error("hyper_relation: |S| must equal 2m");
    HPoly out(m, mode);
    for (const BlockPartition& p : enumerate_block_partitions(S, m, /*canonical=*/true)) {
        const long l = block_partition_length(p, S);
        HWord fwd, rev;
        for (int v : p.blocks[0]) fwd.push_back(static_cast<std::uint8_t>(v));
        for (int v : p.blocks[1]) fwd.push_back(static_cast<std::uint8_t>(v));
        for (int v : p.blocks[1]) rev.push_back(static_cast<std::uint8_t>(v));
        for (int v : p.blocks[0]) rev.push_back(static_cast<std::uint8_t>(v));
        out.add_term(fwd, LaurentScalar::neg_q_pow(l).reduced(mode));
        LaurentScalar neg = LaurentScalar::neg_q_pow(-l).reduced(mode);
        neg.negate();
        out.add_term(rev, neg);
    }
    return out;
}

bool hyper_relation_check(int m, int n, Orientation variant) {
    const int amb = m * n;
    if (amb < 2 * m) throw std::domain_error("hyper_relation_check: need mn >= 2m");
    const ScalarMode mode = mode_for_block_size(m);
    bool ok = true;
    for_each_k_subset(iota_range(1, amb), 2 * m, [&](const std::vector<int>& S) {
        if (!ok) return;
        ok = hyper_substitute(hyper_relation(S, m), m, n, variant, mode).is_zero();
    });
    return ok;
}

bool hyper_det_check(int m, int n, Orientation variant) {
    const ScalarMode mode = mode_for_block_size(m);
    const auto S = iota_range(1, m * n);
    const MatPoly sub = hyper_substitute(hyperpf_recursive(S, m), m, n, variant, mode);
    return sub == quantum_det(m * n, Orientation::Row, mode);
}

HPoly hyper_two_form_volume(int m, int n) {
    if (n < 1) throw std::domain_error("hyper_two_form_volume: n must be >= 1");
    const int N = m * n;
    if (N > 32) throw std::domain_error("hyper_two_form_volume: mn too large");
    FormT<HPoly> omega(N, HPoly(m, ScalarMode::exact()));
    for_each_k_subset(iota_range(1, N), m, [&](const std::vector<int>& block) {
        omega.add_component(ext_bits(block), HPoly::generator(block, m));
    });
    FormT<HPoly> acc = omega;
    for (int k = 1; k < n; ++k) acc = wedge(acc, omega);
    const std::uint32_t fullbits = (N == 32) ? 0xffffffffu : ((1u << N) - 1u);
    return acc.component(fullbits);
}

bool hyper_padding_check(int m, int n, int l, Orientation variant) {
    if (l < 1 || l >= m) throw std::domain_error("hyper_padding_check: need 1 <= l <= m-1");
    const ScalarMode mode = mode_for_block_size(m);
    const int real = m * n + l;
    const int padded = m * (n + 1);
    const auto S = iota_range(1, padded);
    const MatPoly sub =
        hyper_substitute(hyperpf_recursive(S, m), m, n + 1, variant, mode, false, real);
    const auto full = iota_range(1, real);
    return sub == quantum_minor(full, full, padded, mode);
}

}  // namespace qpf
