#pragma once

/// Permutations in one-line notation, inversion counting, and the q-factorial
/// factors Sum_{sigma in S_n} q^{e l(sigma)}.

#include <algorithm>
#include <span>
#include <stdexcept>
#include <vector>

#include "qpf/scalar.hpp"

namespace qpf {

/// Number of pairs (s < t) with seq[s] > seq[t]. Entries must be distinct.
inline long inversion_count(std::span<const int> seq) {
    long inv = 0;
    for (std::size_t s = 0; s < seq.size(); ++s)
        for (std::size_t t = s + 1; t < seq.size(); ++t) {
            if (seq[s] == seq[t])
                throw std::invalid_argument("inversion_count: duplicate entry");
            if (seq[s] > seq[t]) ++inv;
        }
    return inv;
}

inline long inversion_count(const std::vector<int>& seq) {
    return inversion_count(std::span<const int>(seq));
}

/// A bijection on {1..n} in one-line notation.
struct Permutation {
    std::vector<int> images;

    Permutation() = default;
    explicit Permutation(std::vector<int> im) : images(std::move(im)) {
        std::vector<bool> seen(images.size() + 1, false);
        for (int v : images) {
            if (v < 1 || static_cast<std::size_t>(v) > images.size() || seen[v])
                throw std::invalid_argument("Permutation: not a bijection on {1..n}");
            seen[v] = true;
        }
    }

    static Permutation identity(int n) {
        std::vector<int> im(n);
        for (int i = 0; i < n; ++i) im[i] = i + 1;
        return Permutation(std::move(im));
    }

    int size() const { return static_cast<int>(images.size()); }
    int operator()(int i) const { return images[i - 1]; }

    Permutation inverse() const {
        std::vector<int> inv(images.size());
        for (std::size_t i = 0; i < images.size(); ++i)
            inv[static_cast<std::size_t>(images[i]) - 1] = static_cast<int>(i) + 1;
        Permutation p;
        p.images = std::move(inv);
        return p;
    }

    long length() const { return inversion_count(images); }

    bool operator==(const Permutation&) const = default;
};

/// Visit every permutation of {1..n} in lexicographic order.
template <class F>
void for_each_permutation(int n, F&& visit) {
    std::vector<int> im(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) im[static_cast<std::size_t>(i)] = i + 1;
    do {
        visit(im);
    } while (std::next_permutation(im.begin(), im.end()));
}

/// Visit every increasing k-subset of the universe (given sorted).
template <class F>
void for_each_k_subset(std::span<const int> universe, int k, F&& visit) {
    const int n = static_cast<int>(universe.size());
    if (k < 0 || k > n) return;
    std::vector<int> idx(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) idx[i] = i;
    std::vector<int> subset(static_cast<std::size_t>(k));
    while (true) {
        for (int i = 0; i < k; ++i) subset[i] = universe[idx[i]];
        visit(subset);
        int i = k - 1;
        while (i >= 0 && idx[i] == n - k + i) --i;
        if (i < 0) break;
        ++idx[i];
        for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
}

/// Elements of the sorted universe not contained in the sorted subset.
inline std::vector<int> complement_of(std::span<const int> subset, std::span<const int> universe) {
    std::vector<int> out;
    out.reserve(universe.size() - subset.size());
    std::set_difference(universe.begin(), universe.end(), subset.begin(), subset.end(),
                        std::back_inserter(out));
    return out;
}

inline std::vector<int> iota_range(int lo, int hi) {  // inclusive [lo, hi]
    std::vector<int> v;
    for (int i = lo; i <= hi; ++i) v.push_back(i);
    return v;
}

/// Sum_{sigma in S_n} q^{e l(sigma)}, computed by the product formula
/// Prod_{k=1..n} (1 + q^e + ... + q^{e(k-1)}). e must be even, so the
/// (-q)^{e l} weights appearing in the matching sums coincide with q^{e l}.
inline LaurentScalar q_factorial_factor(unsigned n, unsigned e, ScalarMode mode) {
    if (e == 0 || e % 2 != 0)
        throw std::invalid_argument("q_factorial_factor: e must be even and positive");
    LaurentScalar out = LaurentScalar::one();
    for (unsigned k = 1; k <= n; ++k) {
        LaurentScalar factor;
        for (unsigned i = 0; i < k; ++i)
            factor.add_assign(LaurentScalar::q_pow(static_cast<std::int64_t>(e) * i).reduced(mode));
        out = out.mul(factor, mode);
    }
    return out;
}

}  // namespace qpf
