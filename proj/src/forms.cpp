#include "qpf/forms.hpp"

namespace qpf {

Form one_form(int i, int n, int N, OneFormKind kind, ScalarMode mode) {
    if (i < 1 || i > n) throw std::domain_error("one_form: row index out of range");
    if (N < 1 || N > n) throw std::domain_error("one_form: exterior size out of range");
    int lo = 1, hi = N;
    switch (kind.base) {
        case OneFormKind::Base::Row:
        case OneFormKind::Base::Col: break;
        case OneFormKind::Base::RowLo:
            if (kind.r < 0 || kind.r > N) throw std::domain_error("one_form: truncation out of range");
            hi = kind.r;
            break;
        case OneFormKind::Base::RowHi:
            if (kind.r < 0 || kind.r > N) throw std::domain_error("one_form: truncation out of range");
            lo = kind.r + 1;
            break;
    }
    Form f(N, MatPoly::zero(n, mode));
    for (int j = lo; j <= hi; ++j) {
        const MatPoly coeff = (kind.base == OneFormKind::Base::Col)
                                  ? MatPoly::generator(j, i, n, mode)
                                  : MatPoly::generator(i, j, n, mode);
        const int idx[1] = {j};
        f.add_component(ext_bits(idx), coeff);
    }
    return f;
}

MatPoly det_via_wedge(int n, Orientation orient, ScalarMode mode) {
    if (n < 1) throw std::domain_error("det_via_wedge: n must be >= 1");
    const OneFormKind kind =
        (orient == Orientation::Row) ? OneFormKind::row() : OneFormKind::col();
    Form acc = one_form(1, n, n, kind, mode);
    for (int i = 2; i <= n; ++i) acc = wedge(acc, one_form(i, n, n, kind, mode));
    const std::uint32_t full = (n == 32) ? 0xffffffffu : ((1u << n) - 1u);
    return acc.component(full);
}

std::vector<PlueckerTerm> pluecker_sum_terms(int n, int r) {
    if (n < 1) throw std::domain_error("pluecker: n must be >= 1");
    if (r < 0 || r >= n) throw std::domain_error("pluecker: need 0 <= r < n");
    std::vector<PlueckerTerm> terms;
    // i_k = k for k <= r; the free upper indices come from {r+1, ..., 2n}.
    const std::vector<int> pool = iota_range(r + 1, 2 * n);
    for_each_k_subset(pool, n - r, [&](const std::vector<int>& chosen) {
        PlueckerTerm t;
        t.cols_first = iota_range(1, r);
        t.cols_first.insert(t.cols_first.end(), chosen.begin(), chosen.end());
        t.cols_second = complement_of(t.cols_first, iota_range(1, 2 * n));
        std::vector<int> oneline = t.cols_first;
        oneline.insert(oneline.end(), t.cols_second.begin(), t.cols_second.end());
        t.sigma_length = inversion_count(oneline);
        terms.push_back(std::move(t));
    });
    return terms;
}

MatPoly pluecker_vanishing_sum(int n, int r, std::span<const int> rowset,
                               PlueckerVariant variant, bool transposed, ScalarMode mode) {
    const int amb = 2 * n;
    std::vector<int> rows(rowset.begin(), rowset.end());
    if (rows.empty()) rows = iota_range(1, n);
    if (static_cast<int>(rows.size()) != n)
        throw std::domain_error("pluecker_vanishing_sum: rowset must have n labels");
    MatPoly acc(amb, mode);
    for (const auto& t : pluecker_sum_terms(n, r)) {
        auto minor_of = [&](const std::vector<int>& cols) {
            return transposed ? quantum_minor(cols, rows, amb, mode)
                              : quantum_minor(rows, cols, amb, mode);
        };
        MatPoly prod =
            (variant == PlueckerVariant::Plus)
                ? mat_mul(minor_of(t.cols_first), minor_of(t.cols_second))
                : mat_mul(minor_of(t.cols_second), minor_of(t.cols_first));
        const long e = (variant == PlueckerVariant::Plus) ? t.sigma_length : -t.sigma_length;
        prod.scale(LaurentScalar::neg_q_pow(e).reduced(mode));
        acc.add_assign(prod);
    }
    return acc;
}

std::pair<MatPoly, MatPoly> pluecker_exchange_sides(int n, int r, ScalarMode mode) {
    const int amb = 2 * n;
    const std::vector<int> upper_lo = iota_range(1, n);
    const std::vector<int> upper_hi = iota_range(n + 1, 2 * n);
    MatPoly lhs(amb, mode), rhs(amb, mode);
    for (const auto& t : pluecker_sum_terms(n, r)) {
        MatPoly a = mat_mul(quantum_minor(upper_hi, t.cols_first, amb, mode),
                            quantum_minor(upper_lo, t.cols_second, amb, mode));
        a.scale(LaurentScalar::neg_q_pow(t.sigma_length).reduced(mode));
        lhs.add_assign(a);

        MatPoly b = mat_mul(quantum_minor(upper_lo, t.cols_second, amb, mode),
                            quantum_minor(upper_hi, t.cols_first, amb, mode));
        b.scale(LaurentScalar::neg_q_pow(static_cast<long>(n) * n - t.sigma_length).reduced(mode));
        rhs.add_assign(b);
    }
    rhs.scale(LaurentScalar::neg_q_pow(static_cast<long>(n) * n - 2L * n * r).reduced(mode));
    return {std::move(lhs), std::move(rhs)};
}

bool pluecker_exchange_check(int n, int r, ScalarMode mode) {
    auto [lhs, rhs] = pluecker_exchange_sides(n, r, mode);
    return lhs == rhs;
}

}  // namespace qpf
