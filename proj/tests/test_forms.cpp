#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "qpf/forms.hpp"

using namespace qpf;

namespace {

const ScalarMode EX = ScalarMode::exact();

Form basis_form(int n, int N, std::initializer_list<int> idx) {
    Form f(N, MatPoly::zero(n, EX));
    f.add_component(ext_bits(std::vector<int>(idx)), MatPoly::unit(n, EX));
    return f;
}

Form random_form(std::mt19937_64& rng, int n, int N) {
    std::uniform_int_distribution<int> ncomp(0, 3), deg(0, 2), coin(0, 1);
    std::uniform_int_distribution<int> gen(1, n), expo(-2, 2);
    Form f(N, MatPoly::zero(n, EX));
    const int k = ncomp(rng);
    for (int i = 0; i < k; ++i) {
        std::uint32_t bits = 0;
        for (int b = 0; b < N; ++b)
            if (coin(rng)) bits |= (1u << b);
        MatWord w;
        for (int d = deg(rng); d > 0; --d) w.push_back(MatGen(gen(rng), gen(rng)));
        MatPoly coeff = normal_form(w, n, EX);
        coeff.scale(LaurentScalar::q_pow(expo(rng)));
        f.add_component(bits, coeff);
    }
    return f;
}

}  // namespace

TEST_CASE("wedge on basis vectors") {
    const int n = 2, N = 2;
    const Form x1 = basis_form(n, N, {1});
    const Form x2 = basis_form(n, N, {2});

    Form x12 = wedge(x1, x2);
    CHECK(x12.components().size() == 1);
    CHECK(x12.component(ext_bits(std::vector<int>{1, 2})) == MatPoly::unit(n, EX));

    // x2 ^ x1 = (-q) x1 ^ x2
    Form x21 = wedge(x2, x1);
    Form expect = x12;
    expect.scale(LaurentScalar::neg_q_pow(1));
    CHECK(x21 == expect);

    CHECK(wedge(x1, x1).is_zero());
}

TEST_CASE("crossing counts") {
    CHECK(wedge_crossings(ext_bits(std::vector<int>{1}), ext_bits(std::vector<int>{2})) == 0);
    CHECK(wedge_crossings(ext_bits(std::vector<int>{2}), ext_bits(std::vector<int>{1})) == 1);
    CHECK(wedge_crossings(ext_bits(std::vector<int>{3, 4}), ext_bits(std::vector<int>{1, 2})) == 4);
    CHECK(wedge_crossings(ext_bits(std::vector<int>{1, 4}), ext_bits(std::vector<int>{2, 3})) == 2);
}

TEST_CASE("wedge associativity on random forms") {
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 40; ++trial) {
        const int n = 3, N = 6;
        const Form f = random_form(rng, n, N);
        const Form g = random_form(rng, n, N);
        const Form h = random_form(rng, n, N);
        CHECK(wedge(wedge(f, g), h) == wedge(f, wedge(g, h)));
    }
}

TEST_CASE("one-forms") {
    // omega_1 over M_q(2): a[1,1] x1 + a[1,2] x2
    const Form w1 = one_form(1, 2, 2, OneFormKind::row());
    CHECK(w1.component(ext_bits(std::vector<int>{1})) == MatPoly::generator(1, 1, 2, EX));
    CHECK(w1.component(ext_bits(std::vector<int>{2})) == MatPoly::generator(1, 2, 2, EX));

    // omega'_1: a[1,1] x1 + a[2,1] x2
    const Form w1c = one_form(1, 2, 2, OneFormKind::col());
    CHECK(w1c.component(ext_bits(std::vector<int>{1})) == MatPoly::generator(1, 1, 2, EX));
    CHECK(w1c.component(ext_bits(std::vector<int>{2})) == MatPoly::generator(2, 1, 2, EX));

    CHECK(one_form(1, 2, 2, OneFormKind::row_lo(0)).is_zero());
    CHECK(one_form(1, 4, 4, OneFormKind::row_lo(2)).components().size() == 2);
    CHECK(one_form(1, 4, 4, OneFormKind::row_hi(2)).components().size() == 2);
    CHECK_THROWS_AS(one_form(3, 2, 2, OneFormKind::row()), std::domain_error);
}

TEST_CASE("the one-forms satisfy the exterior relations") {
    for (int n = 2; n <= 4; ++n) {
        for (int i = 1; i <= n; ++i) {
            const Form wi = one_form(i, n, n, OneFormKind::row());
            CHECK(wedge(wi, wi).is_zero());
            for (int j = i + 1; j <= n; ++j) {
                const Form wj = one_form(j, n, n, OneFormKind::row());
                Form lhs = wedge(wj, wi);
                Form rhs = wedge(wi, wj);
                rhs.scale(LaurentScalar::neg_q_pow(1));
                CHECK(lhs == rhs);
            }
        }
    }
}

TEST_CASE("reordering law for wedges of one-forms") {
    const int n = 3;
    std::vector<Form> omega;
    for (int i = 1; i <= n; ++i) omega.push_back(one_form(i, n, n, OneFormKind::row()));
    Form base = omega[0];
    for (int i = 1; i < n; ++i) base = wedge(base, omega[static_cast<std::size_t>(i)]);
    for_each_permutation(n, [&](const std::vector<int>& pi) {
        Form acc = omega[static_cast<std::size_t>(pi[0] - 1)];
        for (int i = 1; i < n; ++i)
            acc = wedge(acc, omega[static_cast<std::size_t>(pi[static_cast<std::size_t>(i)] - 1)]);
        Form expect = base;
        expect.scale(LaurentScalar::neg_q_pow(inversion_count(pi)));
        CHECK(acc == expect);
    });
}

TEST_CASE("determinant via wedge volume") {
    // n=2 row: matches the two-term determinant
    MatPoly det2 = det_via_wedge(2, Orientation::Row);
    CHECK(det2 == quantum_det(2, Orientation::Row));

    CHECK(det_via_wedge(1, Orientation::Row) == quantum_det(1, Orientation::Row));

    for (int n = 1; n <= 4; ++n)
        for (Orientation o : {Orientation::Row, Orientation::Col})
            CHECK(det_via_wedge(n, o) == quantum_det(n, Orientation::Row));
}

TEST_CASE("truncated forms reproduce the vanishing wedge of the exchange proof") {
    // With n = 2 over M_q(4): omega_1 ^ omega_2 ^ omega'_{1r} ^ omega'_{2r} = 0.
    const int n = 2, N = 4;
    const Form w1 = one_form(1, N, N, OneFormKind::row());
    const Form w2 = one_form(2, N, N, OneFormKind::row());
    for (int r = 0; r < n; ++r) {
        const Form t1 = one_form(1, N, N, OneFormKind::row_hi(r));
        const Form t2 = one_form(2, N, N, OneFormKind::row_hi(r));
        CHECK(wedge(wedge(wedge(w1, w2), t1), t2).is_zero());
        CHECK(wedge(wedge(wedge(t1, t2), w1), w2).is_zero());
    }
}

TEST_CASE("pluecker sum terms at n=2 r=1 match the simplest relation display") {
    const auto terms = pluecker_sum_terms(2, 1);
    REQUIRE(terms.size() == 3);
    CHECK(terms[0].cols_first == std::vector<int>{1, 2});
    CHECK(terms[0].cols_second == std::vector<int>{3, 4});
    CHECK(terms[0].sigma_length == 0);
    CHECK(terms[1].cols_first == std::vector<int>{1, 3});
    CHECK(terms[1].cols_second == std::vector<int>{2, 4});
    CHECK(terms[1].sigma_length == 1);
    CHECK(terms[2].cols_first == std::vector<int>{1, 4});
    CHECK(terms[2].cols_second == std::vector<int>{2, 3});
    CHECK(terms[2].sigma_length == 2);
}

TEST_CASE("pluecker vanishing sums normalize to zero") {
    for (int r : {0, 1})
        for (bool transposed : {false, true})
            for (PlueckerVariant v : {PlueckerVariant::Plus, PlueckerVariant::Minus})
                CHECK(pluecker_vanishing_sum(2, r, {}, v, transposed).is_zero());
    CHECK_THROWS_AS(pluecker_vanishing_sum(2, 2, {}, PlueckerVariant::Plus, false),
                    std::domain_error);
}

TEST_CASE("pluecker vanishing with arbitrary row labels") {
    // the Remark's generalization: any strictly increasing upper tuple
    const std::vector<int> rows{2, 4};
    for (PlueckerVariant v : {PlueckerVariant::Plus, PlueckerVariant::Minus})
        CHECK(pluecker_vanishing_sum(2, 1, rows, v, false).is_zero());
}

TEST_CASE("pluecker exchange identities") {
    CHECK(pluecker_exchange_check(2, 1));
    CHECK(pluecker_exchange_check(2, 0));
}
