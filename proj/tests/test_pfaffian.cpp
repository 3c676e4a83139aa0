#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qpf/ideal.hpp"
#include "qpf/parallel.hpp"
#include "qpf/pfaffian.hpp"

using namespace qpf;

namespace {

const ScalarMode EX = ScalarMode::exact();

BWord bword(std::initializer_list<std::pair<int, int>> pairs) {
    BWord w;
    for (auto [i, j] : pairs) w.emplace_back(i, j);
    return w;
}

BPoly bpoly(std::initializer_list<std::pair<BWord, long>> terms) {
    // coefficients given as (-q)^e exponents for brevity
    BPoly p(EX);
    for (const auto& [w, e] : terms) p.add_term(w, LaurentScalar::neg_q_pow(e));
    return p;
}

std::size_t double_factorial(int k) {
    std::size_t r = 1;
    for (; k > 1; k -= 2) r *= static_cast<std::size_t>(k);
    return r;
}
std::size_t factorial(int k) {
    std::size_t r = 1;
    for (; k > 1; --k) r *= static_cast<std::size_t>(k);
    return r;
}

}  // namespace

TEST_CASE("matching enumeration counts") {
    const std::vector<int> S2{1, 2};
    CHECK(enumerate_matchings(S2, true).size() == 1);
    CHECK(enumerate_matchings(S2, true)[0].pairs == std::vector<BGen>{BGen(1, 2)});

    const std::vector<int> S4{1, 2, 3, 4};
    CHECK(enumerate_matchings(S4, true).size() == 3);
    CHECK(enumerate_matchings(S4, false).size() == 6);

    for (int p = 1; p <= 4; ++p) {
        const auto S = iota_range(1, 2 * p);
        CHECK(enumerate_matchings(S, true).size() == double_factorial(2 * p - 1));
        CHECK(enumerate_matchings(S, false).size() ==
              double_factorial(2 * p - 1) * factorial(p));
    }

    const std::vector<int> odd{1, 2, 3};
    CHECK_THROWS_AS(enumerate_matchings(odd, true), std::domain_error);
}

TEST_CASE("matching lengths") {
    const std::vector<int> S{1, 2, 3, 4};
    CHECK(matching_length(Matching{{BGen(1, 2), BGen(3, 4)}}, S) == 0);
    CHECK(matching_length(Matching{{BGen(1, 3), BGen(2, 4)}}, S) == 1);
    CHECK(matching_length(Matching{{BGen(1, 4), BGen(2, 3)}}, S) == 2);
    // rank convention on a sparse set
    const std::vector<int> T{2, 4, 5, 7};
    CHECK(matching_length(Matching{{BGen(2, 5), BGen(4, 7)}}, T) == 1);
    CHECK_THROWS_AS(matching_length(Matching{{BGen(1, 2)}}, S), std::domain_error);
}

TEST_CASE("pf recursion base case and one unfolding") {
    const std::vector<int> S2{1, 2};
    CHECK(pf_recursive(S2) == bpoly({{bword({{1, 2}}), 0}}));

    const std::vector<int> S4{1, 2, 3, 4};
    CHECK(pf_recursive(S4) == bpoly({{bword({{1, 2}, {3, 4}}), 0},
                                     {bword({{1, 3}, {2, 4}}), 1},
                                     {bword({{1, 4}, {2, 3}}), 2}}));

    // rank-based exponents on a non-contiguous set
    const std::vector<int> T{2, 4, 5, 7};
    CHECK(pf_recursive(T) == bpoly({{bword({{2, 4}, {5, 7}}), 0},
                                    {bword({{2, 5}, {4, 7}}), 1},
                                    {bword({{2, 7}, {4, 5}}), 2}}));
}

TEST_CASE("recursion equals the canonical matching sum on every even subset of {1..8}") {
    const auto universe = iota_range(1, 8);
    for (int size = 2; size <= 8; size += 2) {
        for_each_k_subset(universe, size, [&](const std::vector<int>& S) {
            CHECK(pf_recursive(S) == pf_matchings(S, true));
        });
    }
}

TEST_CASE("ordered matching sum") {
    const std::vector<int> S2{1, 2};
    CHECK(pf_matchings(S2, false) == bpoly({{bword({{1, 2}}), 0}}));

    // the six-term Pi' sum over {1,2,3,4}
    const std::vector<int> S4{1, 2, 3, 4};
    CHECK(pf_matchings(S4, false) == bpoly({{bword({{1, 2}, {3, 4}}), 0},
                                            {bword({{3, 4}, {1, 2}}), 4},
                                            {bword({{1, 3}, {2, 4}}), 1},
                                            {bword({{2, 4}, {1, 3}}), 3},
                                            {bword({{1, 4}, {2, 3}}), 2},
                                            {bword({{2, 3}, {1, 4}}), 2}}));
}

TEST_CASE("substitution of b generators") {
    // b12 at n=1, row: the 2x2 determinant
    const BPoly b12 = BPoly::generator(BGen(1, 2));
    CHECK(substitute_b(b12, 1, Orientation::Row) == quantum_det(2, Orientation::Row));
    // column variant normalizes to the same polynomial
    CHECK(substitute_b(b12, 1, Orientation::Col) == quantum_det(2, Orientation::Row));
    // zero maps to zero
    CHECK(substitute_b(BPoly(EX), 1, Orientation::Row).is_zero());
    // out-of-range index
    CHECK_THROWS_AS(substitute_b(BPoly::generator(BGen(1, 3)), 1, Orientation::Row),
                    std::domain_error);
}

TEST_CASE("substituted quadratic relation holds") {
    CHECK(b_relation_check(2, Orientation::Row));
    CHECK(b_relation_check(2, Orientation::Col));
    // all 15 quadruples at 2n = 6
    CHECK(b_relation_check(3, Orientation::Row));
}

TEST_CASE("Pf = det") {
    CHECK(pf_det_check(1, Orientation::Row));
    CHECK(pf_det_check(1, Orientation::Col));
    CHECK(pf_det_check(2, Orientation::Row));
    CHECK(pf_det_check(2, Orientation::Col));
}

TEST_CASE("expansion lemma in the substituted image at 2n = 4") {
    // sum_{i<j} (-q)^{i+j-3} sub(b_ij) sub([complement]) = (1 + q^4) sub(Pf)
    const int n = 2, N = 4;
    MatPoly lhs = MatPoly::zero(N, EX);
    for (int i = 1; i <= N; ++i)
        for (int j = i + 1; j <= N; ++j) {
            std::vector<int> rest;
            for (int t = 1; t <= N; ++t)
                if (t != i && t != j) rest.push_back(t);
            BPoly term = coeff_mul(BPoly::generator(BGen(i, j)), pf_recursive(rest));
            term.scale(LaurentScalar::neg_q_pow(i + j - 3));
            lhs.add_assign(substitute_b(term, n, Orientation::Row));
        }
    MatPoly rhs = substitute_b(pf_recursive(iota_range(1, N)), n, Orientation::Row);
    rhs.scale(q_factorial_factor(2, 4, EX));
    CHECK(lhs == rhs);
}

TEST_CASE("ordered sum in the substituted image at 2n = 4") {
    // sub(Pi' sum) = (sum_{S_2} q^{4l}) det_q(4)
    const int n = 2, N = 4;
    const MatPoly lhs = substitute_b(pf_matchings(iota_range(1, N), false), n, Orientation::Row);
    MatPoly rhs = quantum_det(N, Orientation::Row);
    rhs.scale(q_factorial_factor(2, 4, EX));
    CHECK(lhs == rhs);
}

TEST_CASE("two-form volume coefficient") {
    // n=1: the sole component is b12
    CHECK(pf_two_form_volume(1) == bpoly({{bword({{1, 2}}), 0}}));
    // n=2: equals the six-term Pi' sum
    CHECK(pf_two_form_volume(2) == pf_matchings(iota_range(1, 4), false));

    CHECK(pfaffian_two_form_check(1));
    CHECK(pfaffian_two_form_check(2));
}

TEST_CASE("the two-form gap is a certified ideal member at n = 2") {
    const auto S = iota_range(1, 4);
    BPoly factored = pf_recursive(S);
    factored.scale(q_factorial_factor(2, 4, EX));
    const BPoly gap = pf_matchings(S, false) - factored;
    REQUIRE(!gap.is_zero());
    const RelationSet rels = relation_generators(4, 2);
    const MembershipResult res = membership(to_block_poly(gap), rels);
    CHECK(res.member);
    CHECK(verify_certificate(to_block_poly(gap), rels, res.cert));
}

TEST_CASE("parallel substitution matches sequential exactly") {
    const auto S = iota_range(1, 6);
    const BPoly pf = pf_recursive(S);
    set_default_threads(1);
    const MatPoly seq = substitute_b(pf, 3, Orientation::Row);
    set_default_threads(3);
    const MatPoly par = substitute_b(pf, 3, Orientation::Row);
    set_default_threads(1);
    CHECK(seq == par);
    CHECK(seq == quantum_det(6, Orientation::Row));
}

TEST_CASE("odd-order padding") {
    // padding sanity: b_{i, 2n+2} substitutes to a[2n+1, i]
    const int n = 1;
    const int real = 2 * n + 1, padded = 2 * n + 2;
    for (int i = 1; i <= real; ++i) {
        const MatPoly img =
            substitute_b(BPoly::generator(BGen(i, padded)), n + 1, Orientation::Row, EX, real);
        CHECK(img == MatPoly::generator(real, i, padded, EX));
    }
    CHECK(odd_pf_det_check(1, Orientation::Row));
    CHECK(odd_pf_det_check(1, Orientation::Col));
}
