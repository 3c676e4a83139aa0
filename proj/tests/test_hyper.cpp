#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qpf/hyper.hpp"
#include "qpf/ideal.hpp"
#include "qpf/pfaffian.hpp"

using namespace qpf;

namespace {

const ScalarMode EX = ScalarMode::exact();

std::size_t factorial(int k) {
    std::size_t r = 1;
    for (; k > 1; --k) r *= static_cast<std::size_t>(k);
    return r;
}

}  // namespace

TEST_CASE("modulus for the root-of-unity hypothesis") {
    CHECK(modulus_for(1) == 0);
    CHECK(modulus_for(2) == 8);
    CHECK(modulus_for(3) == 24);
    CHECK(mode_for_block_size(2) == ScalarMode::exact());
    CHECK(mode_for_block_size(4) == ScalarMode::modular(8));
    CHECK_THROWS_AS(mode_for_block_size(3), std::domain_error);
}

TEST_CASE("block partition enumeration counts") {
    const auto S4 = iota_range(1, 4);
    CHECK(enumerate_block_partitions(S4, 4, true).size() == 1);

    const auto S8 = iota_range(1, 8);
    CHECK(enumerate_block_partitions(S8, 4, true).size() == 35);   // C(8,4)/2
    CHECK(enumerate_block_partitions(S8, 4, false).size() == 70);  // 35 * 2!

    // general count: |S|! / ((m!)^p p!)
    CHECK(enumerate_block_partitions(S8, 2, true).size() == 105);
    CHECK(enumerate_block_partitions(S8, 2, false).size() == 105 * factorial(4));

    const auto S6 = iota_range(1, 6);
    CHECK_THROWS_AS(enumerate_block_partitions(S6, 4, true), std::domain_error);
}

TEST_CASE("block partition lengths and the swap law") {
    const auto S8 = iota_range(1, 8);
    CHECK(block_partition_length(BlockPartition{{{1, 2, 3, 4}, {5, 6, 7, 8}}}, S8) == 0);
    CHECK(block_partition_length(BlockPartition{{{5, 6, 7, 8}, {1, 2, 3, 4}}}, S8) == 16);
    CHECK(block_partition_length(BlockPartition{{{1, 2, 3, 5}, {4, 6, 7, 8}}}, S8) == 1);

    // l(u,v) + l(v,u) = m^2 for every 2-block partition
    for (int m : {2, 4}) {
        const auto S = iota_range(1, 2 * m);
        for (const auto& p : enumerate_block_partitions(S, m, true)) {
            const BlockPartition swapped{{p.blocks[1], p.blocks[0]}};
            CHECK(block_partition_length(p, S) + block_partition_length(swapped, S) ==
                  static_cast<long>(m) * m);
        }
    }
}

TEST_CASE("hyper recursion base case and canonical sum") {
    const auto S4 = iota_range(1, 4);
    CHECK(hyperpf_recursive(S4, 4) == HPoly::generator(S4, 4));

    const auto S8 = iota_range(1, 8);
    const HPoly rec = hyperpf_recursive(S8, 4);
    CHECK(rec.term_count() == 35);
    CHECK(rec == hyperpf_matchings(S8, 4, true));
}

TEST_CASE("recursion equals canonical sum on every m-divisible subset of {1..8}") {
    const auto universe = iota_range(1, 8);
    for (int m : {2, 4}) {
        for (int size = m; size <= 8; size += m) {
            if (size > 2 * m) continue;  // |S| in {m, 2m}
            for_each_k_subset(universe, size, [&](const std::vector<int>& S) {
                CHECK(hyperpf_recursive(S, m) == hyperpf_matchings(S, m, true));
            });
        }
    }
}

TEST_CASE("m = 2 degenerates to the pair Pfaffian, termwise") {
    const auto universe = iota_range(1, 6);
    for (int size = 2; size <= 6; size += 2) {
        for_each_k_subset(universe, size, [&](const std::vector<int>& S) {
            CHECK(hyperpf_recursive(S, 2) == to_block_poly(pf_recursive(S)));
            CHECK(hyperpf_matchings(S, 2, true) == to_block_poly(pf_matchings(S, true)));
            CHECK(hyperpf_matchings(S, 2, false) == to_block_poly(pf_matchings(S, false)));
        });
    }
}

TEST_CASE("substitution at m = 2 reduces to the pair substitution") {
    const int blk[] = {1, 2};
    CHECK(hyper_substitute(HPoly::generator(blk, 2), 2, 1, Orientation::Row, EX) ==
          quantum_det(2, Orientation::Row));
    CHECK(hyper_substitute(HPoly(2, EX), 2, 1, Orientation::Row, EX).is_zero());
}

TEST_CASE("mode enforcement for k >= 2") {
    const auto S = iota_range(1, 8);
    const HPoly hp = hyperpf_recursive(S, 4);
    CHECK_THROWS_AS(hyper_substitute(HPoly::generator(iota_range(1, 4), 4), 4, 2,
                                     Orientation::Row, EX),
                    std::domain_error);
    CHECK_THROWS_AS(hyper_substitute(hp, 4, 2, Orientation::Row, ScalarMode::modular(5)),
                    std::domain_error);
    // the override allows an exact-mode run for diagnostics
    const MatPoly img = hyper_substitute(HPoly::generator(iota_range(1, 4), 4), 4, 2,
                                         Orientation::Row, EX, /*allow_exact_override=*/true);
    CHECK(!img.is_zero());
}

TEST_CASE("block image is the sum of two four-row minors mod q^8 = 1") {
    const ScalarMode m8 = ScalarMode::modular(8);
    const auto block = iota_range(1, 4);
    const MatPoly img =
        hyper_substitute(HPoly::generator(block, 4), 4, 2, Orientation::Row, m8);
    MatPoly expect = quantum_minor(iota_range(1, 4), block, 8, m8);
    expect.add_assign(quantum_minor(iota_range(5, 8), block, 8, m8));
    CHECK(img == expect);
}

TEST_CASE("hyper relation at m = 2 specializes to the pair relation") {
    const std::vector<int> S{1, 2, 3, 4};
    CHECK(hyper_relation(S, 2) == to_block_poly(b_relation(1, 2, 3, 4)));
    const std::vector<int> T{1, 3, 4, 6};
    CHECK(hyper_relation(T, 2) == to_block_poly(b_relation(1, 3, 4, 6)));
}

TEST_CASE("m = 2 relation and determinant checks") {
    CHECK(hyper_relation_check(2, 2, Orientation::Row));
    CHECK(hyper_relation_check(2, 2, Orientation::Col));
    CHECK(hyper_det_check(2, 1, Orientation::Row));
    CHECK(hyper_det_check(2, 2, Orientation::Row));
    CHECK(hyper_det_check(2, 2, Orientation::Col));
}

TEST_CASE("padding at m = 2 matches the odd-order corollary") {
    CHECK(hyper_padding_check(2, 1, 1, Orientation::Row));
    CHECK(hyper_padding_check(2, 1, 1, Orientation::Col));
    CHECK_THROWS_AS(hyper_padding_check(2, 1, 2, Orientation::Row), std::domain_error);
}

TEST_CASE("padded blocks reduce to the expected lower-order minors") {
    // m=2, n=1, l=1: padded size 4, real indices 1..3. The block {i, 4} keeps
    // only the summand through the padded diagonal, leaving a[3, i].
    const int real = 3;
    for (int i = 1; i <= real; ++i) {
        const std::vector<int> block{i, 4};
        const MatPoly img = hyper_substitute(HPoly::generator(block, 2), 2, 2, Orientation::Row,
                                             ScalarMode::exact(), false, real);
        CHECK(img == MatPoly::generator(real, i, 4, ScalarMode::exact()));
    }
}

TEST_CASE("free volume coefficient equals the ordered sum") {
    CHECK(hyper_two_form_volume(2, 2) == hyperpf_matchings(iota_range(1, 4), 2, false));
    CHECK(hyper_two_form_volume(4, 2) == hyperpf_matchings(iota_range(1, 8), 4, false));
}

TEST_CASE("expansion-by-first-block lemma in the substituted image at (m,n) = (4,2)") {
    // sum over 4-blocks B of (-q)^{sum(b_t - t)} sub(b_B b_{S\B})
    //   = (1 + q^16) sub([1..8]_4), mod q^8 = 1   (so the factor reduces to 2)
    const int m = 4, n = 2, N = 8;
    const ScalarMode m8 = ScalarMode::modular(8);
    const auto S = iota_range(1, N);
    HPoly lhs_free(m, ScalarMode::exact());
    for_each_k_subset(S, m, [&](const std::vector<int>& block) {
        long e = 0;
        for (std::size_t t = 0; t < block.size(); ++t)
            e += block[t] - (static_cast<long>(t) + 1);
        HPoly term = coeff_mul(HPoly::generator(block, m),
                               hyperpf_recursive(complement_of(block, S), m));
        term.scale(LaurentScalar::neg_q_pow(e));
        lhs_free.add_assign(term);
    });
    const MatPoly lhs = hyper_substitute(lhs_free, m, n, Orientation::Row, m8);
    MatPoly rhs = hyper_substitute(hyperpf_recursive(S, m), m, n, Orientation::Row, m8);
    rhs.scale(q_factorial_factor(2, 16, m8));
    CHECK(lhs == rhs);
}

TEST_CASE("ordered block sum in the substituted image at (m,n) = (4,2)") {
    // sub(Pi' sum) = (sum_{S_2} (-q)^{16 l}) sub([1..8]_4) mod q^8 = 1
    const ScalarMode m8 = ScalarMode::modular(8);
    const auto S = iota_range(1, 8);
    const MatPoly lhs =
        hyper_substitute(hyperpf_matchings(S, 4, false), 4, 2, Orientation::Row, m8);
    MatPoly rhs = hyper_substitute(hyperpf_recursive(S, 4), 4, 2, Orientation::Row, m8);
    rhs.scale(q_factorial_factor(2, 16, m8));
    CHECK(lhs == rhs);
}

TEST_CASE("the hyper volume gap is a certified ideal member at (m,n) = (4,2)") {
    const auto S = iota_range(1, 8);
    HPoly factored = hyperpf_recursive(S, 4);
    factored.scale(q_factorial_factor(2, 16, EX));
    const HPoly gap = hyperpf_matchings(S, 4, false) - factored;
    REQUIRE(!gap.is_zero());
    const RelationSet rels = relation_generators(8, 4);
    REQUIRE(rels.relations.size() == 1);
    const MembershipResult res = membership(gap, rels);
    CHECK(res.member);
    CHECK(verify_certificate(gap, rels, res.cert));
}
