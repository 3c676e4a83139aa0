#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qpf/io.hpp"
#include "qpf/verify.hpp"

using namespace qpf;

namespace {

const ScalarMode EX = ScalarMode::exact();

}  // namespace

TEST_CASE("scalar text: ascending exponents, signs, units") {
    LaurentScalar s = LaurentScalar::q_pow(-2);
    s.add_assign(LaurentScalar::integer(3));
    s.sub_assign(LaurentScalar::q_pow(4));
    CHECK(render_text(s) == "q^-2 + 3 - q^4");

    CHECK(render_text(LaurentScalar()) == "0");
    CHECK(render_text(LaurentScalar::one()) == "1");
    CHECK(render_text(LaurentScalar::neg_q_pow(1)) == "-q");
    CHECK(render_text(LaurentScalar::rational(Rational(3, 2)) * LaurentScalar::q_pow(2)) ==
          "3/2·q^2");
}

TEST_CASE("matrix polynomial text matches the documented rendering") {
    CHECK(render_text(quantum_det(2, Orientation::Row)) ==
          "a[1,1]a[2,2] - (q)·a[1,2]a[2,1]");
    CHECK(render_text(MatPoly::zero(2, EX)) == "0");
    CHECK(render_text(MatPoly::unit(2, EX)) == "1");

    // multi-term coefficients stay parenthesized with their signs inside
    MatPoly p(2, EX);
    MatWord w;
    w.push_back(MatGen(1, 2));
    p.add_term(w, LaurentScalar::q_minus_q_inv());
    CHECK(render_text(p) == "(-q^-1 + q)·a[1,2]");
}

TEST_CASE("B and block polynomial text") {
    CHECK(render_text(pf_recursive(iota_range(1, 4))) ==
          "b[1,2]b[3,4] - (q)·b[1,3]b[2,4] + (q^2)·b[1,4]b[2,3]");
    CHECK(render_text(hyperpf_recursive(iota_range(1, 4), 4)) == "b[1,2,3,4]");
}

TEST_CASE("scalar JSON round-trip") {
    LaurentScalar s = LaurentScalar::rational(Rational(-7, 3)) * LaurentScalar::q_pow(-5);
    s.add_assign(LaurentScalar::integer(2));
    const Json j = scalar_to_json(s);
    CHECK(j.at("-5").get<std::string>() == "-7/3");
    CHECK(scalar_from_json(j) == s);
}

TEST_CASE("mode JSON round-trip") {
    CHECK(mode_from_json(mode_to_json(ScalarMode::exact())) == ScalarMode::exact());
    CHECK(mode_from_json(mode_to_json(ScalarMode::modular(8))) == ScalarMode::modular(8));
}

TEST_CASE("matrix polynomial JSON round-trip") {
    for (const MatPoly& p :
         {quantum_det(3, Orientation::Row), MatPoly::zero(2, EX),
          quantum_det(4, Orientation::Row, ScalarMode::modular(8))}) {
        const Json j = matpoly_to_json(p);
        CHECK(matpoly_from_json(j) == p);
    }
    const Json j = matpoly_to_json(quantum_det(2, Orientation::Row));
    CHECK(j.at("n").get<int>() == 2);
    CHECK(j.at("terms").size() == 2);
    CHECK(j.at("terms").at(0).at("word").at(0).at(0).get<int>() == 1);
}

TEST_CASE("form JSON round-trip") {
    const Form f = one_form(1, 3, 3, OneFormKind::row());
    CHECK(form_from_json(form_to_json(f)) == f);
    const Form g = wedge(f, one_form(2, 3, 3, OneFormKind::col()));
    CHECK(form_from_json(form_to_json(g)) == g);
}

TEST_CASE("B and block polynomial JSON round-trips") {
    const BPoly pf = pf_recursive(iota_range(1, 6));
    CHECK(bpoly_from_json(bpoly_to_json(pf)) == pf);

    const HPoly hp = hyperpf_recursive(iota_range(1, 8), 4);
    CHECK(hpoly_from_json(hpoly_to_json(hp)) == hp);
    const Json j = hpoly_to_json(hp);
    CHECK(j.at("terms").at(0).at("word").at(0).size() == 4);
}

TEST_CASE("certificate JSON round-trip") {
    const RelationSet rels = relation_generators(4, 2);
    const auto S = iota_range(1, 4);
    BPoly factored = pf_recursive(S);
    factored.scale(q_factorial_factor(2, 4, EX));
    const MembershipResult res = verify_in_B(pf_matchings(S, false), factored, rels);
    REQUIRE(res.member);
    const Json j = certificate_to_json(res);
    CHECK(j.at("member").get<bool>());
    CHECK(certificate_from_json(j) == res);

    MembershipResult nonmember;
    CHECK(certificate_from_json(certificate_to_json(nonmember)) == nonmember);
}

TEST_CASE("verification report JSON round-trip") {
    SuiteParams params;
    params.n = 2;
    const VerificationReport rep = verify_suite("det", params);
    CHECK(rep.pass());
    const Json j = report_to_json(rep);
    const VerificationReport back = report_from_json(j);
    CHECK(back.suite == rep.suite);
    CHECK(back.pass() == rep.pass());
    REQUIRE(back.checks.size() == rep.checks.size());
    for (std::size_t i = 0; i < rep.checks.size(); ++i) {
        CHECK(back.checks[i].name == rep.checks[i].name);
        CHECK(back.checks[i].pass == rep.checks[i].pass);
    }
}

TEST_CASE("report text shows one line per check") {
    SuiteParams params;
    params.n = 1;
    const VerificationReport rep = verify_suite("det", params);
    const std::string text = report_text(rep);
    CHECK(text.find("[PASS]") != std::string::npos);
    CHECK(text.find("suite det") != std::string::npos);
}
