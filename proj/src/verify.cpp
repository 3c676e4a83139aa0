#include "qpf/verify.hpp"

#include <chrono>
#include <functional>
#include <sstream>

#include "qpf/forms.hpp"
#include "qpf/hyper.hpp"
#include "qpf/ideal.hpp"
#include "qpf/pfaffian.hpp"
#include "qpf/perm.hpp"

namespace qpf {

namespace {

constexpr std::size_t kDetailLimit = 240;

std::string truncated(std::string s) {
    if (s.size() > kDetailLimit) {
        s.resize(kDetailLimit);
        s += " …";
    }
    return s;
}

// Flip the sign of the first term's coefficient; used by --perturb.
template <class Poly>
Poly flip_first(Poly p) {
    if (p.is_zero()) return p;
    const auto& [w, c] = *p.terms().begin();
    LaurentScalar twice = c;
    twice.add_assign(c);
    twice.negate();
    auto word = w;
    p.add_term(word, twice);
    return p;
}

struct Runner {
    VerificationReport& rep;
    bool perturb;

    template <class Fn>
    void check(const std::string& name, Fn&& fn) {
        const auto t0 = std::chrono::steady_clock::now();
        CheckResult r;
        r.name = name;
        try {
            std::string detail;
            r.pass = fn(detail);
            r.detail = r.pass ? "" : truncated(detail);
        } catch (const std::exception& e) {
            r.pass = false;
            r.detail = std::string("exception: ") + e.what();
        }
        const auto t1 = std::chrono::steady_clock::now();
        r.elapsed_ms = std::chrono::duration<double, std::milli>(t1 - t0).count();
        rep.checks.push_back(std::move(r));
    }

    // lhs must equal rhs; reports the difference on failure.
    template <class Poly>
    void check_eq(const std::string& name, std::function<Poly()> lhs_fn,
                  std::function<Poly()> rhs_fn) {
        check(name, [&](std::string& detail) {
            Poly lhs = lhs_fn();
            if (perturb) lhs = flip_first(std::move(lhs));
            const Poly rhs = rhs_fn();
            if (lhs == rhs) return true;
            Poly diff = lhs;
            diff.sub_assign(rhs);
            detail = "difference: " + render_text(diff);
            return false;
        });
    }
};

std::vector<Orientation> variants_of(const SuiteParams& p) {
    if (p.variant) return {*p.variant};
    return {Orientation::Row, Orientation::Col};
}

const char* vname(Orientation o) { return o == Orientation::Row ? "row" : "col"; }

void require_cap(bool ok, const std::string& msg) {
    if (!ok) throw std::domain_error(msg);
}

VerificationReport suite_det(const SuiteParams& p) {
    require_cap(p.n >= 1 && p.n <= 6, "det suite cap: 1 <= n <= 6");
    VerificationReport rep;
    rep.suite = "det";
    Runner run{rep, p.perturb};
    for (int k = 1; k <= p.n; ++k) {
        run.check_eq<MatPoly>(
            "det row = det col, n=" + std::to_string(k),
            [k] { return quantum_det(k, Orientation::Row); },
            [k] { return quantum_det(k, Orientation::Col); });
        for (Orientation o : {Orientation::Row, Orientation::Col})
            run.check_eq<MatPoly>(
                std::string("det = wedge volume, ") + vname(o) + ", n=" + std::to_string(k),
                [k, o] { return det_via_wedge(k, o); },
                [k] { return quantum_det(k, Orientation::Row); });
    }
    return rep;
}

VerificationReport suite_laplace(const SuiteParams& p) {
    require_cap(p.n >= 2 && p.n <= 5, "laplace suite cap: 2 <= n <= 5");
    VerificationReport rep;
    rep.suite = "laplace";
    Runner run{rep, p.perturb};
    const int n = p.n;
    const auto universe = iota_range(1, n);
    for (Orientation side : variants_of(p)) {
        for (int r = 1; r < n; ++r) {
            for_each_k_subset(universe, r, [&](const std::vector<int>& I) {
                std::ostringstream name;
                name << "laplace " << vname(side) << " n=" << n << " I={";
                for (std::size_t i = 0; i < I.size(); ++i) name << (i ? "," : "") << I[i];
                name << "}";
                run.check_eq<MatPoly>(
                    name.str(), [&, I] { return laplace_expansion(n, I, side); },
                    [n] { return quantum_det(n, Orientation::Row); });
            });
        }
    }
    // The r = 1 corollaries of the same expansion: Cramer orthogonality and
    // the generalized row/column expansions.
    for (Orientation side : variants_of(p))
        for (int i = 1; i <= n; ++i)
            for (int k = 1; k <= n; ++k) {
                std::ostringstream name;
                name << "orthogonality " << vname(side) << " n=" << n << " (i,k)=(" << i << ","
                     << k << ")";
                run.check_eq<MatPoly>(
                    name.str(), [=] { return orthogonality_sum(n, i, k, side); },
                    [=]() -> MatPoly {
                        if (i == k) return quantum_det(n, Orientation::Row);
                        return MatPoly::zero(n, ScalarMode::exact());
                    });
            }
    if (n <= 4) {
        std::vector<int> seq(static_cast<std::size_t>(n), 1);
        const auto advance = [&]() {
            for (int i = 0; i < n; ++i) {
                if (seq[static_cast<std::size_t>(i)] < n) {
                    ++seq[static_cast<std::size_t>(i)];
                    for (int j = 0; j < i; ++j) seq[static_cast<std::size_t>(j)] = 1;
                    return true;
                }
            }
            return false;
        };
        for (Orientation side : variants_of(p)) {
            std::fill(seq.begin(), seq.end(), 1);
            do {
                std::ostringstream name;
                name << "expansion " << vname(side) << " seq=(";
                for (int i = 0; i < n; ++i)
                    name << (i ? "," : "") << seq[static_cast<std::size_t>(i)];
                name << ")";
                const std::vector<int> s = seq;
                run.check_eq<MatPoly>(
                    name.str(), [=] { return generalized_expansion_sum(n, s, side); },
                    [=]() -> MatPoly {
                        std::vector<int> sorted = s;
                        std::sort(sorted.begin(), sorted.end());
                        if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
                            return MatPoly::zero(n, ScalarMode::exact());
                        MatPoly d = quantum_det(n, Orientation::Row);
                        d.scale(LaurentScalar::neg_q_pow(inversion_count(s)));
                        return d;
                    });
            } while (advance());
        }
    }
    return rep;
}

VerificationReport suite_pluecker(const SuiteParams& p) {
    require_cap(p.n >= 2 && p.n <= 3, "pluecker suite cap: 2 <= n <= 3");
    VerificationReport rep;
    rep.suite = "pluecker";
    Runner run{rep, p.perturb};
    const int n = p.n;
    std::vector<int> rs;
    if (p.r >= 0)
        rs = {p.r};
    else
        rs = iota_range(0, n - 1);
    for (int r : rs) {
        require_cap(r >= 0 && r < n, "pluecker: need 0 <= r < n");
        for (bool transposed : {false, true})
            for (PlueckerVariant variant : {PlueckerVariant::Plus, PlueckerVariant::Minus}) {
                std::ostringstream name;
                name << "vanishing sum n=" << n << " r=" << r
                     << (variant == PlueckerVariant::Plus ? " plus" : " minus")
                     << (transposed ? " transposed" : "");
                run.check_eq<MatPoly>(
                    name.str(),
                    [=] {
                        return pluecker_vanishing_sum(n, r, {}, variant, transposed);
                    },
                    [=] { return MatPoly::zero(2 * n, ScalarMode::exact()); });
            }
        run.check(
            "exchange identity n=" + std::to_string(n) + " r=" + std::to_string(r),
            [&, r](std::string& detail) {
                auto [lhs, rhs] = pluecker_exchange_sides(n, r);
                if (p.perturb) lhs = flip_first(std::move(lhs));
                if (lhs == rhs) return true;
                MatPoly diff = lhs;
                diff.sub_assign(rhs);
                detail = "difference: " + render_text(diff);
                return false;
            });
    }
    if (n == 2) {
        run.check("simplest pluecker display (1,2)(3,4) + (-q)(1,3)(2,4) + (-q)^2(1,4)(2,3)",
                  [](std::string& detail) {
                      const auto terms = pluecker_sum_terms(2, 1);
                      const std::vector<PlueckerTerm> expect = {
                          {0, {1, 2}, {3, 4}}, {1, {1, 3}, {2, 4}}, {2, {1, 4}, {2, 3}}};
                      if (terms.size() != expect.size()) {
                          detail = "wrong term count";
                          return false;
                      }
                      for (std::size_t i = 0; i < terms.size(); ++i)
                          if (terms[i].sigma_length != expect[i].sigma_length ||
                              terms[i].cols_first != expect[i].cols_first ||
                              terms[i].cols_second != expect[i].cols_second) {
                              detail = "term " + std::to_string(i) + " differs";
                              return false;
                          }
                      return true;
                  });
    }
    return rep;
}

VerificationReport suite_pfaffian(const SuiteParams& p) {
    require_cap(p.n >= 1 && p.n <= 3, "pfaffian suite cap: 1 <= n <= 3");
    VerificationReport rep;
    rep.suite = "pfaffian";
    Runner run{rep, p.perturb};
    const int n = p.n;
    const auto S = iota_range(1, 2 * n);

    run.check("matching counts (2n-1)!! and (2n-1)!! n!", [&](std::string& detail) {
        std::size_t dfact = 1;
        for (int k = 2 * n - 1; k > 1; k -= 2) dfact *= static_cast<std::size_t>(k);
        std::size_t fact = 1;
        for (int k = 2; k <= n; ++k) fact *= static_cast<std::size_t>(k);
        const auto canon = enumerate_matchings(S, true).size();
        const auto ordered = enumerate_matchings(S, false).size();
        if (canon == dfact && ordered == dfact * fact) return true;
        detail = "counts " + std::to_string(canon) + ", " + std::to_string(ordered);
        return false;
    });
    run.check_eq<BPoly>(
        "recursion = canonical matching sum", [&] { return pf_recursive(S); },
        [&] { return pf_matchings(S, true); });
    if (n >= 2) {
        for (Orientation v : variants_of(p))
            run.check(std::string("quadratic relation in the image, ") + vname(v),
                      [&, v](std::string& detail) {
                          if (p.perturb) {
                              detail = "perturbed";
                              return false;
                          }
                          return b_relation_check(n, v);
                      });
    }
    for (Orientation v : variants_of(p))
        run.check_eq<MatPoly>(
            std::string("Pf = det, ") + vname(v),
            [&, v] { return substitute_b(pf_recursive(S), n, v); },
            [&] { return quantum_det(2 * n, Orientation::Row); });
    run.check("two-form volume", [&](std::string& detail) {
        if (p.perturb) {
            detail = "perturbed";
            return false;
        }
        return pfaffian_two_form_check(n);
    });
    for (Orientation v : variants_of(p))
        run.check(std::string("odd-order padding (") + std::to_string(2 * n + 1) + "x" +
                      std::to_string(2 * n + 1) + " det), " + vname(v),
                  [&, v](std::string& detail) {
                      if (p.perturb) {
                          detail = "perturbed";
                          return false;
                      }
                      return odd_pf_det_check(n, v);
                  });
    return rep;
}

VerificationReport suite_hyper(const SuiteParams& p) {
    require_cap(p.m == 2 || p.m == 4, "hyper suite cap: m in {2, 4}");
    require_cap(p.m * p.n <= 8, "hyper suite cap: mn <= 8");
    require_cap(p.n >= 1, "hyper suite: n >= 1");
    VerificationReport rep;
    rep.suite = "hyper";
    Runner run{rep, p.perturb};
    const int m = p.m, n = p.n;
    const ScalarMode mode = mode_for_block_size(m);
    const auto S = iota_range(1, m * n);

    run.check("modulus for k=" + std::to_string(m / 2), [&](std::string& detail) {
        const unsigned M = modulus_for(static_cast<unsigned>(m) / 2);
        const unsigned want = (m == 2) ? 0u : 8u * ((m / 2) * (m / 2 - 1) / 2);
        if (M == want) return true;
        detail = "modulus " + std::to_string(M);
        return false;
    });
    run.check_eq<HPoly>(
        "recursion = canonical partition sum", [&] { return hyperpf_recursive(S, m); },
        [&] { return hyperpf_matchings(S, m, true); });
    if (m * n >= 2 * m) {
        for (Orientation v : variants_of(p))
            run.check(std::string("block relation in the image, ") + vname(v),
                      [&, v](std::string& detail) {
                          if (p.perturb) {
                              detail = "perturbed";
                              return false;
                          }
                          return hyper_relation_check(m, n, v);
                      });
    }
    for (Orientation v : variants_of(p))
        run.check_eq<MatPoly>(
            std::string("hyper-Pf = det, ") + vname(v),
            [&, v] { return hyper_substitute(hyperpf_recursive(S, m), m, n, v, mode); },
            [&] { return quantum_det(m * n, Orientation::Row, mode); });
    if (p.l >= 1) {
        require_cap(m == 2, "hyper padding cap: m = 2");
        for (Orientation v : variants_of(p))
            run.check(std::string("padding l=") + std::to_string(p.l) + ", " + vname(v),
                      [&, v](std::string& detail) {
                          if (p.perturb) {
                              detail = "perturbed";
                              return false;
                          }
                          return hyper_padding_check(m, n, p.l, v);
                      });
    }
    return rep;
}

VerificationReport suite_ideal(const SuiteParams& p) {
    require_cap(p.n >= 2 && p.n <= 3, "ideal suite cap: 2 <= n <= 3");
    VerificationReport rep;
    rep.suite = "ideal";
    Runner run{rep, p.perturb};
    const int n = p.n;
    const int N = 2 * n;
    const RelationSet rels = relation_generators(N, 2);
    const auto S = iota_range(1, N);

    run.check("relation count C(N,4)", [&](std::string& detail) {
        std::size_t expect = 1;
        if (N == 6) expect = 15;
        if (rels.relations.size() == expect) return true;
        detail = std::to_string(rels.relations.size()) + " relations";
        return false;
    });

    const auto certify = [&](const std::string& name, const BPoly& lhs, const BPoly& rhs) {
        run.check(name, [&](std::string& detail) {
            BPoly l = lhs;
            if (p.perturb) l = flip_first(std::move(l));
            const MembershipResult res = verify_in_B(l, rhs, rels);
            if (!res.member) {
                detail = "not a member";
                return false;
            }
            if (!verify_certificate(to_block_poly(l - rhs), rels, res.cert)) {
                detail = "certificate failed round-trip";
                return false;
            }
            rep.artifacts[name] = certificate_to_json(res);
            return true;
        });
    };

    // Lemma: sum_{i<j} (-q)^{i+j-3} [i,j][complement] = (sum q^{4i}) Pf.
    BPoly lemma_lhs(ScalarMode::exact());
    for (int i = 1; i <= N; ++i)
        for (int j = i + 1; j <= N; ++j) {
            std::vector<int> rest;
            for (int t = 1; t <= N; ++t)
                if (t != i && t != j) rest.push_back(t);
            BPoly term = coeff_mul(BPoly::generator(BGen(i, j)), pf_recursive(rest));
            term.scale(LaurentScalar::neg_q_pow(i + j - 3));
            lemma_lhs.add_assign(term);
        }
    BPoly lemma_rhs = pf_recursive(S);
    lemma_rhs.scale(q_factorial_factor(static_cast<unsigned>(n), 4, ScalarMode::exact()));
    certify("expansion lemma at 2n=" + std::to_string(N), lemma_lhs, lemma_rhs);

    // Ordered matching sum = (sum q^{4 l(sigma)}) Pf.
    certify("ordered sum identity at 2n=" + std::to_string(N), pf_matchings(S, false),
            lemma_rhs);

    run.check("single monomial is not a member", [&](std::string& detail) {
        BPoly mono = coeff_mul(BPoly::generator(BGen(1, 2)), BPoly::generator(BGen(3, 4)));
        const MembershipResult res = membership(to_block_poly(mono), rels);
        if (res.member) {
            detail = "unexpected member";
            return false;
        }
        return true;
    });
    return rep;
}

}  // namespace

VerificationReport verify_suite(const std::string& suite, const SuiteParams& params) {
    if (suite == "det") return suite_det(params);
    if (suite == "laplace") return suite_laplace(params);
    if (suite == "pluecker") return suite_pluecker(params);
    if (suite == "pfaffian") return suite_pfaffian(params);
    if (suite == "hyper") return suite_hyper(params);
    if (suite == "ideal") return suite_ideal(params);
    throw std::domain_error("unknown suite: " + suite +
                            " (expected det|laplace|pluecker|pfaffian|hyper|ideal)");
}

Json report_to_json(const VerificationReport& rep) {
    Json checks = Json::array();
    for (const auto& c : rep.checks)
        checks.push_back(Json{{"name", c.name},
                              {"pass", c.pass},
                              {"elapsed_ms", c.elapsed_ms},
                              {"detail", c.detail}});
    Json j{{"suite", rep.suite}, {"pass", rep.pass()}, {"checks", std::move(checks)}};
    if (!rep.artifacts.empty()) j["artifacts"] = rep.artifacts;
    return j;
}

VerificationReport report_from_json(const Json& j) {
    VerificationReport rep;
    rep.suite = j.at("suite").get<std::string>();
    for (const auto& c : j.at("checks")) {
        CheckResult r;
        r.name = c.at("name").get<std::string>();
        r.pass = c.at("pass").get<bool>();
        r.elapsed_ms = c.at("elapsed_ms").get<double>();
        r.detail = c.at("detail").get<std::string>();
        rep.checks.push_back(std::move(r));
    }
    if (j.contains("artifacts")) rep.artifacts = j.at("artifacts");
    return rep;
}

std::string report_text(const VerificationReport& rep) {
    std::ostringstream out;
    out << "suite " << rep.suite << "\n";
    for (const auto& c : rep.checks) {
        out << "  [" << (c.pass ? "PASS" : "FAIL") << "] " << c.name << "  ("
            << c.elapsed_ms / 1000.0 << " s)";
        if (!c.pass && !c.detail.empty()) out << "\n         " << c.detail;
        out << "\n";
    }
    out << (rep.pass() ? "PASS" : "FAIL") << " (" << rep.checks.size() << " checks, "
        << rep.total_ms() / 1000.0 << " s)\n";
    return out.str();
}

}  // namespace qpf
