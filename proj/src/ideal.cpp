#include "qpf/ideal.hpp"

#include <algorithm>
#include <map>

namespace qpf {

RatFunc RatFunc::of(LaurentScalar n, LaurentScalar d) {
    if (d.is_zero()) throw std::domain_error("RatFunc: zero denominator");
    if (n.is_zero()) return RatFunc{LaurentScalar(), LaurentScalar::one()};
    const LaurentScalar g = laurent_gcd(n, d);
    n = laurent_divexact(n, g);
    d = laurent_divexact(d, g);
    // Normalize by the unit c q^e so the denominator has constant term 1.
    const std::int64_t e = d.min_exponent();
    const Rational c = d.terms().begin()->second;
    LaurentScalar unit_inv = LaurentScalar::rational(Rational(1) / c) * LaurentScalar::q_pow(-e);
    return RatFunc{n * unit_inv, d * unit_inv};
}

HPoly to_block_poly(const BPoly& p) {
    HPoly out(2, p.mode());
    for (const auto& [w, c] : p.terms()) {
        HWord flat;
        flat.reserve(w.size() * 2);
        for (const BGen& g : w) {
            flat.push_back(g.lo);
            flat.push_back(g.hi);
        }
        out.add_term(flat, c);
    }
    return out;
}

RelationSet relation_generators(int N, int m) {
    if (m < 2 || m % 2 != 0) throw std::domain_error("relation_generators: m must be even");
    if (N < 2 * m) throw std::domain_error("relation_generators: universe smaller than 2m");
    RelationSet rels;
    rels.universe = N;
    rels.m = m;
    for_each_k_subset(iota_range(1, N), 2 * m, [&](const std::vector<int>& S) {
        rels.relations.push_back(hyper_relation(S, m));
        rels.supports.push_back(S);
    });
    return rels;
}

namespace {

// Degree (block count) of a homogeneous polynomial; nullopt if mixed.
std::optional<int> homogeneous_degree(const HPoly& p) {
    std::optional<int> deg;
    for (const auto& [w, c] : p.terms()) {
        const int d = static_cast<int>(w.size()) / p.m();
        if (deg && *deg != d) return std::nullopt;
        deg = d;
    }
    return deg ? deg : std::optional<int>(0);
}

// All degree-k words over the m-block generators of [1, N], lexicographic.
std::vector<HWord> words_of_degree(int N, int m, int k) {
    std::vector<HWord> gens;
    for_each_k_subset(iota_range(1, N), m, [&](const std::vector<int>& block) {
        HWord w(block.begin(), block.end());
        gens.push_back(w);
    });
    std::vector<HWord> out{HWord{}};
    for (int i = 0; i < k; ++i) {
        std::vector<HWord> next;
        next.reserve(out.size() * gens.size());
        for (const HWord& w : out)
            for (const HWord& g : gens) {
                HWord e = w;
                e.insert(e.end(), g.begin(), g.end());
                next.push_back(std::move(e));
            }
        out = std::move(next);
    }
    return out;
}

struct SpanElem {
    HWord left, right;
    std::size_t relation;
    HPoly value;
};

// A row of the elimination tableau. Invariant:
//   ent == alpha * p + sum_e comb[e] * span[e]
// with every part a Laurent polynomial (fraction-free).
struct Row {
    std::map<HWord, LaurentScalar> ent;
    LaurentScalar alpha;
    std::map<std::size_t, LaurentScalar> comb;

    void scale(const LaurentScalar& c) {
        for (auto& [w, v] : ent) v = v * c;
        alpha = alpha * c;
        for (auto& [e, v] : comb) v = v * c;
    }

    // *this = c1 * *this - c2 * other
    void combine(const LaurentScalar& c1, const LaurentScalar& c2, const Row& other) {
        scale(c1);
        for (const auto& [w, v] : other.ent) {
            LaurentScalar d = v * c2;
            auto [it, fresh] = ent.try_emplace(w, LaurentScalar() - d);
            if (!fresh) {
                it->second.sub_assign(d);
                if (it->second.is_zero()) ent.erase(it);
            }
        }
        alpha.sub_assign(other.alpha * c2);
        for (const auto& [e, v] : other.comb) {
            LaurentScalar d = v * c2;
            auto [it, fresh] = comb.try_emplace(e, LaurentScalar() - d);
            if (!fresh) {
                it->second.sub_assign(d);
                if (it->second.is_zero()) comb.erase(it);
            }
        }
    }

    void strip_content() {
        LaurentScalar g;
        for (const auto& [w, v] : ent) g = laurent_gcd(g, v);
        if (!alpha.is_zero()) g = laurent_gcd(g, alpha);
        for (const auto& [e, v] : comb) g = laurent_gcd(g, v);
        if (g.is_zero() || g.is_one()) return;
        for (auto& [w, v] : ent) v = laurent_divexact(v, g);
        if (!alpha.is_zero()) alpha = laurent_divexact(alpha, g);
        for (auto& [e, v] : comb) v = laurent_divexact(v, g);
    }
};

void enforce_caps(int N, int m, int d) {
    const bool ok = (m == 2 && N <= 6 && d <= 3) || (m >= 4 && N <= 8 && d == 2);
    if (!ok)
        throw std::domain_error(
            "membership: instance beyond the exposed caps (m=2: N<=6, d<=3; m>=4: N<=8, d=2)");
}

}  // namespace

MembershipResult membership(const HPoly& p, const RelationSet& rels) {
    if (!(p.mode() == ScalarMode::exact()))
        throw std::domain_error("membership: exact mode only");
    if (p.m() != rels.m) throw std::domain_error("membership: block size mismatch");
    const auto deg = homogeneous_degree(p);
    if (!deg) throw std::domain_error("membership: input is not homogeneous");
    if (p.is_zero()) return MembershipResult{true, {rels.m, {}}};  // empty certificate
    const int d = *deg;
    if (d < 2) return MembershipResult{false, {rels.m, {}}};
    enforce_caps(rels.universe, rels.m, d);

    std::vector<SpanElem> span;
    for (int du = 0; du + 2 <= d; ++du) {
        const int dv = d - 2 - du;
        const auto lefts = words_of_degree(rels.universe, rels.m, du);
        const auto rights = words_of_degree(rels.universe, rels.m, dv);
        for (const HWord& u : lefts)
            for (std::size_t ri = 0; ri < rels.relations.size(); ++ri)
                for (const HWord& v : rights) {
                    HPoly val(p.m(), ScalarMode::exact());
                    for (const auto& [w, c] : rels.relations[ri].terms()) {
                        HWord word = u;
                        word.insert(word.end(), w.begin(), w.end());
                        word.insert(word.end(), v.begin(), v.end());
                        val.add_term(word, c);
                    }
                    if (!val.is_zero()) span.push_back(SpanElem{u, v, ri, std::move(val)});
                }
    }

    // Echelonize the span rows, pivoting on the lex-least monomial.
    std::map<HWord, Row> pivots;
    auto reduce = [&](Row& row, bool insert_as_pivot) {
        while (!row.ent.empty()) {
            const HWord lead = row.ent.begin()->first;
            auto it = pivots.find(lead);
            if (it == pivots.end()) {
                if (insert_as_pivot) {
                    row.strip_content();
                    pivots.emplace(lead, std::move(row));
                }
                return;
            }
            const LaurentScalar rl = row.ent.begin()->second;
            const LaurentScalar pl = it->second.ent.begin()->second;
            row.combine(pl, rl, it->second);
            row.strip_content();
        }
    };

    for (std::size_t e = 0; e < span.size(); ++e) {
        Row row;
        for (const auto& [w, c] : span[e].value.terms()) row.ent.emplace(w, c);
        row.comb.emplace(e, LaurentScalar::one());
        reduce(row, /*insert_as_pivot=*/true);
    }

    Row query;
    for (const auto& [w, c] : p.terms()) query.ent.emplace(w, c);
    query.alpha = LaurentScalar::one();
    reduce(query, /*insert_as_pivot=*/false);

    if (!query.ent.empty()) return MembershipResult{false, {}};

    // 0 == alpha p + sum comb_e span_e, hence p = sum (-comb_e / alpha) span_e.
    MembershipResult res;
    res.member = true;
    res.cert.m = rels.m;
    for (const auto& [e, c] : query.comb) {
        CertTerm t;
        t.left = span[e].left;
        t.right = span[e].right;
        t.relation = span[e].relation;
        LaurentScalar neg = c;
        neg.negate();
        t.coeff = RatFunc::of(neg, query.alpha);
        if (!t.coeff.is_zero()) res.cert.terms.push_back(std::move(t));
    }
    // every positive answer ships with a re-expanded certificate
    if (!verify_certificate(p, rels, res.cert))
        throw std::logic_error("membership: emitted certificate failed its round-trip check");
    return res;
}

bool verify_certificate(const HPoly& p, const RelationSet& rels,
                        const MembershipCertificate& cert) {
    std::map<HWord, RatFunc> acc;
    for (const CertTerm& t : cert.terms) {
        if (t.relation >= rels.relations.size()) return false;
        for (const auto& [w, c] : rels.relations[t.relation].terms()) {
            HWord word = t.left;
            word.insert(word.end(), w.begin(), w.end());
            word.insert(word.end(), t.right.begin(), t.right.end());
            auto [it, fresh] = acc.try_emplace(word, t.coeff * c);
            if (!fresh) it->second = it->second + (t.coeff * c);
        }
    }
    std::map<HWord, RatFunc> expected;
    for (const auto& [w, c] : p.terms()) expected.emplace(w, RatFunc::scalar(c));
    for (auto it = acc.begin(); it != acc.end();)
        it = it->second.is_zero() ? acc.erase(it) : std::next(it);
    return acc == expected;
}

MembershipResult verify_in_B(const BPoly& lhs, const BPoly& rhs, const RelationSet& rels) {
    return membership(to_block_poly(lhs - rhs), rels);
}

}  // namespace qpf
