#include "qpf/io.hpp"

#include <sstream>

namespace qpf {

namespace {

std::string rational_str(const Rational& r) { return r.get_str(); }

// One scalar monomial c q^e without any leading sign (c rendered as |c|).
std::string abs_monomial_str(const Rational& c, std::int64_t e) {
    Rational a = abs(c);
    std::string coeff = rational_str(a);
    if (e == 0) return coeff;
    std::string qpart = (e == 1) ? "q" : "q^" + std::to_string(e);
    if (a == 1) return qpart;
    return coeff + "·" + qpart;
}

}  // namespace

std::string render_text(const LaurentScalar& s) {
    if (s.is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [e, c] : s.terms()) {
        if (first) {
            if (c < 0) out << "-";
            out << abs_monomial_str(c, e);
            first = false;
        } else {
            out << (c < 0 ? " - " : " + ") << abs_monomial_str(c, e);
        }
    }
    return out.str();
}

namespace {

// Shared polynomial renderer: scalar 1 prints the bare word, a single
// negative monomial pulls its sign out front, anything else is parenthesized.
template <class TermMap, class WordFn>
std::string render_terms(const TermMap& terms, WordFn word_str) {
    if (terms.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [w, c] : terms) {
        const std::string word = word_str(w);
        bool negative_monomial = c.term_count() == 1 && c.terms().begin()->second < 0;
        LaurentScalar shown = c;
        if (negative_monomial) shown.negate();
        std::string lead;
        if (word.empty()) {
            lead = shown.is_one() ? "1" : "(" + render_text(shown) + ")";
        } else if (shown.is_one()) {
            lead = word;
        } else {
            lead = "(" + render_text(shown) + ")·" + word;
        }
        if (first) {
            out << (negative_monomial ? "-" : "") << lead;
            first = false;
        } else {
            out << (negative_monomial ? " - " : " + ") << lead;
        }
    }
    return out.str();
}

}  // namespace

std::string render_text(const MatPoly& p) {
    return render_terms(p.terms(), [](const MatWord& w) {
        std::string s;
        for (std::size_t i = 0; i < w.size(); ++i)
            s += "a[" + std::to_string(w[i].row()) + "," + std::to_string(w[i].col()) + "]";
        return s;
    });
}

std::string render_text(const BPoly& p) {
    return render_terms(p.terms(), [](const BWord& w) {
        std::string s;
        for (const BGen& g : w)
            s += "b[" + std::to_string(g.lo) + "," + std::to_string(g.hi) + "]";
        return s;
    });
}

std::string render_text(const HPoly& p) {
    const std::size_t m = static_cast<std::size_t>(p.m());
    return render_terms(p.terms(), [m](const HWord& w) {
        std::string s;
        for (std::size_t b = 0; b + m <= w.size(); b += m) {
            s += "b[";
            for (std::size_t i = 0; i < m; ++i)
                s += (i ? "," : "") + std::to_string(w[b + i]);
            s += "]";
        }
        return s;
    });
}

std::string render_text(const Form& f) {
    if (f.is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [bits, coeff] : f.components()) {
        if (!first) out << " + ";
        first = false;
        out << "(" << render_text(coeff) << ")·x{";
        const auto idx = ext_indices(bits);
        for (std::size_t i = 0; i < idx.size(); ++i) out << (i ? "," : "") << idx[i];
        out << "}";
    }
    return out.str();
}

// ---- JSON ----

Json scalar_to_json(const LaurentScalar& s) {
    Json j = Json::object();
    for (const auto& [e, c] : s.terms()) j[std::to_string(e)] = rational_str(c);
    return j;
}

LaurentScalar scalar_from_json(const Json& j) {
    LaurentScalar s;
    for (const auto& [key, val] : j.items()) {
        const std::int64_t e = std::stoll(key);
        Rational c(val.get<std::string>());
        c.canonicalize();
        s.add_assign(LaurentScalar::rational(c) * LaurentScalar::q_pow(e));
    }
    return s;
}

Json mode_to_json(ScalarMode mode) {
    return mode.is_exact() ? Json("exact") : Json(mode.modulus);
}

ScalarMode mode_from_json(const Json& j) {
    if (j.is_string() && j.get<std::string>() == "exact") return ScalarMode::exact();
    return ScalarMode::modular(j.get<unsigned>());
}

Json matpoly_to_json(const MatPoly& p) {
    Json terms = Json::array();
    for (const auto& [w, c] : p.terms()) {
        Json word = Json::array();
        for (std::size_t i = 0; i < w.size(); ++i)
            word.push_back(Json::array({w[i].row(), w[i].col()}));
        terms.push_back(Json{{"coeff", scalar_to_json(c)}, {"word", std::move(word)}});
    }
    return Json{{"n", p.n()}, {"mode", mode_to_json(p.mode())}, {"terms", std::move(terms)}};
}

MatPoly matpoly_from_json(const Json& j) {
    MatPoly p(j.at("n").get<int>(), mode_from_json(j.at("mode")));
    for (const auto& t : j.at("terms")) {
        MatWord w;
        for (const auto& g : t.at("word")) w.push_back(MatGen(g.at(0).get<int>(), g.at(1).get<int>()));
        p.add_term(w, scalar_from_json(t.at("coeff")));
    }
    return p;
}

Json form_to_json(const Form& f) {
    Json comps = Json::array();
    for (const auto& [bits, coeff] : f.components())
        comps.push_back(Json{{"indices", ext_indices(bits)}, {"coeff", matpoly_to_json(coeff)}});
    return Json{{"N", f.N()},
                {"n", f.zero_coeff().n()},
                {"mode", mode_to_json(f.zero_coeff().mode())},
                {"components", std::move(comps)}};
}

Form form_from_json(const Json& j) {
    Form f(j.at("N").get<int>(),
           MatPoly::zero(j.at("n").get<int>(), mode_from_json(j.at("mode"))));
    for (const auto& comp : j.at("components")) {
        const auto idx = comp.at("indices").get<std::vector<int>>();
        f.add_component(ext_bits(idx), matpoly_from_json(comp.at("coeff")));
    }
    return f;
}

Json bpoly_to_json(const BPoly& p) {
    Json terms = Json::array();
    for (const auto& [w, c] : p.terms()) {
        Json word = Json::array();
        for (const BGen& g : w) word.push_back(Json::array({g.lo, g.hi}));
        terms.push_back(Json{{"coeff", scalar_to_json(c)}, {"word", std::move(word)}});
    }
    return Json{{"mode", mode_to_json(p.mode())}, {"terms", std::move(terms)}};
}

BPoly bpoly_from_json(const Json& j) {
    BPoly p(mode_from_json(j.at("mode")));
    for (const auto& t : j.at("terms")) {
        BWord w;
        for (const auto& g : t.at("word")) w.emplace_back(g.at(0).get<int>(), g.at(1).get<int>());
        p.add_term(w, scalar_from_json(t.at("coeff")));
    }
    return p;
}

Json hpoly_to_json(const HPoly& p) {
    const std::size_t m = static_cast<std::size_t>(p.m());
    Json terms = Json::array();
    for (const auto& [w, c] : p.terms()) {
        Json word = Json::array();
        for (std::size_t b = 0; b + m <= w.size(); b += m) {
            Json block = Json::array();
            for (std::size_t i = 0; i < m; ++i) block.push_back(w[b + i]);
            word.push_back(std::move(block));
        }
        terms.push_back(Json{{"coeff", scalar_to_json(c)}, {"word", std::move(word)}});
    }
    return Json{{"m", p.m()}, {"mode", mode_to_json(p.mode())}, {"terms", std::move(terms)}};
}

HPoly hpoly_from_json(const Json& j) {
    HPoly p(j.at("m").get<int>(), mode_from_json(j.at("mode")));
    for (const auto& t : j.at("terms")) {
        HWord w;
        for (const auto& block : t.at("word"))
            for (const auto& v : block) w.push_back(v.get<std::uint8_t>());
        p.add_term(w, scalar_from_json(t.at("coeff")));
    }
    return p;
}

namespace {

Json hword_to_json(const HWord& w, int m) {
    Json word = Json::array();
    for (std::size_t b = 0; b + static_cast<std::size_t>(m) <= w.size();
         b += static_cast<std::size_t>(m)) {
        Json block = Json::array();
        for (int i = 0; i < m; ++i) block.push_back(w[b + static_cast<std::size_t>(i)]);
        word.push_back(std::move(block));
    }
    return word;
}

HWord hword_from_json(const Json& j) {
    HWord w;
    for (const auto& block : j)
        for (const auto& v : block) w.push_back(v.get<std::uint8_t>());
    return w;
}

}  // namespace

Json certificate_to_json(const MembershipResult& r) {
    Json j{{"member", r.member}};
    if (!r.member) return j;
    j["m"] = r.cert.m;
    Json terms = Json::array();
    for (const CertTerm& t : r.cert.terms) {
        terms.push_back(Json{{"left", hword_to_json(t.left, r.cert.m)},
                             {"relation", t.relation},
                             {"right", hword_to_json(t.right, r.cert.m)},
                             {"coeff", Json{{"num", scalar_to_json(t.coeff.num)},
                                            {"den", scalar_to_json(t.coeff.den)}}}});
    }
    j["terms"] = std::move(terms);
    return j;
}

MembershipResult certificate_from_json(const Json& j) {
    MembershipResult r;
    r.member = j.at("member").get<bool>();
    if (!r.member) return r;
    r.cert.m = j.at("m").get<int>();
    for (const auto& t : j.at("terms")) {
        CertTerm c;
        c.left = hword_from_json(t.at("left"));
        c.relation = t.at("relation").get<std::size_t>();
        c.right = hword_from_json(t.at("right"));
        c.coeff = RatFunc::of(scalar_from_json(t.at("coeff").at("num")),
                              scalar_from_json(t.at("coeff").at("den")));
        r.cert.terms.push_back(std::move(c));
    }
    return r;
}

}  // namespace qpf
