// qpf: compute quantum determinants, minors, q-Pfaffians and hyper-Pfaffians,
// run the verification suites, and emit ideal-membership certificates.
//
// Exit codes: 0 computed/verified, 1 an identity check failed, 2 usage or
// domain error.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "qpf/forms.hpp"
#include "qpf/hyper.hpp"
#include "qpf/ideal.hpp"
#include "qpf/io.hpp"
#include "qpf/matrix.hpp"
#include "qpf/parallel.hpp"
#include "qpf/pfaffian.hpp"
#include "qpf/verify.hpp"

namespace {

using namespace qpf;

struct Options {
    int n = -1;
    int m = 4;
    int r = -1;
    int l = 0;
    std::string variant = "row";
    std::string mod = "auto";
    std::string format = "text";
    unsigned threads = 0;
    std::string out;
    bool perturb = false;
    std::string rows, cols;
    std::string suite;
    std::string target;
};

Orientation parse_variant(const std::string& v) {
    if (v == "row") return Orientation::Row;
    if (v == "col") return Orientation::Col;
    throw std::domain_error("--variant must be row or col");
}

ScalarMode parse_mode(const std::string& mod, ScalarMode auto_mode) {
    if (mod == "auto") return auto_mode;
    if (mod == "exact") return ScalarMode::exact();
    const long v = std::stol(mod);
    if (v < 1) throw std::domain_error("--mod must be auto, exact, or a positive integer");
    return ScalarMode::modular(static_cast<unsigned>(v));
}

std::vector<int> parse_tuple(const std::string& s, const char* what) {
    std::vector<int> out;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        if (tok.empty()) continue;
        out.push_back(std::stoi(tok));
    }
    if (out.empty()) throw std::domain_error(std::string(what) + ": empty tuple");
    return out;
}

void emit(const std::string& text, const std::string& out_file) {
    if (out_file.empty()) {
        std::cout << text << "\n";
        return;
    }
    std::ofstream f(out_file);
    if (!f) throw std::domain_error("cannot open output file " + out_file);
    f << text << "\n";
    std::cout << "wrote " << out_file << "\n";
}

int cmd_det(const Options& o) {
    if (o.n < 1 || o.n > 8) throw std::domain_error("det cap: 1 <= n <= 8");
    const Orientation v = parse_variant(o.variant);
    if (v == Orientation::Col && o.n > 6)
        throw std::domain_error("det cap: column orientation needs n <= 6");
    const ScalarMode mode = parse_mode(o.mod, ScalarMode::exact());
    const MatPoly det = quantum_det(o.n, v, mode);
    emit(o.format == "json" ? matpoly_to_json(det).dump(2) : render_text(det), o.out);
    return 0;
}

int cmd_minor(const Options& o) {
    if (o.n < 1 || o.n > 8) throw std::domain_error("minor cap: 1 <= n <= 8");
    const auto I = parse_tuple(o.rows, "--rows");
    const auto J = parse_tuple(o.cols, "--cols");
    if (I.size() > 6) throw std::domain_error("minor cap: r <= 6");
    const ScalarMode mode = parse_mode(o.mod, ScalarMode::exact());
    const MatPoly xi = quantum_minor(I, J, o.n, mode);
    emit(o.format == "json" ? matpoly_to_json(xi).dump(2) : render_text(xi), o.out);
    return 0;
}

int cmd_pf(const Options& o) {
    if (o.n < 1 || o.n > 4) throw std::domain_error("pf cap: 1 <= n <= 4 (order over {1..2n})");
    const ScalarMode mode = parse_mode(o.mod, ScalarMode::exact());
    const BPoly pf = pf_recursive(iota_range(1, 2 * o.n), mode);
    emit(o.format == "json" ? bpoly_to_json(pf).dump(2) : render_text(pf), o.out);
    return 0;
}

int cmd_hyperpf(const Options& o) {
    if (o.m < 2 || o.m % 2 != 0) throw std::domain_error("hyperpf: m must be even, >= 2");
    if (o.n < 1 || o.m * o.n > 8) throw std::domain_error("hyperpf cap: mn <= 8");
    const ScalarMode mode = parse_mode(o.mod, mode_for_block_size(o.m));
    const HPoly hp = hyperpf_recursive(iota_range(1, o.m * o.n), o.m, mode);
    emit(o.format == "json" ? hpoly_to_json(hp).dump(2) : render_text(hp), o.out);
    return 0;
}

int cmd_verify(const Options& o) {
    SuiteParams params;
    params.n = (o.n < 0) ? 2 : o.n;
    params.m = o.m;
    params.r = o.r;
    params.l = o.l;
    params.perturb = o.perturb;
    if (!o.variant.empty() && o.variant != "both") params.variant = parse_variant(o.variant);
    const VerificationReport rep = verify_suite(o.suite, params);
    const std::string text =
        (o.format == "json") ? report_to_json(rep).dump(2) : report_text(rep);
    if (o.out.empty()) {
        std::cout << text;
        if (o.format == "text") std::cout.flush();
    } else {
        std::ofstream f(o.out);
        if (!f) throw std::domain_error("cannot open output file " + o.out);
        f << (o.format == "json" ? text : report_to_json(rep).dump(2)) << "\n";
        std::cout << text << "wrote " << o.out << "\n";
    }
    return rep.pass() ? 0 : 1;
}

int cmd_cert(const Options& o) {
    MembershipResult res;
    HPoly queried(2, ScalarMode::exact());
    RelationSet rels;
    if (o.target == "ordered-sum" || o.target == "expansion-lemma") {
        const int n = (o.n < 0) ? 2 : o.n;
        if (n < 2 || n > 3) throw std::domain_error("cert cap: 2 <= n <= 3");
        const int N = 2 * n;
        rels = relation_generators(N, 2);
        const auto S = iota_range(1, N);
        BPoly rhs = pf_recursive(S);
        rhs.scale(q_factorial_factor(static_cast<unsigned>(n), 4, ScalarMode::exact()));
        BPoly lhs(ScalarMode::exact());
        if (o.target == "ordered-sum") {
            lhs = pf_matchings(S, false);
        } else {
            for (int i = 1; i <= N; ++i)
                for (int j = i + 1; j <= N; ++j) {
                    std::vector<int> rest;
                    for (int t = 1; t <= N; ++t)
                        if (t != i && t != j) rest.push_back(t);
                    BPoly term = coeff_mul(BPoly::generator(BGen(i, j)), pf_recursive(rest));
                    term.scale(LaurentScalar::neg_q_pow(i + j - 3));
                    lhs.add_assign(term);
                }
        }
        queried = to_block_poly(lhs - rhs);
        res = membership(queried, rels);
    } else if (o.target == "volume-gap") {
        const int m = o.m, n = (o.n < 0) ? 2 : o.n;
        if (m != 4 || n != 2) throw std::domain_error("cert volume-gap cap: m=4, n=2");
        const auto S = iota_range(1, m * n);
        rels = relation_generators(m * n, m);
        HPoly lhs = hyperpf_matchings(S, m, false);
        HPoly rhs = hyperpf_recursive(S, m);
        rhs.scale(q_factorial_factor(static_cast<unsigned>(n),
                                     static_cast<unsigned>(m) * static_cast<unsigned>(m),
                                     ScalarMode::exact()));
        queried = lhs - rhs;
        res = membership(queried, rels);
    } else {
        throw std::domain_error(
            "cert target must be ordered-sum | expansion-lemma | volume-gap");
    }
    if (res.member && !verify_certificate(queried, rels, res.cert))
        throw std::runtime_error("internal error: certificate failed round-trip");
    emit(certificate_to_json(res).dump(2), o.out);
    return res.member ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact quantum Pfaffian / hyper-Pfaffian computer algebra"};
    app.require_subcommand(1);
    Options o;

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--n", o.n, "size parameter n");
        sub->add_option("--m", o.m, "block size m (even)");
        sub->add_option("--r", o.r, "Pluecker pin count r");
        sub->add_option("--l", o.l, "padding remainder l");
        sub->add_option("--variant", o.variant, "row|col (verify: row|col|both)");
        sub->add_option("--mod", o.mod, "auto|exact|<M>");
        sub->add_option("--format", o.format, "text|json")
            ->check(CLI::IsMember({"text", "json"}));
        sub->add_option("--threads", o.threads, "worker threads (default: QPF_THREADS or all)");
        sub->add_option("--out", o.out, "write output to FILE");
    };

    CLI::App* det = app.add_subcommand("det", "quantum determinant of M_q(n)");
    add_common(det);
    CLI::App* minor = app.add_subcommand("minor", "quantum minor xi^I_J");
    add_common(minor);
    minor->add_option("--rows", o.rows, "row tuple, e.g. 1,2")->required();
    minor->add_option("--cols", o.cols, "column tuple, e.g. 1,3")->required();
    CLI::App* pf = app.add_subcommand("pf", "q-Pfaffian [1..2n] in the free B algebra");
    add_common(pf);
    CLI::App* hyperpf =
        app.add_subcommand("hyperpf", "q-hyper-Pfaffian [1..mn]_m in the free block algebra");
    add_common(hyperpf);
    CLI::App* verify = app.add_subcommand("verify", "run a verification suite");
    verify->add_option("suite", o.suite, "det|laplace|pluecker|pfaffian|hyper|ideal")
        ->required();
    add_common(verify);
    verify->add_flag("--perturb", o.perturb)->group("");  // hidden: injects one sign error
    CLI::App* cert = app.add_subcommand("cert", "emit an ideal-membership certificate");
    cert->add_option("target", o.target, "ordered-sum|expansion-lemma|volume-gap")->required();
    add_common(cert);

    o.variant = "";  // verify defaults to both variants; compute verbs to row
    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help
        app.exit(e);
        return 2;
    }

    if (o.threads > 0) set_default_threads(o.threads);

    try {
        if (det->parsed()) {
            if (o.variant.empty()) o.variant = "row";
            if (o.n < 0) throw std::domain_error("det: --n is required");
            return cmd_det(o);
        }
        if (minor->parsed()) {
            if (o.n < 0) throw std::domain_error("minor: --n is required");
            return cmd_minor(o);
        }
        if (pf->parsed()) {
            if (o.n < 0) throw std::domain_error("pf: --n is required");
            return cmd_pf(o);
        }
        if (hyperpf->parsed()) {
            if (o.n < 0) throw std::domain_error("hyperpf: --n is required");
            return cmd_hyperpf(o);
        }
        if (verify->parsed()) return cmd_verify(o);
        if (cert->parsed()) return cmd_cert(o);
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
