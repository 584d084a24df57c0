// fockvx: command-line front end for the truncated vertex-operator expansion.
//
// Exit status: 0 success, 1 an identity failed during `verify`, 2 usage,
// configuration or input error.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>

#include <CLI11.hpp>

#include <fockvx/basis.hpp>
#include <fockvx/render.hpp>
#include <fockvx/serialize.hpp>
#include <fockvx/tuples.hpp>
#include <fockvx/verify.hpp>
#include <fockvx/vertex.hpp>

namespace
{

using namespace fockvx;

constexpr int exit_identity_failure = 1;
constexpr int exit_usage = 2;

struct CommonOptions {
    Cutoffs cutoffs;
    std::string basis;
    std::string format;
    std::string output;
};

void add_common(CLI::App *cmd, CommonOptions &opt)
{
    cmd->add_option("--modes", opt.cutoffs.modes, "mode cutoff K")->capture_default_str();
    cmd->add_option("--order", opt.cutoffs.order, "expansion order cutoff M")->capture_default_str();
    cmd->add_option("--degree", opt.cutoffs.degree, "Fock degree cutoff D")->capture_default_str();
    cmd->add_option("--basis", opt.basis, "basis JSON: a file path or an inline object");
    cmd->add_option("--format", opt.format, "output format")->check(CLI::IsMember({"json", "text", "latex"}));
    cmd->add_option("--output", opt.output, "write output to this file instead of stdout");
}

json read_json_argument(const std::string &arg, const char *what)
{
    std::string text = arg;
    const auto first = arg.find_first_not_of(" \t\r\n");
    if (first == std::string::npos || (arg[first] != '{' && arg[first] != '[')) {
        std::ifstream in(arg);
        if (!in) {
            throw config_error(std::string("cannot open ") + what + " file \"" + arg + "\"");
        }
        std::stringstream ss;
        ss << in.rdbuf();
        text = ss.str();
    }
    try {
        return json::parse(text);
    } catch (const json::parse_error &e) {
        throw config_error(std::string("malformed ") + what + " JSON: " + e.what());
    }
}

BasisConfig load_basis(const CommonOptions &opt)
{
    opt.cutoffs.validate();
    if (opt.basis.empty()) {
        return BasisConfig::identity(opt.cutoffs.modes);
    }
    BasisConfig basis = basis_from_json(read_json_argument(opt.basis, "basis"));
    if (basis.modes() != opt.cutoffs.modes) {
        throw config_error("basis has " + std::to_string(basis.modes()) + " modes but --modes is "
                           + std::to_string(opt.cutoffs.modes));
    }
    return basis;
}

OneParticleVector load_vector(const std::string &arg, int modes, const char *what)
{
    if (arg.empty()) {
        return OneParticleVector(modes);
    }
    const json j = read_json_argument(arg, what);
    OneParticleVector v = vector_from_json(j);
    if (!v.coords().empty() && v.coords().rbegin()->first > modes) {
        throw std::out_of_range(std::string(what) + " has mode " + std::to_string(v.coords().rbegin()->first)
                                + " outside 1.." + std::to_string(modes));
    }
    OneParticleVector out(modes);
    for (const auto &[mode, value] : v.coords()) {
        out.set(mode, value);
    }
    return out;
}

void emit(const CommonOptions &opt, const std::string &text)
{
    if (opt.output.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(opt.output);
    if (!out) {
        throw config_error("cannot write output file \"" + opt.output + "\"");
    }
    out << text;
}

std::string format_or(const CommonOptions &opt, const char *fallback)
{
    return opt.format.empty() ? fallback : opt.format;
}

int cmd_schur_terms(const CommonOptions &opt, long w)
{
    load_basis(opt);
    const SchurOperator op = schur_terms(w, opt.cutoffs);
    const std::string fmt = format_or(opt, "json");
    if (fmt == "json") {
        emit(opt, to_json(op).dump() + "\n");
    } else if (fmt == "latex") {
        emit(opt, "\\mathcal{S}_{" + std::to_string(w) + "} = " + to_latex(op) + "\n");
    } else {
        emit(opt, to_text(op) + "\n");
    }
    return 0;
}

int cmd_enumerate(const CommonOptions &opt, int m, long w)
{
    opt.cutoffs.validate();
    const auto pairs = enumerate_pq(m, w, opt.cutoffs.modes);
    const std::string fmt = format_or(opt, "json");
    if (fmt == "json") {
        json list = json::array();
        for (const auto &pq : pairs) {
            list.push_back(to_json(pq));
        }
        emit(opt, json{{"m", m}, {"w", w}, {"modes", opt.cutoffs.modes}, {"count", pairs.size()}, {"pairs", list}}.dump()
                      + "\n");
        return 0;
    }
    std::string text;
    for (const auto &pq : pairs) {
        if (fmt == "latex") {
            SchurOperator single{w, opt.cutoffs, {{pq.p, pq.q, Scalar(1)}}};
            text += to_latex(single) + "\n";
        } else {
            text += "p=" + pq.p.to_string() + " q=" + pq.q.to_string() + "\n";
        }
    }
    emit(opt, text);
    return 0;
}

int cmd_matrix_element(const CommonOptions &opt, const std::string &u_arg, const std::string &v_arg)
{
    const BasisConfig basis = load_basis(opt);
    const OneParticleVector u = load_vector(u_arg, opt.cutoffs.modes, "u");
    const OneParticleVector v = load_vector(v_arg, opt.cutoffs.modes, "v");
    const LaurentSlice slice = matrix_element_closed(u, v, basis, opt.cutoffs);
    const Scalar prefactor = exp_partial_sum(inner(u, v), opt.cutoffs.order);
    const std::string fmt = format_or(opt, "json");
    if (fmt == "json") {
        json j = to_json(slice);
        j["prefactor"] = json{{"kind", "partial_sum"},
                              {"order", opt.cutoffs.order},
                              {"overlap", to_json(inner(u, v))},
                              {"value", to_json(prefactor)}};
        emit(opt, j.dump() + "\n");
    } else if (fmt == "latex") {
        emit(opt, to_latex(slice.coeffs) + "\n");
    } else {
        emit(opt, to_text(slice.coeffs) + "    [includes E_" + std::to_string(opt.cutoffs.order)
                      + "(<u,v>) = " + prefactor.to_string() + ", a partial sum of e^<u,v>]\n");
    }
    return 0;
}

int cmd_elementary_schur(const CommonOptions &opt, int m)
{
    opt.cutoffs.validate();
    const Polynomial poly = elementary_schur(m, opt.cutoffs.modes);
    const std::string fmt = format_or(opt, "json");
    if (fmt == "json") {
        json j{{"m", m}, {"modes", opt.cutoffs.modes}};
        j["terms"] = to_json(poly)["terms"];
        j["latex"] = to_latex(poly);
        emit(opt, j.dump() + "\n");
    } else if (fmt == "latex") {
        emit(opt, "S_{" + std::to_string(m) + "} = " + to_latex(poly) + "\n");
    } else {
        emit(opt, to_text(poly) + "\n");
    }
    return 0;
}

int cmd_verify(const CommonOptions &opt, std::uint64_t seed, int trials)
{
    if (trials < 1) {
        throw CLI::ValidationError("--trials", "must be >= 1");
    }
    VerifyOptions vo{opt.cutoffs, load_basis(opt), seed, trials};
    const auto reports = run_verification(vo);
    bool all = true;
    for (const auto &r : reports) {
        all = all && r.passed;
    }
    const std::string fmt = format_or(opt, "text");
    if (fmt == "json") {
        json checks = json::array();
        for (const auto &r : reports) {
            json c{{"name", r.name}, {"statement", r.statement}, {"passed", r.passed}, {"cases", r.cases}};
            if (!r.passed) {
                c["counterexample"] = r.counterexample;
            }
            checks.push_back(std::move(c));
        }
        emit(opt, json{{"seed", seed}, {"trials", trials}, {"cutoffs", to_json(opt.cutoffs)}, {"passed", all}, {"checks", checks}}
                          .dump()
                      + "\n");
    } else {
        std::string text = "verify seed=" + std::to_string(seed) + " trials=" + std::to_string(trials)
                           + " K=" + std::to_string(opt.cutoffs.modes) + " D=" + std::to_string(opt.cutoffs.degree)
                           + " M=" + std::to_string(opt.cutoffs.order) + "\n";
        for (const auto &r : reports) {
            text += std::string(r.passed ? "PASS " : "FAIL ") + r.name + " (" + std::to_string(r.cases)
                    + " cases): " + r.statement + "\n";
            if (!r.passed) {
                text += "  counterexample: " + r.counterexample.dump() + "\n";
            }
        }
        text += all ? "all identities hold\n" : "identity failure\n";
        emit(opt, text);
    }
    return all ? 0 : exit_identity_failure;
}

} // namespace

int main(int argc, char **argv)
{
    CLI::App app{"Exact truncated Laurent expansion of bosonic vertex operators"};
    app.require_subcommand(1);

    CommonOptions opt;
    long w = 0;
    int m = 0;
    std::uint64_t seed = 1;
    int trials = 5;
    std::string u_arg;
    std::string v_arg;

    auto *schur = app.add_subcommand("schur-terms", "terms of the Schur coefficient S_w");
    add_common(schur, opt);
    schur->add_option("--w", w, "Laurent weight w")->required();

    auto *enumerate = app.add_subcommand("enumerate", "tuple pairs (p, q) of order m and weight w");
    add_common(enumerate, opt);
    enumerate->add_option("--m", m, "order m = |p| + |q|")->required();
    enumerate->add_option("--w", w, "weight w")->required();

    auto *matrix = app.add_subcommand("matrix-element", "<e^u, V(z) e^v> as a Laurent polynomial in z");
    add_common(matrix, opt);
    matrix->add_option("--u", u_arg, "bra vector JSON (path or inline); defaults to 0");
    matrix->add_option("--v", v_arg, "ket vector JSON (path or inline); defaults to 0");

    auto *elementary = app.add_subcommand("elementary-schur", "classical polynomial S_m(x_1..x_K)");
    add_common(elementary, opt);
    elementary->add_option("--m", m, "index m")->required();

    auto *verify = app.add_subcommand("verify", "seeded property suite over all exact identities");
    add_common(verify, opt);
    verify->add_option("--seed", seed, "generator seed")->capture_default_str();
    verify->add_option("--trials", trials, "random trials per identity")->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : exit_usage;
    }

    try {
        if (*schur) {
            return cmd_schur_terms(opt, w);
        }
        if (*enumerate) {
            return cmd_enumerate(opt, m, w);
        }
        if (*matrix) {
            return cmd_matrix_element(opt, u_arg, v_arg);
        }
        if (*elementary) {
            return cmd_elementary_schur(opt, m);
        }
        return cmd_verify(opt, seed, trials);
    } catch (const CLI::ValidationError &e) {
        std::cerr << "usage error: " << e.what() << "\n";
    } catch (const config_error &e) {
        std::cerr << "configuration error: " << e.what() << "\n";
    } catch (const std::out_of_range &e) {
        std::cerr << "input error: " << e.what() << "\n";
    } catch (const std::invalid_argument &e) {
        std::cerr << "input error: " << e.what() << "\n";
    } catch (const json::exception &e) {
        std::cerr << "input error: " << e.what() << "\n";
    }
    return exit_usage;
}
