// Acceptance suite: one line per criterion, exact equality throughout, runtime
// bounds enforced. Exit status is non-zero if any criterion fails.

#include <array>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <string>

#include <fockvx/fock.hpp>
#include <fockvx/laurent.hpp>
#include <fockvx/random.hpp>
#include <fockvx/tuples.hpp>
#include <fockvx/vertex.hpp>

#include "oracles.hpp"

#ifndef FOCKVX_CLI_PATH
#error "FOCKVX_CLI_PATH must point at the command-line tool"
#endif

using namespace fockvx;

namespace
{

struct Outcome {
    bool ok = true;
    std::string detail;

    void require(bool cond, const std::string &what)
    {
        if (!cond && ok) {
            ok = false;
            detail = what;
        }
    }
};

bool run_criterion(int id, const std::string &title, double limit_seconds, const std::function<Outcome()> &body)
{
    const auto start = std::chrono::steady_clock::now();
    Outcome out;
    try {
        out = body();
    } catch (const std::exception &e) {
        out.ok = false;
        out.detail = std::string("exception: ") + e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (out.ok && secs >= limit_seconds) {
        out.ok = false;
        out.detail = "took " + std::to_string(secs) + " s, limit " + std::to_string(limit_seconds) + " s";
    }
    std::printf("[%s] %d. %s (%.3f s / %.0f s)%s%s\n", out.ok ? "PASS" : "FAIL", id, title.c_str(), secs, limit_seconds,
                out.ok ? "" : " -- ", out.detail.c_str());
    std::fflush(stdout);
    return out.ok;
}

std::string tag(const char *what, int trial)
{
    return std::string(what) + " (trial " + std::to_string(trial) + ")";
}

Outcome power_inner_products()
{
    Outcome out;
    RationalSampler rs(101);
    for (int t = 0; t < 25; ++t) {
        const OneParticleVector x = rs.vector(3);
        const OneParticleVector y = rs.vector(3);
        for (int j = 0; j <= 5; ++j) {
            out.require(pow(inner(x, y), static_cast<unsigned>(j))
                            == inner(power(x, j), power(y, j)) / factorial(static_cast<unsigned>(j)),
                        tag("<x,y>^j != <x^j,y^j>/j!", t));
        }
    }
    return out;
}

Outcome coherent_identities()
{
    Outcome out;
    RationalSampler rs(202);
    for (int t = 0; t < 25; ++t) {
        const int K = rs.uniform(1, 3);
        const int D = rs.uniform(0, 6);
        const OneParticleVector x = rs.vector(K);
        const OneParticleVector w = rs.vector(K);
        const int n = rs.uniform(0, D);
        out.require(power_annihilate_coherent(x, n, w, D) == pow(inner(x, w), static_cast<unsigned>(n)) * coherent(w, D - n),
                    tag("(x^n)* e^w", t));
    }
    for (int t = 0; t < 25; ++t) {
        const int K = rs.uniform(1, 3);
        const int D = rs.uniform(0, 6);
        const OneParticleVector u = rs.vector(K);
        const FockVector f = rs.fock_vector(K, rs.uniform(0, D), 3);
        const FockVector g = rs.fock_vector(K, D - f.degree(), 3);
        out.require(check_multiplicability(u, f, g, D), tag("multiplicability", t));
    }
    for (int t = 0; t < 25; ++t) {
        const int K = rs.uniform(1, 3);
        const int D = rs.uniform(0, 6);
        const OneParticleVector w = rs.vector(K);
        const OneParticleVector v = rs.vector(K);
        const FockVector r = exp_annihilate(w, coherent(v, D));
        for (int j = 0; j <= D; ++j) {
            const Scalar scale = exp_partial_sum(inner(w, v), D - j) / factorial(static_cast<unsigned>(j));
            out.require(r.component(j) == power(v, j) * scale, tag("e^{a(w)} e^v", t));
        }
    }
    return out;
}

Outcome lemma_term_by_term()
{
    Outcome out;
    const BasisConfig id = BasisConfig::identity(3);
    RationalSampler rs(303);
    for (int t = 0; t < 10; ++t) {
        const OneParticleVector u = rs.vector(3);
        const OneParticleVector v = rs.vector(3);
        const VertexPairings pr = vertex_pairings(u, v, id);
        for (int m = 0; m <= 6; ++m) {
            out.require(verify_lemma_term(u, v, m, id), tag("verify_lemma_term", t));
            const auto brute = oracle::multinomial_power(pr.creation, pr.annihilation, m);
            LaurentPolynomial lhs = pow(vertex_exponent(pr), static_cast<unsigned>(m));
            lhs *= Scalar(1) / factorial(static_cast<unsigned>(m));
            out.require(lhs.coeffs() == brute, tag("P(z)^m/m! vs multinomial oracle", t));
            for (const auto &[w, c] : brute) {
                out.require(matrix_element_expansion(u, v, w, m, id) == c, tag("expansion vs multinomial oracle", t));
            }
        }
    }
    return out;
}

Outcome operator_vs_generating_function()
{
    Outcome out;
    const BasisConfig id = BasisConfig::identity(2);
    const Cutoffs cut{2, 6, 3};
    RationalSampler rs(404);
    std::vector<SchurOperator> ops;
    for (long w = -6; w <= 6; ++w) {
        ops.push_back(schur_terms(w, cut));
    }
    for (int t = 0; t < 5; ++t) {
        const OneParticleVector u = rs.vector(2);
        const OneParticleVector v = rs.vector(2);
        const FockVector eu = coherent(u, cut.degree);
        const FockVector ev = coherent(v, cut.degree);
        for (const auto &op : ops) {
            out.require(inner(eu, apply_schur(op, ev, id, cut.degree)) == matrix_element_degree_matched(u, v, op.w, id, cut),
                        tag("Fock route != expansion", t) + " w=" + std::to_string(op.w));
        }
    }
    return out;
}

Outcome theorem_reduction()
{
    Outcome out;
    const BasisConfig id = BasisConfig::identity(2);
    const Cutoffs cut{2, 6, 3}; // M >= k + j, D >= max(k, j)
    RationalSampler rs(505);
    std::vector<SchurOperator> ops;
    for (long w = -4; w <= 4; ++w) {
        ops.push_back(schur_terms(w, cut));
    }
    for (int t = 0; t < 5; ++t) {
        const OneParticleVector u = rs.vector(2);
        const OneParticleVector v = rs.vector(2);
        for (int k = 0; k <= 3; ++k) {
            for (int j = 0; j <= 3; ++j) {
                const FockVector uk = power(u, k);
                const FockVector vj = power(v, j);
                for (const auto &op : ops) {
                    out.require(power_matrix_element(u, k, v, j, op.w, id, cut)
                                    == inner(uk, apply_schur(op, vj, id, cut.degree)),
                                tag("power matrix element", t) + " k=" + std::to_string(k) + " j=" + std::to_string(j)
                                    + " w=" + std::to_string(op.w));
                }
            }
        }
    }
    return out;
}

Outcome classical_schur()
{
    Outcome out;
    const auto x = [](int k) { return Polynomial::variable(k); };
    const auto series = oracle::exp_product(3, 3);
    const std::array<Polynomial, 4> literal{Polynomial::one(), x(1), x(2) + Scalar(Rational(1, 2)) * x(1) * x(1),
                                            x(3) + x(1) * x(2) + Scalar(Rational(1, 6)) * x(1) * x(1) * x(1)};
    for (int m = 0; m <= 3; ++m) {
        out.require(series[static_cast<std::size_t>(m)] == literal[static_cast<std::size_t>(m)],
                    "oracle disagrees with the closed-form value at m=" + std::to_string(m));
        out.require(elementary_schur(m, 3) == series[static_cast<std::size_t>(m)], "S_" + std::to_string(m));
    }
    return out;
}

Outcome enumeration_cross_check()
{
    Outcome out;
    for (int K = 1; K <= 4; ++K) {
        for (int m = 0; m <= 5; ++m) {
            const auto brute = oracle::brute_force_pairs_by_weight(m, K);
            for (long w = -10; w <= 10; ++w) {
                const auto it = brute.find(w);
                const std::vector<TuplePair> expected = it == brute.end() ? std::vector<TuplePair>{} : it->second;
                const auto pairs = enumerate_pq(m, w, K);
                const std::string at = " at m=" + std::to_string(m) + " w=" + std::to_string(w) + " K=" + std::to_string(K);
                out.require(pairs == expected, "enumerate_pq" + at);
                out.require(count_pq(m, w, K) == pairs.size(), "count_pq" + at);
            }
        }
    }
    return out;
}

std::pair<int, std::string> run_cli(const std::string &args)
{
    const std::string cmd = std::string("\"") + FOCKVX_CLI_PATH + "\" " + args;
    FILE *pipe = popen(cmd.c_str(), "r");
    if (pipe == nullptr) {
        return {-1, {}};
    }
    std::string output;
    std::array<char, 4096> buf{};
    std::size_t n = 0;
    while ((n = std::fread(buf.data(), 1, buf.size(), pipe)) > 0) {
        output.append(buf.data(), n);
    }
    const int status = pclose(pipe);
    return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, output};
}

Outcome cli_determinism()
{
    Outcome out;
    const auto [code1, out1] = run_cli("verify --seed 1 --trials 5");
    const auto [code2, out2] = run_cli("verify --seed 1 --trials 5");
    out.require(code1 == 0, "first run exited " + std::to_string(code1) + ":\n" + out1);
    out.require(code2 == 0, "second run exited " + std::to_string(code2));
    out.require(!out1.empty() && out1 == out2, "outputs differ between runs");
    return out;
}

} // namespace

int main()
{
    bool all = true;
    all &= run_criterion(1, "power inner products <x,y>^j = <x^j,y^j>/j!", 1, power_inner_products);
    all &= run_criterion(2, "coherent-vector identities: power annihilation, multiplicability, exp annihilation", 5,
                         coherent_identities);
    all &= run_criterion(3, "Lemma term by term against the multinomial oracle, m <= 6", 10, lemma_term_by_term);
    all &= run_criterion(4, "operator route vs generating function, K=2 D=3 M=6 |w|<=6", 30,
                         operator_vs_generating_function);
    all &= run_criterion(5, "Theorem reduction k,j <= 3, |w| <= 4, K=2", 10, theorem_reduction);
    all &= run_criterion(6, "classical Schur values S_0..S_3", 1, classical_schur);
    all &= run_criterion(7, "enumeration vs full sweep, m <= 5, |w| <= 10, K <= 4", 5, enumeration_cross_check);
    all &= run_criterion(8, "CLI verify --seed 1 --trials 5 exits 0 and is byte-identical", 60, cli_determinism);
    std::printf("%s\n", all ? "ACCEPTANCE: all criteria pass" : "ACCEPTANCE: failures present");
    return all ? 0 : 1;
}
