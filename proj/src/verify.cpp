#include <fockvx/verify.hpp>

#include <functional>
#include <optional>

#include <fockvx/fock.hpp>
#include <fockvx/random.hpp>
#include <fockvx/vertex.hpp>

namespace fockvx
{

namespace
{

// One trial either passes or yields a counterexample payload.
using Trial = std::function<std::optional<json>(RationalSampler &, long &cases)>;

CheckReport run_check(std::string name, std::string statement, std::uint64_t stream, const VerifyOptions &opt,
                      const Trial &trial)
{
    CheckReport report{std::move(name), std::move(statement), true, 0, nullptr};
    RationalSampler sampler(opt.seed + 0x9E3779B97F4A7C15ULL * stream);
    for (int t = 0; t < opt.trials; ++t) {
        if (auto bad = trial(sampler, report.cases)) {
            report.passed = false;
            (*bad)["trial"] = t;
            report.counterexample = std::move(*bad);
            break;
        }
    }
    return report;
}

} // namespace

std::vector<CheckReport> run_verification(const VerifyOptions &opt)
{
    if (opt.trials < 1) {
        throw config_error("trials must be >= 1, got " + std::to_string(opt.trials));
    }
    opt.cutoffs.validate();
    if (opt.cutoffs.modes != opt.basis.modes()) {
        throw config_error("mode cutoff K=" + std::to_string(opt.cutoffs.modes) + " does not match the "
                           + std::to_string(opt.basis.modes()) + "-mode basis");
    }
    const int K = opt.cutoffs.modes;
    const int D = opt.cutoffs.degree;
    const int M = opt.cutoffs.order;
    const BasisConfig &basis = opt.basis;

    std::vector<CheckReport> out;

    out.push_back(run_check("adjointness", "<x a, b> = <a, x* b>", 1, opt, [&](RationalSampler &rs, long &cases) -> std::optional<json> {
        const FockVector a = rs.fock_vector(K, D, 3);
        const FockVector b = rs.fock_vector(K, D + 1, 3);
        const OneParticleVector x = rs.vector(K);
        ++cases;
        if (inner(embed(x) * a, b) != inner(a, annihilate(x, b))) {
            return json{{"x", to_json(x)}, {"a", to_json(a)}, {"b", to_json(b)}};
        }
        return std::nullopt;
    }));

    out.push_back(run_check("leibniz", "x*(a b) = x*(a) b + a x*(b)", 2, opt, [&](RationalSampler &rs, long &cases) -> std::optional<json> {
        const FockVector a = rs.fock_vector(K, D, 3);
        const FockVector b = rs.fock_vector(K, D, 3);
        const OneParticleVector x = rs.vector(K);
        ++cases;
        if (annihilate(x, a * b) != annihilate(x, a) * b + a * annihilate(x, b)) {
            return json{{"x", to_json(x)}, {"a", to_json(a)}, {"b", to_json(b)}};
        }
        return std::nullopt;
    }));

    out.push_back(run_check("power-inner-products", "<x,y>^j = <x^j, y^j> / j!, j <= 5", 3, opt,
                            [&](RationalSampler &rs, long &cases) -> std::optional<json> {
        const OneParticleVector x = rs.vector(K);
        const OneParticleVector y = rs.vector(K);
        for (int j = 0; j <= 5; ++j) {
            ++cases;
            if (pow(inner(x, y), static_cast<unsigned>(j))
                != inner(power(x, j), power(y, j)) / factorial(static_cast<unsigned>(j))) {
                return json{{"x", to_json(x)}, {"y", to_json(y)}, {"j", j}};
            }
        }
        return std::nullopt;
    }));

    out.push_back(run_check("power-annihilation", "(x^n)* e^w = <x,w>^n e^w at degree cutoff", 4, opt,
                            [&](RationalSampler &rs, long &cases) -> std::optional<json> {
        const OneParticleVector x = rs.vector(K);
        const OneParticleVector w = rs.vector(K);
        for (int n = 0; n <= D; ++n) {
            ++cases;
            if (power_annihilate_coherent(x, n, w, D)
                != pow(inner(x, w), static_cast<unsigned>(n)) * coherent(w, D - n)) {
                return json{{"x", to_json(x)}, {"w", to_json(w)}, {"n", n}, {"D", D}};
            }
        }
        return std::nullopt;
    }));

    out.push_back(run_check("multiplicability", "<e^u, f g> = <e^u, f> <e^u, g>", 5, opt,
                            [&](RationalSampler &rs, long &cases) -> std::optional<json> {
        const OneParticleVector u = rs.vector(K);
        const int df = rs.uniform(0, D);
        const FockVector f = rs.fock_vector(K, df, 3);
        const FockVector g = rs.fock_vector(K, D - f.degree(), 3);
        ++cases;
        if (!check_multiplicability(u, f, g, D)) {
            return json{{"u", to_json(u)}, {"f", to_json(f)}, {"g", to_json(g)}, {"D", D}};
        }
        return std::nullopt;
    }));

    out.push_back(run_check("exponential-annihilation", "e^{a(w)} e^v = e^{<w,v>} e^v, degree by degree", 6, opt,
                            [&](RationalSampler &rs, long &cases) -> std::optional<json> {
        const OneParticleVector w = rs.vector(K);
        const OneParticleVector v = rs.vector(K);
        const FockVector result = exp_annihilate(w, coherent(v, D));
        const Scalar c = inner(w, v);
        for (int j = 0; j <= D; ++j) {
            ++cases;
            const FockVector expected = power(v, j) * (exp_partial_sum(c, D - j) / factorial(static_cast<unsigned>(j)));
            if (result.component(j) != expected) {
                return json{{"w", to_json(w)}, {"v", to_json(v)}, {"degree", j}, {"D", D}};
            }
        }
        return std::nullopt;
    }));

    out.push_back(run_check("lemma-term-by-term", "[z^w] P(z)^m / m! = sum over (p,q) of order m, weight w", 7, opt,
                            [&](RationalSampler &rs, long &cases) -> std::optional<json> {
        const OneParticleVector u = rs.vector(K);
        const OneParticleVector v = rs.vector(K);
        for (int m = 0; m <= M; ++m) {
            ++cases;
            if (!verify_lemma_term(u, v, m, basis)) {
                return json{{"u", to_json(u)}, {"v", to_json(v)}, {"m", m}};
            }
        }
        return std::nullopt;
    }));

    std::vector<SchurOperator> operators;
    const long span = static_cast<long>(K) * M;
    for (long w = -span; w <= span; ++w) {
        operators.push_back(schur_terms(w, opt.cutoffs));
    }

    out.push_back(run_check("operator-vs-generating-function", "<e^u, S_w e^v> (Fock route) = degree-matched expansion", 8, opt,
                            [&](RationalSampler &rs, long &cases) -> std::optional<json> {
        const OneParticleVector u = rs.vector(K);
        const OneParticleVector v = rs.vector(K);
        const FockVector eu = coherent(u, D);
        const FockVector ev = coherent(v, D);
        for (const auto &op : operators) {
            ++cases;
            if (inner(eu, apply_schur(op, ev, basis, D)) != matrix_element_degree_matched(u, v, op.w, basis, opt.cutoffs)) {
                return json{{"u", to_json(u)}, {"v", to_json(v)}, {"w", op.w}};
            }
        }
        return std::nullopt;
    }));

    out.push_back(run_check("theorem-reduction", "<u^k, S_w v^j> = k! j! [t^k s^j z^w] closed form, k + j <= M", 9, opt,
                            [&](RationalSampler &rs, long &cases) -> std::optional<json> {
        const OneParticleVector u = rs.vector(K);
        const OneParticleVector v = rs.vector(K);
        for (int k = 0; k <= D; ++k) {
            for (int j = 0; j <= D && k + j <= M; ++j) {
                const FockVector uk = power(u, k);
                const FockVector vj = power(v, j);
                for (const auto &op : operators) {
                    ++cases;
                    if (power_matrix_element(u, k, v, j, op.w, basis, opt.cutoffs)
                        != inner(uk, apply_schur(op, vj, basis, D))) {
                        return json{{"u", to_json(u)}, {"v", to_json(v)}, {"k", k}, {"j", j}, {"w", op.w}};
                    }
                }
            }
        }
        return std::nullopt;
    }));

    return out;
}

} // namespace fockvx
