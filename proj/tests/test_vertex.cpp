#include <doctest.h>

#include <stdexcept>

#include <fockvx/random.hpp>
#include <fockvx/vertex.hpp>

#include "oracles.hpp"

using namespace fockvx;

namespace
{

Scalar q(long n, long d = 1)
{
    return Scalar(Rational(n, d));
}

FockVector e(int mode, int exp = 1)
{
    return FockVector::monomial(MultiIndex{{mode, exp}});
}

// f_1 = (3/5, 4/5), f_2 = (-4/5, 3/5); g_1 = e_2, g_2 = i e_1
BasisConfig rotated_basis()
{
    Matrix f{{q(3, 5), q(4, 5)}, {q(-4, 5), q(3, 5)}};
    Matrix g{{q(0), q(1)}, {Scalar::i(), q(0)}};
    return BasisConfig(f, g);
}

} // namespace

TEST_CASE("schur_terms examples")
{
    const SchurOperator s0 = schur_terms(0, Cutoffs{3, 0, 3});
    REQUIRE(s0.terms.size() == 1);
    CHECK(s0.terms[0] == SchurTerm{MultiIndex{}, MultiIndex{}, q(1)});

    const SchurOperator s1 = schur_terms(1, Cutoffs{1, 1, 3});
    REQUIRE(s1.terms.size() == 1);
    CHECK(s1.terms[0] == SchurTerm{MultiIndex{{1, 1}}, MultiIndex{}, q(1)});

    CHECK(schur_terms(5, Cutoffs{2, 1, 3}).terms.empty());
    CHECK_THROWS_AS(schur_terms(0, Cutoffs{0, 1, 1}), config_error);
}

TEST_CASE("schur term coefficients are 1/(p! q!) and follow enumeration order")
{
    const Cutoffs c{3, 4, 4};
    for (long w = -12; w <= 12; ++w) {
        const SchurOperator op = schur_terms(w, c);
        std::size_t i = 0;
        for (int m = 0; m <= c.order; ++m) {
            for (const auto &pq : enumerate_pq(m, w, c.modes)) {
                REQUIRE(i < op.terms.size());
                CHECK(op.terms[i].p == pq.p);
                CHECK(op.terms[i].q == pq.q);
                CHECK(op.terms[i].coeff * multiindex_factorial(pq.p) * multiindex_factorial(pq.q) == q(1));
                ++i;
            }
        }
        CHECK(i == op.terms.size());
    }
}

TEST_CASE("apply_schur examples")
{
    const BasisConfig id = BasisConfig::identity(2);
    CHECK(apply_schur(schur_terms(0, Cutoffs{2, 0, 3}), vacuum(), id, 3) == vacuum());
    CHECK(apply_schur(schur_terms(1, Cutoffs{2, 1, 3}), vacuum(), id, 3) == e(1));
    CHECK(apply_schur(schur_terms(-1, Cutoffs{2, 1, 3}), vacuum(), id, 3).is_zero());
    CHECK_THROWS_AS(apply_schur(schur_terms(0, Cutoffs{2, 0, 3}), e(1, 4), id, 3), std::invalid_argument);

    // S_0 at order 2 on e_1: 1 + f_1 g_1* + f_2 g_2* -> e_1 + e_1 + 0
    CHECK(apply_schur(schur_terms(0, Cutoffs{2, 2, 3}), e(1), id, 3) == Scalar(2) * e(1));
    // S_{-1} at order 1 on e_1^2: g_1* e_1^2 = 2 e_1
    CHECK(apply_schur(schur_terms(-1, Cutoffs{2, 1, 3}), e(1, 2), id, 3) == Scalar(2) * e(1));
}

TEST_CASE("apply_schur output respects the degree cutoff")
{
    const BasisConfig id = BasisConfig::identity(2);
    const FockVector out = apply_schur(schur_terms(2, Cutoffs{2, 4, 2}), vacuum(), id, 2);
    // S_2 on vacuum: f_2 + f_1^2 / 2, both of degree <= 2
    CHECK(out == e(2) + q(1, 2) * e(1, 2));
    CHECK(apply_schur(schur_terms(2, Cutoffs{2, 4, 1}), vacuum(), id, 1) == e(2));
}

TEST_CASE("weight grading and particle-number bookkeeping with F = G = I")
{
    const BasisConfig id = BasisConfig::identity(3);
    const Cutoffs c{3, 3, 4};
    for (long w = -6; w <= 6; ++w) {
        const SchurOperator op = schur_terms(w, c);
        for (const MultiIndex &b : {MultiIndex{}, MultiIndex{{1, 2}}, MultiIndex{{1, 1}, {3, 1}}, MultiIndex{{2, 2}}}) {
            const FockVector out = apply_schur(op, FockVector::monomial(b), id, 4);
            for (const auto &[mono, coeff] : out.terms()) {
                CHECK(mono.weight() == b.weight() + w);
            }
        }
        for (const auto &term : op.terms) {
            SchurOperator single{w, c, {term}};
            const FockVector out = apply_schur(single, FockVector::monomial(MultiIndex{{1, 2}, {2, 1}, {3, 1}}), id, 8);
            for (const auto &[mono, coeff] : out.terms()) {
                CHECK(mono.degree() == 4 + term.p.degree() - term.q.degree());
            }
        }
    }
}

TEST_CASE("matrix_element_closed examples")
{
    const BasisConfig id = BasisConfig::identity(2);
    const OneParticleVector zero(2);
    const LaurentSlice vac = matrix_element_closed(zero, zero, id, Cutoffs{2, 3, 3});
    CHECK(vac.coeffs == LaurentPolynomial(q(1)));

    const LaurentSlice up = matrix_element_closed(id.f(1), zero, id, Cutoffs{2, 1, 3});
    CHECK(up.coeffs.coeffs() == std::map<int, Scalar>{{0, q(1)}, {1, q(1)}});

    const LaurentSlice down = matrix_element_closed(zero, id.g(1), id, Cutoffs{2, 1, 3});
    CHECK(down.coeffs.coeffs() == std::map<int, Scalar>{{-1, q(1)}, {0, q(1)}});

    // u = v = e_1, M = 2: P = z + 1/z, exp_2(P) = 1 + z + 1/z + (z^2 + 2 + z^-2)/2, E_2(1) = 5/2
    const LaurentSlice both = matrix_element_closed(id.f(1), id.g(1), id, Cutoffs{2, 2, 3});
    CHECK(both.coeffs.coeffs()
          == std::map<int, Scalar>{{-2, q(5, 4)}, {-1, q(5, 2)}, {0, q(5)}, {1, q(5, 2)}, {2, q(5, 4)}});

    CHECK_THROWS_AS(matrix_element_closed(zero, zero, id, Cutoffs{3, 1, 1}), config_error);
}

TEST_CASE("closed form support stays within [-K M, K M]")
{
    RationalSampler rs(21);
    const BasisConfig id = BasisConfig::identity(3);
    for (int M = 0; M <= 4; ++M) {
        const LaurentSlice s = matrix_element_closed(rs.vector(3), rs.vector(3), id, Cutoffs{3, M, 2});
        for (const auto &[w, c] : s.coeffs.coeffs()) {
            CHECK(std::abs(w) <= 3 * M);
        }
    }
}

TEST_CASE("matrix_element_expansion examples")
{
    const BasisConfig id = BasisConfig::identity(2);
    RationalSampler rs(22);
    const OneParticleVector u = rs.vector(2);
    const OneParticleVector v = rs.vector(2);
    CHECK(matrix_element_expansion(u, v, 0, 0, id) == q(1));
    CHECK(matrix_element_expansion(u, v, 1, 0, id).is_zero());
    CHECK(matrix_element_expansion(u, v, -3, 0, id).is_zero());
    CHECK(matrix_element_expansion(id.f(1), id.g(1), 0, 2, id) == q(1));
}

TEST_CASE("lemma identity term by term")
{
    const BasisConfig id = BasisConfig::identity(3);
    RationalSampler rs(23);
    const OneParticleVector u = rs.vector(3);
    const OneParticleVector v = rs.vector(3);
    CHECK(verify_lemma_term(u, v, 0, id));
    for (int m = 1; m <= 3; ++m) {
        CHECK(verify_lemma_term(OneParticleVector(3), OneParticleVector(3), m, id));
    }
    CHECK(verify_lemma_term(u, v, 4, id));

    // the expansion side against the written-out multinomial sum
    const VertexPairings pr = vertex_pairings(u, v, id);
    for (int m = 0; m <= 4; ++m) {
        const auto brute = oracle::multinomial_power(pr.creation, pr.annihilation, m);
        for (long w = -3 * m; w <= 3 * m; ++w) {
            const auto it = brute.find(static_cast<int>(w));
            const Scalar expected = it == brute.end() ? Scalar{} : it->second;
            CHECK(matrix_element_expansion(u, v, w, m, id) == expected);
        }
    }
    CHECK_THROWS_AS(verify_lemma_term(u, v, -1, id), std::invalid_argument);
}

TEST_CASE("pairings follow the antilinear-first convention")
{
    const BasisConfig id = BasisConfig::identity(1);
    const OneParticleVector u{1, {{1, Scalar::i()}}};
    const OneParticleVector v{1, {{1, Scalar(2, 1)}}};
    const VertexPairings pr = vertex_pairings(u, v, id);
    CHECK(pr.creation[0] == Scalar(0, -1));  // <u, f_1> = conj(i)
    CHECK(pr.annihilation[0] == Scalar(2, 1)); // <g_1, v>
    CHECK(pr.overlap == Scalar(0, -1) * Scalar(2, 1));
    CHECK_THROWS_AS(vertex_pairings(OneParticleVector::basis(2, 2), v, id), std::out_of_range);
}

TEST_CASE("elementary Schur polynomials")
{
    const auto x = [](int k) { return Polynomial::variable(k); };
    const auto series = oracle::exp_product(3, 3);
    CHECK(series[2] == x(2) + q(1, 2) * x(1) * x(1));
    CHECK(series[3] == x(3) + x(1) * x(2) + q(1, 6) * x(1) * x(1) * x(1));

    CHECK(elementary_schur(0, 3) == Polynomial::one());
    CHECK(elementary_schur(1, 3) == x(1));
    CHECK(elementary_schur(2, 3) == series[2]);
    CHECK(elementary_schur(3, 3) == series[3]);
    // with K = 2 the x_3 term is cut off
    CHECK(elementary_schur(3, 2) == x(1) * x(2) + q(1, 6) * pow(x(1), 3));

    for (int K = 1; K <= 4; ++K) {
        const auto full = oracle::exp_product(K, 7);
        for (int m = 0; m <= 7; ++m) {
            CHECK(elementary_schur(m, K) == full[static_cast<std::size_t>(m)]);
        }
    }
    CHECK_THROWS_AS(elementary_schur(-1, 2), std::invalid_argument);
}

TEST_CASE("elementary Schur polynomials as vacuum matrix elements")
{
    // <e^u, S_m phi> with the annihilation side off is S_m(x_k = <u, f_k>)
    const BasisConfig id = BasisConfig::identity(3);
    RationalSampler rs(24);
    const OneParticleVector u = rs.vector(3);
    for (int m = 0; m <= 5; ++m) {
        const Polynomial s = elementary_schur(m, 3);
        Scalar value;
        for (const auto &[p, c] : s.terms()) {
            Scalar mono(1);
            for (const auto &[k, exp] : p.entries()) {
                mono *= pow(inner(u, id.f(k)), static_cast<unsigned>(exp));
            }
            value += c * mono;
        }
        const Cutoffs cut{3, 5, 5};
        CHECK(inner(coherent(u, 5), apply_schur(schur_terms(m, cut), vacuum(), id, 5)) == value);
    }
}

TEST_CASE("power_matrix_element examples")
{
    const BasisConfig id = BasisConfig::identity(2);
    const Cutoffs c{2, 4, 3};
    const OneParticleVector zero(2);
    CHECK(power_matrix_element(zero, 0, zero, 0, 0, id, c) == q(1));
    CHECK(power_matrix_element(zero, 0, zero, 0, 1, id, c).is_zero());

    const OneParticleVector f1 = id.f(1);
    CHECK(power_matrix_element(f1, 1, zero, 0, 1, id, c) == q(1));
    CHECK(inner(embed(f1), apply_schur(schur_terms(1, c), vacuum(), id, 3)) == q(1));

    CHECK(power_matrix_element(f1, 2, zero, 0, 2, id, c) == q(1));
    CHECK(inner(power(f1, 2), apply_schur(schur_terms(2, c), vacuum(), id, 3)) == q(1));
    CHECK_THROWS_AS(power_matrix_element(f1, -1, zero, 0, 0, id, c), std::invalid_argument);
}

TEST_CASE("oracle equivalence and theorem reduction in a non-identity basis")
{
    const BasisConfig basis = rotated_basis();
    const Cutoffs c{2, 4, 3};
    RationalSampler rs(25);
    for (int t = 0; t < 2; ++t) {
        const OneParticleVector u = rs.vector(2);
        const OneParticleVector v = rs.vector(2);
        const FockVector eu = coherent(u, c.degree);
        const FockVector ev = coherent(v, c.degree);
        for (long w = -8; w <= 8; ++w) {
            const SchurOperator op = schur_terms(w, c);
            CHECK(inner(eu, apply_schur(op, ev, basis, c.degree)) == matrix_element_degree_matched(u, v, w, basis, c));
            for (int k = 0; k <= 2; ++k) {
                for (int j = 0; j <= 2; ++j) {
                    CHECK(power_matrix_element(u, k, v, j, w, basis, c)
                          == inner(power(u, k), apply_schur(op, power(v, j), basis, c.degree)));
                }
            }
        }
        for (int m = 0; m <= 4; ++m) {
            CHECK(verify_lemma_term(u, v, m, basis));
        }
    }
}

TEST_CASE("basis validation")
{
    CHECK_NOTHROW(rotated_basis());
    Matrix bad{{q(1), q(1)}, {q(0), q(1)}};
    CHECK_THROWS_AS(BasisConfig(bad, identity_matrix(2)), config_error);
    CHECK(first_non_orthonormal_row(bad) == 0);
    Matrix bad2{{q(1), q(0)}, {q(1), q(0)}};
    CHECK(first_non_orthonormal_row(bad2) == 1);
    CHECK_THROWS_AS(BasisConfig(identity_matrix(2), identity_matrix(3)), config_error);
    CHECK(BasisConfig::identity(3).is_identity());
    CHECK_FALSE(rotated_basis().is_identity());
}
