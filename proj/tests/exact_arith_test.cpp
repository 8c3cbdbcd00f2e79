#include <gtest/gtest.h>

#include <random>

#include "oracle.hpp"
#include "weilalg/error.hpp"
#include "weilalg/exact_arith.hpp"
#include "weilalg/factor.hpp"

using namespace weilalg;

namespace {

Polynomial T() { return Polynomial::monomial(1, 1); }
Rational q(long a, long b = 1) { return make_rational(a, b); }

Polynomial random_poly(std::mt19937_64& rng, int degree, int bound) {
    std::uniform_int_distribution<long> dist(-bound, bound);
    std::vector<Rational> c(degree + 1);
    for (auto& x : c) x = dist(rng);
    c[degree] = 1;
    return Polynomial(c);
}

}  // namespace

TEST(Factor, SplitsRationalRoots) {
    auto f = factor_rational_poly({2, -3, 1});
    ASSERT_EQ(f.factors.size(), 2u);
    EXPECT_EQ(f.factors[0].poly, (Polynomial{-1, 1}));
    EXPECT_EQ(f.factors[1].poly, (Polynomial{-2, 1}));
    EXPECT_EQ(f.unit, 1);
}

TEST(Factor, IrreducibleQuadratic) {
    // Discriminant -7: no rational root, so irreducible.
    Polynomial p{2, -1, 1};
    Rational disc = p.coeff(1) * p.coeff(1) - 4 * p.coeff(0) * p.coeff(2);
    EXPECT_EQ(disc, -7);
    auto f = factor_rational_poly(p);
    ASSERT_EQ(f.factors.size(), 1u);
    EXPECT_EQ(f.factors[0].poly, p);
    EXPECT_EQ(f.factors[0].multiplicity, 1u);
}

TEST(Factor, RepeatedRoot) {
    auto f = factor_rational_poly({1, -2, 1});
    ASSERT_EQ(f.factors.size(), 1u);
    EXPECT_EQ(f.factors[0].poly, (Polynomial{-1, 1}));
    EXPECT_EQ(f.factors[0].multiplicity, 2u);
}

TEST(Factor, ZeroThrows) {
    try {
        factor_rational_poly(Polynomial());
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), Errc::ZeroPolynomial);
    }
}

TEST(Factor, SwinnertonDyerStyleRecombination) {
    // x^4 - 10x^2 + 1 is irreducible but splits modulo every prime.
    EXPECT_TRUE(is_irreducible({1, 0, -10, 0, 1}));
    // Cyclotomic Phi_12 * Phi_8 products factor back.
    Polynomial a{1, 0, -1, 0, 1}, b{1, 0, 0, 0, 1};
    auto f = factor_rational_poly(a * b * Polynomial{3, 2});
    ASSERT_EQ(f.factors.size(), 3u);
    const Polynomial expected = a * b * Polynomial{3, 2};
    EXPECT_EQ(f.expand(), expected);
}

TEST(Factor, RandomProductsReproduceInput) {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 60; ++trial) {
        Polynomial prod = Polynomial::constant(q(std::uniform_int_distribution<long>(1, 9)(rng), 7));
        int pieces = 1 + trial % 4;
        for (int i = 0; i < pieces; ++i) {
            int deg = 1 + static_cast<int>(rng() % 4);
            Polynomial f = random_poly(rng, deg, 6);
            if (f.constant_term() == 0) f += Polynomial{1};
            prod = prod * f;
            if (rng() % 3 == 0) prod = prod * f;
        }
        auto fac = factor_rational_poly(prod);
        EXPECT_EQ(fac.expand(), prod);
        for (std::size_t i = 0; i < fac.factors.size(); ++i) {
            EXPECT_TRUE(fac.factors[i].poly.is_monic());
            EXPECT_TRUE(is_irreducible(fac.factors[i].poly));
            if (i > 0) EXPECT_TRUE(canonical_less(fac.factors[i - 1].poly, fac.factors[i].poly));
        }
    }
}

TEST(Sturm, Examples) {
    EXPECT_EQ(sturm_count({-2, 0, 1}, q(-2), q(2)), 2u);
    EXPECT_EQ(sturm_count({1, 0, 1}, std::nullopt, std::nullopt), 0u);
    // Roots -1, 0, 1; (-1/2, 2] contains 0 and 1.
    Polynomial p{0, -1, 0, 1};
    std::size_t direct = 0;
    for (long r : {-1L, 0L, 1L})
        if (q(r) > q(-1, 2) && q(r) <= q(2)) ++direct;
    EXPECT_EQ(sturm_count(p, q(-1, 2), q(2)), direct);
    EXPECT_EQ(direct, 2u);
}

TEST(Sturm, HalfOpenInterval) {
    Polynomial p{-2, 1};
    EXPECT_EQ(sturm_count(p, q(1), q(2)), 1u);
    EXPECT_EQ(sturm_count(p, q(2), q(3)), 0u);
}

TEST(Sturm, RejectsNonSquarefree) {
    try {
        sturm_count({1, -2, 1}, std::nullopt, std::nullopt);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), Errc::NotSquarefree);
    }
}

TEST(Sturm, AgreesWithNumericRootPairing) {
    std::mt19937_64 rng(5);
    int checked = 0;
    while (checked < 200) {
        int deg = 1 + static_cast<int>(rng() % 8);
        Polynomial p = random_poly(rng, deg, 9);
        if (!is_squarefree(p)) continue;
        auto rs = oracle::roots(p);
        bool separated = true;
        std::size_t nonreal = 0;
        for (std::size_t i = 0; i < rs.size(); ++i) {
            double im = std::abs(rs[i].imag());
            if (im > 1e-9 && im < 1e-5) separated = false;
            if (im >= 1e-5) ++nonreal;
            for (std::size_t j = i + 1; j < rs.size(); ++j)
                if (std::abs(rs[i] - rs[j]) < 1e-9) separated = false;
        }
        if (!separated) continue;
        ASSERT_EQ(nonreal % 2, 0u);
        EXPECT_EQ(sturm_count(p, std::nullopt, std::nullopt), deg - 2 * (nonreal / 2)) << p;
        ++checked;
    }
}

TEST(Crt, Examples) {
    EXPECT_EQ(crt_polynomials({{{1}, {-1, 1}}, {{}, {-2, 1}}}), (Polynomial{2, -1}));
    EXPECT_EQ(crt_polynomials({{{1}, {-1, 1}}}), (Polynomial{1}));
    auto r = crt_polynomials({{{1}, {-1, 1}}, {{}, {-2, 1}}, {{}, {-3, 1}}});
    EXPECT_EQ(r, oracle::lagrange({q(1), q(2), q(3)}, {q(1), q(0), q(0)}));
    EXPECT_EQ(r, Polynomial({6, -5, 1}).scaled(q(1, 2)));
}

TEST(Crt, ReportsOffendingPair) {
    try {
        crt_polynomials({{{1}, {-1, 1}}, {{}, {-2, 1}}, {{}, {2, -3, 1}}});
        FAIL();
    } catch (const NotCoprimeError& e) {
        EXPECT_EQ(e.first(), 0u);
        EXPECT_EQ(e.second(), 2u);
    }
}

TEST(Crt, ResiduesRecovered) {
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 30; ++trial) {
        std::vector<Congruence> pairs;
        Polynomial seen{1};
        while (pairs.size() < 3) {
            Polynomial m = random_poly(rng, 1 + static_cast<int>(rng() % 3), 5);
            if (gcd(m, seen).degree() > 0) continue;
            seen = seen * m;
            pairs.push_back({random_poly(rng, static_cast<int>(rng() % 5), 5), m});
        }
        auto r = crt_polynomials(pairs);
        for (const auto& c : pairs) EXPECT_EQ(r % c.modulus, c.residue % c.modulus);
        EXPECT_LT(r.degree(), seen.degree());
    }
}

TEST(Reciprocal, Examples) {
    EXPECT_EQ(reciprocal_transform({1, -1, 2}, 2), (Polynomial{2, -1, 1}));
    EXPECT_EQ(reciprocal_transform({1, -2}, 1), (Polynomial{-2, 1}));
    Polynomial l = Polynomial{1, -3} * Polynomial{1, -3};
    EXPECT_EQ(l, (Polynomial{1, -6, 9}));
    EXPECT_EQ(reciprocal_transform(l, 2), Polynomial({-3, 1}) * Polynomial({-3, 1}));
}

TEST(Reciprocal, BadConstantTerm) {
    try {
        reciprocal_transform({2, 1}, 1);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), Errc::BadConstantTerm);
    }
}

TEST(Reciprocal, RoundTrip) {
    std::mt19937_64 rng(9);
    for (int i = 0; i < 50; ++i) {
        Polynomial c = random_poly(rng, 1 + static_cast<int>(rng() % 6), 7);
        if (c.constant_term() == 0) continue;
        Polynomial l = to_l_polynomial(c);
        EXPECT_EQ(l.constant_term(), 1);
        Polynomial back = reciprocal_transform(l.scaled(Rational(1) / l.constant_term()), l.degree());
        EXPECT_EQ(back.monic(), c);
    }
}

TEST(Tensor, Examples) {
    EXPECT_EQ(tensor_charpoly({-2, 1}, {-3, 1}), (Polynomial{-6, 1}));
    Polynomial e{2, -1, 1};
    EXPECT_EQ(tensor_charpoly({-1, 1}, e), e);
    EXPECT_EQ(tensor_charpoly(e, {-2, 1}), (Polynomial{8, -2, 1}));
    EXPECT_EQ(oracle::tensor(e, {-2, 1}), (Polynomial{8, -2, 1}));
}

TEST(Tensor, RequiresMonic) {
    try {
        tensor_charpoly({1, 2}, {1, 1});
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), Errc::NotMonic);
    }
}

TEST(Tensor, CommutativeAssociativeAgainstPowerSums) {
    std::mt19937_64 rng(21);
    for (int i = 0; i < 25; ++i) {
        Polynomial a = random_poly(rng, 1 + static_cast<int>(rng() % 3), 4);
        Polynomial b = random_poly(rng, 1 + static_cast<int>(rng() % 3), 4);
        Polynomial c = random_poly(rng, 1 + static_cast<int>(rng() % 2), 4);
        Polynomial ab = tensor_charpoly(a, b);
        EXPECT_EQ(ab, tensor_charpoly(b, a));
        EXPECT_EQ(ab, oracle::tensor(a, b));
        EXPECT_EQ(tensor_charpoly(ab, c), tensor_charpoly(a, tensor_charpoly(b, c)));
        EXPECT_EQ(tensor_charpoly(a, {-1, 1}), a);
    }
}

TEST(Exterior, Examples) {
    EXPECT_EQ(exterior_charpoly({2, -3, 1}, 2), (Polynomial{-2, 1}));
    Polynomial e{2, -1, 1};
    EXPECT_EQ(exterior_charpoly(e, 1), e);
    Polynomial p = e * Polynomial{-1, 1};
    EXPECT_EQ(exterior_charpoly(p, 2), Polynomial({-2, 1}) * e);
}

TEST(Exterior, TopPowerIsDeterminant) {
    std::mt19937_64 rng(4);
    for (int i = 0; i < 20; ++i) {
        int d = 1 + static_cast<int>(rng() % 6);
        Polynomial p = random_poly(rng, d, 5);
        Rational det = (d % 2 == 0) ? p.constant_term() : Rational(-p.constant_term());
        EXPECT_EQ(exterior_charpoly(p, d), Polynomial::linear_root(det));
    }
}

TEST(Exterior, Errors) {
    try {
        exterior_charpoly({1, 1}, 2);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), Errc::KTooLarge);
    }
    Polynomial big = Polynomial::monomial(1, 16) + Polynomial{1};
    try {
        exterior_charpoly(big, 8);  // C(16,8) = 12870 > 4096
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), Errc::DimensionTooLarge);
    }
}

TEST(Charpoly, ElementOfQuotientAlgebra) {
    // alpha root of T^2 - T + 2; alpha + 2/alpha = alpha + alphabar = 1 twice.
    Polynomial p{2, -1, 1};
    Polynomial inv2{1, -1};  // 2/alpha = 1 - alpha
    EXPECT_EQ(charpoly_of_element(p, T() + inv2), Polynomial({-1, 1}).pow(2));
}
