#include <gtest/gtest.h>

#include <random>

#include "oracle.hpp"
#include "weilalg/error.hpp"
#include "weilalg/exact_arith.hpp"
#include "weilalg/factor.hpp"
#include "weilalg/weil.hpp"

using namespace weilalg;

namespace {

Rational q(long a, long b = 1) { return make_rational(a, b); }
PrimePower pp(long q) { return PrimePower::from_q(q); }

NotWeilReason reason_of(const Polynomial& p, long base) {
    try {
        verify_weil(p, pp(base));
    } catch (const NotWeilError& e) {
        return e.reason();
    }
    ADD_FAILURE() << p << " accepted";
    return NotWeilReason::BadDenominator;
}

// Weight by floating roots; -1000 when the absolute values disagree.
int numeric_weight(const Polynomial& p, long base) {
    auto rs = oracle::roots(p);
    double w0 = 2 * std::log(std::abs(rs[0])) / std::log(static_cast<double>(base));
    long w = std::lround(w0);
    for (auto r : rs)
        if (std::abs(2 * std::log(std::abs(r)) / std::log(static_cast<double>(base)) - w) > 1e-7) return -1000;
    return static_cast<int>(w);
}

TateStructure structure(long base, std::vector<std::pair<Polynomial, unsigned>> parts) {
    TateStructure v{pp(base), {}};
    for (auto& [f, m] : parts) v.parts.push_back({WeilOrbit::make(f, pp(base)), m});
    return v;
}

// Random effective structures from elliptic-type factors and rational q-powers.
TateStructure random_structure(std::mt19937_64& rng, long base, std::size_t max_orbits) {
    Polynomial charpoly{1};
    std::size_t n = 1 + rng() % max_orbits;
    for (std::size_t i = 0; i < n; ++i) {
        if (rng() % 3 == 0) {
            long k = static_cast<long>(rng() % 3);
            Integer qk;
            mpz_pow_ui(qk.get_mpz_t(), Integer(base).get_mpz_t(), k);
            charpoly = charpoly * Polynomial::linear_root(Rational(qk));
        } else {
            long bound = static_cast<long>(std::floor(2 * std::sqrt(static_cast<double>(base))));
            long a = static_cast<long>(rng() % (2 * bound + 1)) - bound;
            charpoly = charpoly * Polynomial{base, -a, 1};
        }
    }
    return TateStructure::from_charpoly(charpoly, pp(base));
}

}  // namespace

TEST(VerifyWeil, Examples) {
    EXPECT_EQ(verify_weil({-1, 1}, pp(5)), 0);
    EXPECT_EQ(verify_weil({2, -1, 1}, pp(2)), 1);
    EXPECT_EQ(numeric_weight({2, -1, 1}, 2), 1);
    EXPECT_EQ(reason_of({-3, 1}, 5), NotWeilReason::ConstantTermValuation);
}

TEST(VerifyWeil, AdversarialSet) {
    EXPECT_EQ(reason_of({3, -1, 1}, 2), NotWeilReason::ConstantTermValuation);
    // Real roots 2 +- sqrt 2 with product 2: beta = 4 > 2 sqrt 2.
    EXPECT_EQ(reason_of({2, -4, 1}, 2), NotWeilReason::RootBound);
    // Roots 1 and 3 over q = 3.
    EXPECT_EQ(reason_of({3, -4, 1}, 3), NotWeilReason::RootBound);
    EXPECT_EQ(reason_of(Polynomial{1, 1, 1} * Polynomial{4, 1, 1}, 2), NotWeilReason::NotTotallyReal);
    EXPECT_EQ(reason_of(Polynomial({q(-1, 3), 1}), 2), NotWeilReason::BadDenominator);
}

TEST(VerifyWeil, NegativeWeight) {
    EXPECT_EQ(verify_weil(Polynomial({q(-1, 2), 1}), pp(2)), -2);
    EXPECT_EQ(verify_weil(Polynomial({q(1, 2), q(-1, 2), 1}), pp(2)), -1);
}

TEST(VerifyWeil, QuadraticsAgainstNumericRoots) {
    for (long base : {2L, 3L, 4L, 5L, 7L, 8L, 9L}) {
        for (long a = -12; a <= 12; ++a) {
            for (long c : {base, base * base, 1L, -base}) {
                Polynomial p{c, -a, 1};
                int expected = numeric_weight(p, base);
                bool accepted = true;
                int got = 0;
                try {
                    got = verify_weil(p, pp(base));
                } catch (const NotWeilError&) {
                    accepted = false;
                }
                if (expected == -1000) {
                    EXPECT_FALSE(accepted) << p << " over " << base;
                } else {
                    EXPECT_TRUE(accepted) << p << " over " << base;
                    if (accepted) EXPECT_EQ(got, expected) << p;
                }
            }
        }
    }
}

TEST(Effective, Examples) {
    EXPECT_TRUE(is_effective(WeilOrbit::make({2, -1, 1}, pp(2))));
    auto half = WeilOrbit::make(Polynomial({q(-1, 2), 1}), pp(2));
    EXPECT_EQ(half.weight, -2);
    EXPECT_FALSE(is_effective(half));
    EXPECT_TRUE(is_effective(WeilOrbit::make({-2, 1}, pp(2))));
}

TEST(TateTwist, Examples) {
    auto o = tate_twist(WeilOrbit::make({-3, 1}, pp(3)), 1);
    EXPECT_EQ(o.min_poly, (Polynomial{-1, 1}));
    EXPECT_EQ(o.weight, 0);
    auto e = WeilOrbit::make({2, -1, 1}, pp(2));
    EXPECT_EQ(tate_twist(e, 0), e);
    auto t = tate_twist(e, 1);
    EXPECT_EQ(t.min_poly, Polynomial({q(1, 2), q(-1, 2), 1}));
    EXPECT_EQ(t.weight, -1);
    EXPECT_EQ(verify_weil(t.min_poly, pp(2)), -1);
}

TEST(TateTwist, Inverse) {
    std::mt19937_64 rng(1);
    for (int i = 0; i < 40; ++i) {
        auto v = random_structure(rng, std::vector<long>{2, 3, 4, 5, 9}[rng() % 5], 4);
        long r = static_cast<long>(rng() % 5) - 2;
        EXPECT_EQ(tate_twist(tate_twist(v, r), -r), v);
    }
}

TEST(Coniveau, Examples) {
    auto h1 = structure(2, {{{2, -1, 1}, 1}});
    EXPECT_EQ(coniveau_sub(h1, 1).dimension(), 0u);
    EXPECT_EQ(coniveau_sub(h1, 0), h1);
    auto tq = structure(3, {{{-9, 1}, 3}});
    EXPECT_EQ(coniveau_sub(tq, 2), tq);
    try {
        coniveau_sub(structure(2, {{Polynomial({q(-1, 2), 1}), 1}}), 0);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), Errc::NotEffectiveInput);
    }
}

TEST(Coniveau, NestedAndMaximal) {
    std::mt19937_64 rng(2);
    for (int i = 0; i < 60; ++i) {
        long base = std::vector<long>{2, 3, 4, 5, 8, 9}[rng() % 6];
        auto v = random_structure(rng, base, 4);
        for (long r = 0; r <= 3; ++r) {
            auto a = coniveau_sub(v, r), b = coniveau_sub(v, r + 1);
            for (const auto& part : b.parts)
                EXPECT_NE(std::find(a.parts.begin(), a.parts.end(), part), a.parts.end());
            // Exhaustive search over sub-multisets for the largest effective twist.
            const std::size_t n = v.parts.size();
            unsigned best = 0;
            std::vector<unsigned> counts(n, 0);
            for (;;) {
                bool ok = true;
                unsigned dim = 0;
                for (std::size_t j = 0; j < n; ++j) {
                    if (counts[j] == 0) continue;
                    dim += counts[j] * v.parts[j].orbit.degree();
                    if (!is_effective(tate_twist(v.parts[j].orbit, r))) ok = false;
                }
                if (ok) best = std::max(best, dim);
                std::size_t j = 0;
                while (j < n && counts[j] == v.parts[j].multiplicity) counts[j++] = 0;
                if (j == n) break;
                ++counts[j];
            }
            EXPECT_EQ(a.dimension(), best);
        }
    }
}

TEST(Coniveau, MembershipMatchesMinimalSlope) {
    std::mt19937_64 rng(3);
    for (int i = 0; i < 60; ++i) {
        auto v = random_structure(rng, std::vector<long>{2, 3, 4, 7, 9, 16}[rng() % 6], 4);
        for (long r = 0; r <= 2; ++r) {
            auto sub = coniveau_sub(v, r);
            for (const auto& part : v.parts) {
                bool member = std::find(sub.parts.begin(), sub.parts.end(), part) != sub.parts.end();
                EXPECT_EQ(member, newton_polygon(part.orbit.min_poly, v.base).min_slope() >= r);
            }
        }
    }
}

TEST(SlopeFiltration, Examples) {
    EXPECT_EQ(slope_filtration_dim(structure(2, {{{2, -1, 1}, 1}}), 1), 1u);
    auto v = structure(2, {{{2, -1, 1}, 2}, {{-2, 1}, 1}});
    EXPECT_EQ(slope_filtration_dim(v, -1), v.dimension());
    EXPECT_EQ(slope_filtration_dim(structure(2, {{{2, 0, 1}, 1}}), q(1, 2)), 2u);
}

TEST(Restriction, Examples) {
    Polynomial e{2, -1, 1};
    EXPECT_EQ(weil_restriction_charpoly(e, pp(2), 1), e);
    EXPECT_EQ(weil_restriction_charpoly({2, 1}, pp(4), 2), (Polynomial{2, 0, 1}));
    EXPECT_EQ(verify_weil({2, 0, 1}, pp(2)), 1);
    EXPECT_EQ(weil_restriction_charpoly({-9, 1}, pp(9), 2), (Polynomial{-9, 0, 1}));
    EXPECT_THROW(weil_restriction_charpoly({-3, 1}, pp(4), 2), NotWeilError);
}

TEST(Restriction, SlopesInvariant) {
    for (long base : {4L, 9L, 16L, 25L}) {
        auto bq = pp(base);
        auto small = PrimePower::from_pa(bq.p, bq.a / 2);
        long bound = static_cast<long>(2 * std::sqrt(static_cast<double>(base)));
        for (long a = -bound; a <= bound; ++a) {
            Polynomial p{base, -a, 1};
            Polynomial r = weil_restriction_charpoly(p, bq, 2);
            EXPECT_EQ(r.degree(), 4);
            auto before = newton_polygon(p, bq).slots();
            std::vector<Rational> doubled;
            for (auto& s : before) doubled.insert(doubled.end(), 2, s);
            EXPECT_EQ(newton_polygon(r, small).slots(), doubled);
            EXPECT_EQ(verify_weil(r, small), 1);
        }
    }
}

TEST(MthRoots, Examples) {
    auto f = mth_root_factors({-2, 1}, pp(2), 2);
    ASSERT_EQ(f.size(), 1u);
    EXPECT_EQ(f[0].min_poly, (Polynomial{-2, 0, 1}));
    EXPECT_EQ(f[0].weight, 1);

    f = mth_root_factors({-4, 1}, pp(4), 2);
    ASSERT_EQ(f.size(), 2u);
    EXPECT_EQ(f[0].min_poly * f[1].min_poly, (Polynomial{-4, 0, 1}));
    for (auto& o : f) EXPECT_EQ(o.weight, 1);

    f = mth_root_factors({2, -1, 1}, pp(2), 1);
    ASSERT_EQ(f.size(), 1u);
    EXPECT_EQ(f[0].min_poly, (Polynomial{2, -1, 1}));

    try {
        mth_root_factors({-1, 1}, pp(3), 2);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), Errc::WeightMismatch);
    }
}

TEST(MthRoots, ProductReconstructs) {
    // alpha^m for weight-1 alpha has weight m; its m-th roots include alpha.
    int checked = 0;
    for (long base : {2L, 3L, 4L, 5L}) {
        long bound = static_cast<long>(2 * std::sqrt(static_cast<double>(base)));
        for (long a = -bound; a <= bound; ++a) {
            Polynomial e{base, -a, 1};
            for (unsigned m = 1; m <= 4; ++m) {
                Polynomial pm = charpoly_of_element(e, Polynomial::monomial(1, m));
                for (const auto& f : factor_rational_poly(pm).factors) {
                    ASSERT_EQ(verify_weil(f.poly, pp(base)), static_cast<int>(m));
                    auto roots = mth_root_factors(f.poly, pp(base), m);
                    Polynomial prod{1};
                    for (auto& o : roots) {
                        EXPECT_EQ(o.weight, 1);
                        prod = prod * o.min_poly;
                    }
                    EXPECT_EQ(prod, f.poly.compose_power(m));
                    ++checked;
                }
            }
        }
    }
    EXPECT_GT(checked, 100);
}
