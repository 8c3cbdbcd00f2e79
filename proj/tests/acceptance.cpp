// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any FAIL.

#include <chrono>
#include <cmath>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>

#include "corpus.hpp"
#include "oracle.hpp"
#include "weilalg/cli.hpp"
#include "weilalg/endalg.hpp"
#include "weilalg/error.hpp"
#include "weilalg/exact_arith.hpp"
#include "weilalg/padic.hpp"

using namespace weilalg;

namespace {

constexpr double kCoeffTolerance = 1e-6;  // criterion 9, per coefficient
constexpr int kTensorTrials = 500;        // criterion 9
constexpr int kKunnethCases = 20;         // criterion 3
constexpr std::size_t kCorpusSize = 100;  // criteria 5, 7
constexpr double kTimeLimitSeconds = 10.0;

struct Check {
    bool ok = true;
    std::ostringstream why;

    void require(bool cond, const std::string& msg) {
        if (!cond && ok) why << msg;
        ok = ok && cond;
    }
};

PrimePower pp(long q) { return PrimePower::from_q(q); }

std::vector<ZetaData> load_corpus() {
    auto res = cli::ingest_isogeny_file(std::string(WEILALG_DATA_DIR) + "/isogeny_corpus.jsonl");
    std::vector<ZetaData> out;
    for (const auto& d : res.documents) out.push_back(cli::to_zeta(d));
    return out;
}

/// Corpus varieties: the ingested records plus products of elliptic curves.
std::vector<ZetaData> varieties(const std::vector<ZetaData>& corpus) {
    std::vector<ZetaData> out = corpus;
    out.push_back(zeta_product(corpus::curve(2, 1), corpus::curve(2, 1)));
    for (long p : {2L, 3L, 5L}) out.push_back(zeta_product(corpus::curve(p * p, 2 * p), corpus::curve(p * p, 2 * p)));
    return out;
}

std::vector<WeilOrbit> orbits_of(const ZetaData& z) {
    std::vector<WeilOrbit> out;
    for (const auto& [w, part] : motive_of(z).graded_parts)
        for (const auto& op : part.parts) out.push_back(op.orbit);
    return out;
}

// 1
void curve_algebras(Check& c) {
    for (long q : {2L, 3L, 4L, 5L, 7L, 8L, 9L, 11L, 13L, 16L}) {
        const PrimePower b = pp(q);
        for (long a : corpus::elliptic_traces(q)) {
            const std::string tag = " q=" + std::to_string(q) + " a=" + std::to_string(a);
            const auto alg = curve_end_algebra(corpus::elliptic_l(q, a), b);
            c.require(rank_from_algebra(alg) == 2, "rank" + tag);
            c.require(alg.blocks.size() == 1, "block count" + tag);
            if (alg.blocks.size() != 1) continue;
            const CSAData& blk = alg.blocks[0];
            if (a * a == 4 * q) {
                // Quaternion algebra over Q ramified at p and infinity.
                c.require(blk.center_poly == Polynomial({-a / 2, 1}), "center" + tag);
                c.require(blk.index_e == 2 && blk.matrix_size_r == 1, "quaternion e/r" + tag);
                c.require(blk.finite_invariants.size() == 1 && blk.finite_invariants[0].invariant == make_rational(1, 2),
                          "inv_p" + tag);
                c.require(blk.real_places == 1 && blk.real_invariant == make_rational(1, 2), "inv_inf" + tag);
            } else {
                c.require(blk.center_poly == Polynomial({q, -a, 1}), "center" + tag);
                c.require(blk.index_e == 1 && blk.matrix_size_r == 1, "field e/r" + tag);
                c.require(blk.real_places == 0, "imaginary quadratic" + tag);
                for (const auto& f : blk.finite_invariants) c.require(f.invariant == 0, "field invariant" + tag);
            }
        }
    }
}

// 2
void example_sixteen(Check& c) {
    for (long p : {2L, 3L, 5L}) {
        for (long sign : {1L, -1L}) {
            const auto e = corpus::curve(p * p, sign * 2 * p);
            const auto z = zeta_product(e, e);
            c.require(compute_A(z).is_zero(), "A nonzero for p=" + std::to_string(p));
            c.require(witt_vector_rank(z) == 0, "witt rank for p=" + std::to_string(p));
        }
    }
}

// 3
void kunneth(Check& c) {
    std::mt19937_64 rng(20240611);
    const std::vector<long> qs{2, 3, 4, 5, 7, 9};
    for (int t = 0; t < kKunnethCases; ++t) {
        const long q = qs[rng() % qs.size()];
        const auto ts = corpus::elliptic_traces(q);
        ZetaData z = corpus::curve(q, ts[rng() % ts.size()]);
        // Every fifth case is a threefold product.
        const int factors = t % 5 == 4 ? 2 : 1;
        for (int f = 0; f < factors; ++f) z = zeta_product(z, corpus::curve(q, ts[rng() % ts.size()]));
        if (!validate_zeta(z).coprime_ok) {
            --t;
            continue;
        }
        const auto ps = kunneth_idempotents(z);
        Polynomial mod{1};
        for (unsigned i = 0; i < z.l_polys.size(); ++i) mod = mod * z.charpoly(i);
        Polynomial sum;
        for (std::size_t i = 0; i < ps.size(); ++i) {
            c.require((ps[i] * ps[i]) % mod == ps[i] % mod, "idempotency");
            for (std::size_t j = i + 1; j < ps.size(); ++j) c.require(((ps[i] * ps[j]) % mod).is_zero(), "orthogonality");
            sum += ps[i];
        }
        c.require(sum % mod == Polynomial{1}, "completeness");
    }
}

// 4
void pole_triangle(Check& c, const std::vector<ZetaData>& vars) {
    for (const auto& z : vars) {
        const Motive m = motive_of(z);
        for (unsigned r = 0; r <= z.dim_n; ++r) {
            Motive part{z.base, {}};
            if (const auto* h = m.part(static_cast<int>(2 * r))) part.graded_parts.emplace(2 * r, *h);
            const unsigned po = pole_order(z, r);
            c.require(po == hom_from_unit(tate_twist(part, r)), "hom_from_unit");
            c.require(po == k_group_dim(z, 0, static_cast<int>(r)), "k_group_dim");
        }
    }
    c.require(pole_order(zeta_product(corpus::curve(2, 1), corpus::curve(2, 1)), 1) == 4, "E x E pole order");
}

// 5
void reciprocity(Check& c, const std::vector<ZetaData>& corpus, std::size_t& blocks) {
    for (const auto& z : corpus) {
        for (const auto& b : compute_A(z).blocks) {
            ++blocks;
            c.require(b.invariant_sum().get_den() == 1, "A(X) block " + b.center_poly.to_string());
        }
        for (const auto& o : orbits_of(z)) {
            ++blocks;
            const auto b = brauer_block(o, o.weight);
            c.require(b.invariant_sum().get_den() == 1, "orbit block " + o.min_poly.to_string());
        }
    }
}

// 6
bool effective_after_twist(const TateStructure& v, long r) {
    for (const auto& op : tate_twist(v, r).parts)
        if (!is_effective(op.orbit)) return false;
    return true;
}

TateStructure brute_coniveau(const TateStructure& v, long r) {
    TateStructure best{v.base, {}};
    std::vector<unsigned> take(v.parts.size(), 0);
    std::function<void(std::size_t)> rec = [&](std::size_t i) {
        if (i == v.parts.size()) {
            TateStructure sub{v.base, {}};
            for (std::size_t k = 0; k < take.size(); ++k)
                if (take[k] > 0) sub.parts.push_back({v.parts[k].orbit, take[k]});
            if (effective_after_twist(sub, r) && sub.dimension() > best.dimension()) best = sub;
            return;
        }
        for (unsigned k = 0; k <= v.parts[i].multiplicity; ++k) {
            take[i] = k;
            rec(i + 1);
        }
    };
    rec(0);
    return best;
}

void coniveau_bridge(Check& c, const std::vector<ZetaData>& vars) {
    for (const auto& z : vars) {
        for (const auto& [w, part] : motive_of(z).graded_parts) {
            for (long r = 0; r <= w + 1; ++r) {
                const TateStructure sub = coniveau_sub(part, r);
                for (const auto& op : part.parts) {
                    bool member = false;
                    for (const auto& s : sub.parts) member = member || s.orbit == op.orbit;
                    const bool sloped = newton_polygon(op.orbit.min_poly, z.base).min_slope() >= r;
                    c.require(member == sloped, "membership vs slope for " + op.orbit.min_poly.to_string());
                }
                if (part.parts.size() <= 4) c.require(brute_coniveau(part, r) == sub, "brute-force coniveau");
            }
        }
    }
}

// 7
void weil_soundness(Check& c, const std::vector<ZetaData>& corpus, std::size_t& polys) {
    for (const auto& z : corpus) {
        for (unsigned i = 0; i < z.l_polys.size(); ++i) {
            ++polys;
            try {
                c.require(verify_weil(z.charpoly(i), z.base) == static_cast<int>(i), "weight of P_" + std::to_string(i));
            } catch (const Error& e) {
                c.require(false, std::string("rejected corpus polynomial: ") + e.what());
            }
        }
    }
    struct Bad {
        Polynomial poly;
        long q;
        NotWeilReason reason;
    };
    const std::vector<Bad> adversarial{
        {{3, -1, 1}, 2, NotWeilReason::ConstantTermValuation},
        {{5, -1, 1}, 2, NotWeilReason::ConstantTermValuation},
        {{2, -4, 1}, 2, NotWeilReason::RootBound},
        {{3, -4, 1}, 3, NotWeilReason::RootBound},
        {Polynomial({1, 1, 1}) * Polynomial({4, 1, 1}), 2, NotWeilReason::NotTotallyReal},
        {Polynomial{std::vector<Rational>{make_rational(-1, 3), 1}}, 2, NotWeilReason::BadDenominator},
        {Polynomial{std::vector<Rational>{make_rational(1, 3), 0, 1}}, 5, NotWeilReason::BadDenominator},
    };
    for (const auto& b : adversarial) {
        try {
            verify_weil(b.poly, pp(b.q));
            c.require(false, "accepted " + b.poly.to_string());
        } catch (const NotWeilError& e) {
            c.require(e.reason() == b.reason, "reason for " + b.poly.to_string());
        }
    }
}

// 8
void restriction_chain(Check& c, const std::vector<ZetaData>& vars, std::size_t& orbits) {
    for (const auto& z : vars) {
        for (const auto& [w, part] : motive_of(z).graded_parts) {
            if (w < 1 || w > 4) continue;
            const auto m = static_cast<unsigned>(w);
            for (const auto& op : part.parts) {
                ++orbits;
                const Polynomial& p = op.orbit.min_poly;
                Polynomial prod{1};
                for (const auto& o : mth_root_factors(p, z.base, m)) {
                    c.require(o.weight == 1, "weight-1 factor");
                    prod = prod * o.min_poly;
                }
                c.require(prod == p.compose_power(m), "mth roots product for " + p.to_string());

                for (unsigned d = 1; d <= z.base.a; ++d) {
                    if (z.base.a % d != 0) continue;
                    const Polynomial res = weil_restriction_charpoly(p, z.base, d);
                    const PrimePower lower = PrimePower::from_pa(z.base.p, z.base.a / d);
                    c.require(res.degree() == p.degree() * static_cast<int>(d), "restriction degree");
                    c.require(verify_weil(res, lower) == w, "restriction weight");
                    NewtonPolygon before = newton_polygon(p, z.base), after = newton_polygon(res, lower);
                    for (auto& s : before.segments) s.multiplicity *= d;
                    c.require(before == after, "restriction slopes for " + p.to_string());
                }
            }
        }
    }
}

// 9
bool close(const Polynomial& exact, const std::vector<oracle::cplx>& numeric) {
    if (numeric.size() != exact.coeffs().size()) return false;
    for (std::size_t i = 0; i < numeric.size(); ++i) {
        const double e = exact.coeff(i).get_d();
        if (std::abs(numeric[i] - e) > kCoeffTolerance * std::max(1.0, std::abs(e))) return false;
    }
    return true;
}

Polynomial random_monic(std::mt19937_64& rng) {
    const int d = 1 + static_cast<int>(rng() % 6);
    std::vector<Rational> c(d + 1);
    for (int i = 0; i < d; ++i) c[i] = static_cast<long>(rng() % 7) - 3;
    if (c[0] == 0) c[0] = 1;
    c[d] = 1;
    return Polynomial(c);
}

void oracle_equivalence(Check& c) {
    std::mt19937_64 rng(977);
    for (int t = 0; t < kTensorTrials; ++t) {
        const Polynomial a = random_monic(rng), b = random_monic(rng);
        c.require(close(tensor_charpoly(a, b), oracle::tensor_numeric(a, b)),
                  "tensor " + a.to_string() + " , " + b.to_string());
        const unsigned k = 1 + static_cast<unsigned>(rng() % static_cast<unsigned>(a.degree()));
        c.require(close(exterior_charpoly(a, k), oracle::exterior_numeric(a, k)),
                  "exterior " + a.to_string() + " k=" + std::to_string(k));
    }
    c.require(tensor_charpoly({-2, 1}, {-3, 1}) == Polynomial({-6, 1}), "tensor example 1");
    c.require(tensor_charpoly({-1, 1}, {2, -1, 1}) == Polynomial({2, -1, 1}), "tensor example 2");
    c.require(tensor_charpoly({2, -1, 1}, {-2, 1}) == Polynomial({8, -2, 1}), "tensor example 3");
    c.require(exterior_charpoly({2, -3, 1}, 2) == Polynomial({-2, 1}), "exterior example 1");
    c.require(exterior_charpoly({2, -1, 1}, 1) == Polynomial({2, -1, 1}), "exterior example 2");
    const Polynomial three = Polynomial({2, -1, 1}) * Polynomial({-1, 1});
    c.require(exterior_charpoly(three, 2) == Polynomial({-2, 1}) * Polynomial({2, -1, 1}), "exterior example 3");
}

// 10
void rank_formula(Check& c, const std::vector<ZetaData>& vars) {
    for (const auto& z : vars) {
        const auto a = compute_A(z);
        unsigned selected = 0;
        for (const auto& op : generic_part(z).parts) selected += op.multiplicity * op.orbit.degree();
        c.require(rank_from_algebra(a) == selected, "rank vs S(X)");
        if (z.dim_n >= 1) {
            // Every H^1 in the corpus is the H^1 of a curve (elliptic or a genus-2 Jacobian).
            const Polynomial& l1 = z.l_polys[1];
            const auto curve = curve_end_algebra(l1, z.base);
            c.require(rank_from_algebra(curve) == static_cast<unsigned>(l1.degree()), "curve rank = 2g");
        }
    }
}

}  // namespace

int main() {
    int failures = 0;
    std::vector<ZetaData> corpus;
    try {
        corpus = load_corpus();
    } catch (const std::exception& e) {
        std::cout << "FAIL corpus: " << e.what() << "\n";
        return 1;
    }
    const auto vars = varieties(corpus);
    std::size_t blocks = 0, polys = 0, orbits = 0;

    auto run = [&](int id, const std::string& name, const std::function<void(Check&)>& body,
                   const std::function<std::string()>& detail) {
        Check c;
        const auto t0 = std::chrono::steady_clock::now();
        try {
            body(c);
        } catch (const std::exception& e) {
            c.require(false, std::string("exception: ") + e.what());
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        c.require(secs < kTimeLimitSeconds, "over time limit");
        std::cout << (c.ok ? "PASS" : "FAIL") << " " << id << " " << name << " (" << detail();
        std::cout.precision(3);
        std::cout << ", " << secs << " s)";
        if (!c.ok) std::cout << ": " << c.why.str();
        std::cout << "\n";
        if (!c.ok) ++failures;
    };

    run(1, "curve endomorphism algebras", curve_algebras, [] { return std::string("q <= 16, all traces"); });
    run(2, "square of supersingular curve has A = 0", example_sixteen, [] { return std::string("p = 2, 3, 5"); });
    run(3, "Kunneth idempotents", kunneth, [] { return std::to_string(kKunnethCases) + " products"; });
    run(4, "pole-order triangle", [&](Check& c) { pole_triangle(c, vars); },
        [&] { return std::to_string(vars.size()) + " varieties"; });
    run(5, "Brauer reciprocity", [&](Check& c) {
            c.require(corpus.size() == kCorpusSize, "corpus size");
            reciprocity(c, corpus, blocks);
        },
        [&] { return std::to_string(blocks) + " blocks"; });
    run(6, "coniveau/slope bridge", [&](Check& c) { coniveau_bridge(c, vars); },
        [&] { return std::to_string(vars.size()) + " varieties"; });
    run(7, "Weil verification soundness", [&](Check& c) { weil_soundness(c, corpus, polys); },
        [&] { return std::to_string(polys) + " corpus polynomials + adversarial set"; });
    run(8, "restriction / m-th roots", [&](Check& c) { restriction_chain(c, vars, orbits); },
        [&] { return std::to_string(orbits) + " orbits"; });
    run(9, "tensor/exterior oracle equivalence", oracle_equivalence,
        [] { return std::to_string(kTensorTrials) + " trials, tol 1e-6"; });
    run(10, "rank formula", [&](Check& c) { rank_formula(c, vars); },
        [&] { return std::to_string(vars.size()) + " algebras"; });
    return failures == 0 ? 0 : 1;
}
