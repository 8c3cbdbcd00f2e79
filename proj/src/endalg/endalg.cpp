#include "weilalg/endalg.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

#include "weilalg/error.hpp"
#include "weilalg/exact_arith.hpp"

namespace weilalg {

namespace {

Rational frac(const Rational& x) {
    Integer fl;
    mpz_fdiv_q(fl.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
    return x - Rational(fl);
}

unsigned lcm_den(unsigned e, const Rational& x) {
    return std::lcm(e, static_cast<unsigned>(x.get_den().get_ui()));
}

}  // namespace

Rational CSAData::invariant_sum() const {
    Rational s = real_invariant * static_cast<unsigned long>(real_places);
    for (const auto& f : finite_invariants) s += f.invariant;
    return s;
}

CSAData brauer_block(const WeilOrbit& orbit, int ambient_weight) {
    CSAData b;
    b.center_poly = orbit.min_poly;
    b.orbit_size = orbit.degree();

    // Scale by q^N until integral; slopes shift by N, invariants do not change.
    long shift = 0;
    WeilOrbit integral = orbit;
    while (!is_effective(integral)) integral = tate_twist(orbit, -(++shift));
    for (auto place : padic_places(integral.min_poly, orbit.base)) {
        place.slope -= shift;
        const Rational inv = frac(place.slope * static_cast<unsigned long>(place.local_degree));
        b.finite_invariants.push_back({place, inv});
        b.index_e = lcm_den(b.index_e, inv);
    }
    b.real_places = static_cast<unsigned>(sturm_count(orbit.min_poly, std::nullopt, std::nullopt));
    b.real_invariant = (b.real_places > 0 && ambient_weight % 2 != 0) ? Rational(1, 2) : Rational(0);
    b.index_e = lcm_den(b.index_e, b.real_invariant);
    return b;
}

TateStructure generic_part(const ZetaData& z) { return generic_part(z, z.dim_n); }

TateStructure generic_part(const ZetaData& z, unsigned weight) {
    if (weight > 2 * z.dim_n) throw Error(Errc::RangeError, "weight " + std::to_string(weight) + " > 2n");
    const Motive m = motive_of(z);
    TateStructure out{z.base, {}};
    const TateStructure* top = m.part(static_cast<int>(weight));
    if (!top) return out;
    for (const auto& part : top->parts)
        if (newton_polygon(part.orbit.min_poly, z.base).min_slope() < 1) out.parts.push_back(part);
    return out;
}

AlgebraDescription compute_A(const ZetaData& z) { return compute_A(z, z.dim_n); }

AlgebraDescription compute_A(const ZetaData& z, unsigned weight) {
    AlgebraDescription a{{}, z.base, static_cast<int>(weight)};
    for (const auto& part : generic_part(z, weight).parts) {
        CSAData b = brauer_block(part.orbit, a.ambient_weight_n);
        if (part.multiplicity % b.index_e != 0)
            throw Error(Errc::IndexDivisibilityError, "multiplicity " + std::to_string(part.multiplicity) + " of " +
                                                          part.orbit.min_poly.to_string() + " not divisible by index " +
                                                          std::to_string(b.index_e));
        b.matrix_size_r = part.multiplicity / b.index_e;
        a.blocks.push_back(std::move(b));
    }
    return a;
}

AlgebraDescription curve_end_algebra(const Polynomial& l1, const PrimePower& q) {
    return compute_A(zeta_from_curve(l1, q));
}

unsigned rank_from_algebra(const AlgebraDescription& a) {
    unsigned r = 0;
    for (const auto& b : a.blocks) r += b.matrix_size_r * b.orbit_size * b.index_e;
    return r;
}

Integer dimension(const AlgebraDescription& a) {
    Integer d = 0;
    for (const auto& b : a.blocks) {
        Integer re = b.matrix_size_r * b.index_e;
        d += re * re * b.orbit_size;
    }
    return d;
}

unsigned witt_vector_rank(const ZetaData& z) {
    const Polynomial c = z.charpoly(z.dim_n);
    if (c.degree() < 1) return 0;
    return newton_polygon(c, z.base).count_below(1);
}

unsigned honda_tate_dimension(const WeilOrbit& orbit) {
    if (orbit.weight != 1) throw Error(Errc::WeightMismatch, "weight " + std::to_string(orbit.weight) + ", expected 1");
    if (!is_effective(orbit)) throw Error(Errc::NotEffectiveInput, orbit.min_poly.to_string());
    const CSAData b = brauer_block(orbit, 1);
    const unsigned prod = b.orbit_size * b.index_e;
    if (prod % 2 != 0) throw Error(Errc::OddProduct, orbit.min_poly.to_string());
    return prod / 2;
}

namespace {

/// Power sums p_1..p_n of the roots of Lambda^j V, given power sums of V up to n j.
std::vector<Rational> exterior_power_sums(const std::vector<Rational>& base, unsigned j, std::size_t n) {
    std::vector<Rational> out(n + 1);
    for (std::size_t t = 1; t <= n; ++t) {
        if (j == 0) {
            out[t] = 1;
            continue;
        }
        // e_j of the t-th powers of the roots.
        std::vector<Rational> e(j + 1);
        e[0] = 1;
        for (unsigned i = 1; i <= j; ++i) {
            Rational acc = 0;
            for (unsigned l = 1; l <= i; ++l) {
                const Rational term = e[i - l] * base[l * t];
                if (l % 2 == 1) acc += term;
                else acc -= term;
            }
            e[i] = acc / Rational(static_cast<unsigned long>(i));
        }
        out[t] = e[j];
    }
    return out;
}

void partitions(unsigned m, unsigned parts, unsigned max_part, std::vector<unsigned>& cur,
                std::vector<std::vector<unsigned>>& out) {
    if (parts == 0) {
        if (m == 0) out.push_back(cur);
        return;
    }
    for (unsigned j = std::min(m, max_part); j >= 1; --j) {
        cur.push_back(j);
        partitions(m - j, parts - 1, j, cur, out);
        cur.pop_back();
    }
}

}  // namespace

Weight1Realization weight1_realization(const WeilOrbit& orbit) {
    if (orbit.weight < 1) throw Error(Errc::InvalidArgument, "weight must be at least 1");
    if (!is_effective(orbit)) throw Error(Errc::NotEffectiveInput, orbit.min_poly.to_string());
    const auto m = static_cast<unsigned>(orbit.weight);
    Weight1Realization w;
    w.base_qm = orbit.base.power(m);
    w.restricted = weil_restriction_charpoly(orbit.min_poly, w.base_qm, m);
    w.exterior_degree = m;
    const auto d = static_cast<unsigned>(w.restricted.degree());

    // The product of all m-th roots of alpha is (-1)^(m-1) alpha, so one copy
    // is not always enough; take the fewest copies that contain alpha.
    for (unsigned k = 1; k <= m; ++k) {
        std::vector<std::vector<unsigned>> cands;
        std::vector<unsigned> cur;
        partitions(m, k, d, cur, cands);
        auto dim = [&](const std::vector<unsigned>& js) {
            Integer n = 1;
            for (unsigned j : js) n *= binomial(d, j);
            return n;
        };
        std::stable_sort(cands.begin(), cands.end(), [&](const auto& a, const auto& b) { return dim(a) < dim(b); });
        for (const auto& js : cands) {
            const Integer big = dim(js);
            if (big > kMaxPowerDimension) continue;
            const std::size_t n = big.get_ui();
            const auto base = power_sums(w.restricted, n * m);
            std::vector<Rational> sums(n + 1, Rational(1));
            for (unsigned j : js) {
                const auto ext = exterior_power_sums(base, j, n);
                for (std::size_t t = 1; t <= n; ++t) sums[t] *= ext[t];
            }
            const Polynomial term = from_power_sums(sums, n);
            if ((term % orbit.min_poly).is_zero()) {
                w.copies = k;
                w.summand = js;
                return w;
            }
        }
    }
    throw Error(Errc::CertificationFailed, orbit.min_poly.to_string() + " not found in the exterior power");
}

}  // namespace weilalg
