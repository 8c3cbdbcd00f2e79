#include "weilalg/motives.hpp"

#include <algorithm>

#include "weilalg/endalg.hpp"
#include "weilalg/error.hpp"
#include "weilalg/exact_arith.hpp"
#include "weilalg/factor.hpp"

namespace weilalg {

namespace {

Integer qpow(const PrimePower& q, unsigned e) {
    Integer r;
    mpz_pow_ui(r.get_mpz_t(), q.q.get_mpz_t(), e);
    return r;
}

void require_same_base(const PrimePower& a, const PrimePower& b) {
    if (!(a == b)) throw Error(Errc::BaseMismatch, a.q.get_str() + " vs " + b.q.get_str());
}

}  // namespace

Polynomial ZetaData::charpoly(unsigned i) const { return reciprocal_transform(l_polys.at(i), l_polys.at(i).degree()); }

ZetaData ZetaData::from_charpolys(const PrimePower& base, unsigned n, const std::vector<Polynomial>& monic) {
    ZetaData z{base, n, {}};
    for (const auto& c : monic) z.l_polys.push_back(to_l_polynomial(c));
    return z;
}

unsigned Motive::dimension() const {
    unsigned n = 0;
    for (const auto& [w, part] : graded_parts) n += part.dimension();
    return n;
}

const TateStructure* Motive::part(int weight) const {
    auto it = graded_parts.find(weight);
    return it == graded_parts.end() ? nullptr : &it->second;
}

ZetaData zeta_from_curve(const Polynomial& l1, const PrimePower& q) {
    if (l1.constant_term() != 1) throw Error(Errc::BadConstantTerm, "L(0) must be 1, got " + l1.to_string());
    if (l1.degree() % 2 != 0) throw Error(Errc::OddDegree, "degree " + std::to_string(l1.degree()));
    const Polynomial c1 = reciprocal_transform(l1, l1.degree());
    if (c1.degree() > 0) {
        for (const auto& f : factor_rational_poly(c1).factors) {
            int w = verify_weil(f.poly, q);
            if (w != 1) throw Error(Errc::WeightMismatch, f.poly.to_string() + " has weight " + std::to_string(w));
        }
    }
    return ZetaData{q, 1, {Polynomial{1, -1}, l1, Polynomial::constant(1) - Polynomial::monomial(Rational(q.q), 1)}};
}

ZetaData zeta_product(const ZetaData& x, const ZetaData& y) {
    require_same_base(x.base, y.base);
    const unsigned n = x.dim_n + y.dim_n;
    std::vector<Polynomial> c(2 * n + 1, Polynomial{1});
    for (unsigned i = 0; i <= 2 * x.dim_n; ++i) {
        const Polynomial ci = x.charpoly(i);
        if (ci.degree() < 1) continue;
        for (unsigned j = 0; j <= 2 * y.dim_n; ++j) {
            const Polynomial cj = y.charpoly(j);
            if (cj.degree() < 1) continue;
            c[i + j] = c[i + j] * tensor_charpoly(ci, cj);
        }
    }
    return ZetaData::from_charpolys(x.base, n, c);
}

ZetaReport validate_zeta(const ZetaData& z) {
    ZetaReport rep;
    auto fail = [&](const std::string& msg) {
        rep.ok = false;
        rep.failures.push_back(msg);
    };
    if (z.l_polys.size() != 2 * z.dim_n + 1) {
        rep.shape_ok = false;
        fail("shape: expected " + std::to_string(2 * z.dim_n + 1) + " polynomials, got " +
             std::to_string(z.l_polys.size()));
        return rep;
    }
    const Polynomial first{1, -1};
    const Polynomial last = Polynomial::constant(1) - Polynomial::monomial(Rational(qpow(z.base, z.dim_n)), 1);
    if (z.l_polys.front() != first) {
        rep.endpoints_ok = false;
        fail("endpoint: P_0 = " + z.l_polys.front().to_string() + ", expected " + first.to_string());
    }
    if (z.l_polys.back() != last) {
        rep.endpoints_ok = false;
        fail("endpoint: P_" + std::to_string(2 * z.dim_n) + " = " + z.l_polys.back().to_string() + ", expected " +
             last.to_string());
    }
    std::vector<std::optional<Polynomial>> charpolys;
    for (unsigned i = 0; i < z.l_polys.size(); ++i) {
        DegreeReport d{i, true, {}};
        auto dfail = [&](const std::string& msg) {
            d.ok = false;
            d.failures.push_back(msg);
            fail("degree " + std::to_string(i) + ": " + msg);
        };
        const Polynomial& l = z.l_polys[i];
        if (l.constant_term() != 1) {
            dfail("constant term " + to_string(l.constant_term()) + " is not 1");
            charpolys.emplace_back();
            rep.degrees.push_back(d);
            continue;
        }
        const Polynomial c = reciprocal_transform(l, l.degree());
        charpolys.emplace_back(c);
        if (c.degree() > 0) {
            for (const auto& f : factor_rational_poly(c).factors) {
                try {
                    int w = verify_weil(f.poly, z.base);
                    if (w != static_cast<int>(i))
                        dfail("weight " + std::to_string(w) + " for factor " + f.poly.to_string());
                } catch (const NotWeilError& e) {
                    dfail(std::string("weight: ") + e.what());
                }
            }
        }
        rep.degrees.push_back(d);
    }
    for (std::size_t i = 0; i < charpolys.size(); ++i)
        for (std::size_t j = i + 1; j < charpolys.size(); ++j) {
            if (!charpolys[i] || !charpolys[j]) continue;
            if (gcd(*charpolys[i], *charpolys[j]).degree() > 0) {
                rep.coprime_ok = false;
                fail("coprime: C_" + std::to_string(i) + " and C_" + std::to_string(j) + " share a factor");
            }
        }
    return rep;
}

Motive motive_of(const ZetaData& z) {
    ZetaReport rep = validate_zeta(z);
    if (!rep.ok) throw Error(Errc::ValidationFailed, rep.failures.front());
    Motive m{z.base, {}};
    for (unsigned i = 0; i < z.l_polys.size(); ++i) {
        const Polynomial c = z.charpoly(i);
        if (c.degree() < 1) continue;
        m.graded_parts.emplace(static_cast<int>(i), TateStructure::from_charpoly(c, z.base));
    }
    return m;
}

std::vector<Polynomial> kunneth_idempotents(const ZetaData& z) {
    std::vector<unsigned> degrees;
    std::vector<Polynomial> moduli;
    for (unsigned i = 0; i < z.l_polys.size(); ++i) {
        Polynomial c = z.charpoly(i);
        if (c.degree() < 1) continue;
        degrees.push_back(i);
        moduli.push_back(c);
    }
    for (std::size_t i = 0; i < moduli.size(); ++i)
        for (std::size_t j = i + 1; j < moduli.size(); ++j)
            if (gcd(moduli[i], moduli[j]).degree() > 0) throw NotCoprimeError(degrees[i], degrees[j]);
    // P^k = N_k (N_k^{-1} mod C_k) with N_k = prod_{j != k} C_j; already reduced
    // modulo prod C_j since deg N_k + deg C_k = deg prod C_j.
    std::vector<Polynomial> out(z.l_polys.size());
    for (std::size_t k = 0; k < moduli.size(); ++k) {
        Polynomial rest{1};
        for (std::size_t j = 0; j < moduli.size(); ++j)
            if (j != k) rest = rest * moduli[j];
        out[degrees[k]] = rest * inverse_mod(rest, moduli[k]);
    }
    return out;
}

unsigned pole_order(const ZetaData& z, unsigned r) {
    if (r > z.dim_n) throw Error(Errc::RangeError, "r = " + std::to_string(r) + " exceeds n = " + std::to_string(z.dim_n));
    Polynomial c = z.charpoly(2 * r);
    const Polynomial lin = Polynomial::linear_root(Rational(qpow(z.base, r)));
    unsigned mult = 0;
    while (c.degree() >= 1) {
        auto [quo, rem] = divmod(c, lin);
        if (!rem.is_zero()) break;
        c = quo;
        ++mult;
    }
    return mult;
}

Motive tate_twist(const Motive& m, long r) {
    Motive out{m.base, {}};
    for (const auto& [w, part] : m.graded_parts)
        out.graded_parts.emplace(w - static_cast<int>(2 * r), tate_twist(part, r));
    return out;
}

unsigned motive_hom_dim(const Motive& m, const Motive& n) {
    require_same_base(m.base, n.base);
    unsigned total = 0;
    for (const auto& [w, part] : m.graded_parts) {
        const TateStructure* other = n.part(w);
        if (!other) continue;
        for (const auto& a : part.parts) {
            auto it = std::find_if(other->parts.begin(), other->parts.end(),
                                   [&](const OrbitPart& b) { return b.orbit.min_poly == a.orbit.min_poly; });
            if (it == other->parts.end()) continue;
            const unsigned e = brauer_block(a.orbit, a.orbit.weight).index_e;
            if (a.multiplicity % e != 0 || it->multiplicity % e != 0)
                throw Error(Errc::IndexDivisibilityError,
                            "multiplicity of " + a.orbit.min_poly.to_string() + " not divisible by index " +
                                std::to_string(e));
            total += (a.multiplicity / e) * (it->multiplicity / e) * e * e * a.orbit.degree();
        }
    }
    return total;
}

unsigned hom_from_unit(const Motive& m) {
    const TateStructure* w0 = m.part(0);
    if (!w0) return 0;
    for (const auto& part : w0->parts)
        if (part.orbit.min_poly == Polynomial{-1, 1}) return part.multiplicity;
    return 0;
}

GradedComplex realization(const Motive& m) {
    GradedComplex c;
    for (const auto& [w, part] : m.graded_parts) c.entries.emplace(w, Motive{m.base, {{w, part}}});
    return c;
}

unsigned graded_hom_dim(const GradedComplex& a, const GradedComplex& b, int shift) {
    const PrimePower* base = nullptr;
    for (const auto* c : {&a, &b})
        for (const auto& [k, m] : c->entries) {
            if (base) require_same_base(*base, m.base);
            base = &m.base;
        }
    unsigned total = 0;
    for (const auto& [k, m] : a.entries) {
        auto it = b.entries.find(k + shift);
        if (it != b.entries.end()) total += motive_hom_dim(m, it->second);
    }
    return total;
}

unsigned k_group_dim(const ZetaData& z, unsigned i, int j) {
    if (i != 0 || j < 0 || j > static_cast<int>(z.dim_n)) return 0;
    return pole_order(z, static_cast<unsigned>(j));
}

}  // namespace weilalg
