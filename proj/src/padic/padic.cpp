#include "weilalg/padic.hpp"

#include <algorithm>
#include <numeric>
#include <optional>

#include "weilalg/error.hpp"
#include "weilalg/exact_arith.hpp"
#include "weilalg/factor.hpp"
#include "weilalg/modp.hpp"

namespace weilalg {

long ord_p(const Integer& x, const Integer& p) {
    if (x == 0) throw Error(Errc::ZeroInput, "valuation of 0");
    Integer rest;
    return static_cast<long>(mpz_remove(rest.get_mpz_t(), x.get_mpz_t(), p.get_mpz_t()));
}

long ord_p(const Rational& x, const Integer& p) {
    if (x == 0) throw Error(Errc::ZeroInput, "valuation of 0");
    return ord_p(x.get_num(), p) - ord_p(x.get_den(), p);
}

Rational ord_q(const Rational& x, const PrimePower& q) {
    return make_rational(ord_p(x, q.p), static_cast<long>(q.a));
}

std::vector<Rational> NewtonPolygon::slots() const {
    std::vector<Rational> out;
    for (const auto& s : segments) out.insert(out.end(), s.multiplicity, s.slope);
    return out;
}

Rational NewtonPolygon::min_slope() const {
    if (segments.empty()) throw Error(Errc::InvalidArgument, "empty Newton polygon");
    return segments.front().slope;
}

unsigned NewtonPolygon::count_at_least(const Rational& r) const {
    unsigned n = 0;
    for (const auto& s : segments)
        if (s.slope >= r) n += s.multiplicity;
    return n;
}

unsigned NewtonPolygon::count_below(const Rational& r) const {
    unsigned n = 0;
    for (const auto& s : segments)
        if (s.slope < r) n += s.multiplicity;
    return n;
}

namespace {

struct Vertex {
    std::size_t x;
    long y;
};

/// Lower convex hull through the given points (x strictly increasing).
std::vector<Vertex> lower_hull(const std::vector<Vertex>& pts) {
    std::vector<Vertex> h;
    for (const auto& pt : pts) {
        while (h.size() >= 2) {
            const auto& a = h[h.size() - 2];
            const auto& b = h.back();
            // Drop b unless it lies strictly below segment a -> pt.
            const long lhs = (b.y - a.y) * static_cast<long>(pt.x - a.x);
            const long rhs = (pt.y - a.y) * static_cast<long>(b.x - a.x);
            if (lhs >= rhs) h.pop_back();
            else break;
        }
        h.push_back(pt);
    }
    return h;
}

std::vector<Vertex> exact_hull(const Polynomial& f, const Integer& p) {
    std::vector<Vertex> pts;
    for (std::size_t i = 0; i < f.coeffs().size(); ++i)
        if (f.coeffs()[i] != 0) pts.push_back({i, ord_p(f.coeffs()[i], p)});
    return lower_hull(pts);
}

}  // namespace

NewtonPolygon newton_polygon(const Polynomial& f, const PrimePower& q) {
    if (f.is_zero() || f.constant_term() == 0) throw Error(Errc::ZeroConstantTerm, f.to_string());
    if (!f.is_monic()) throw Error(Errc::NotMonic, f.to_string());
    auto hull = exact_hull(f, q.p);
    NewtonPolygon np;
    // Left to right the root valuations decrease; report them ascending.
    for (std::size_t i = hull.size(); i-- > 1;) {
        const auto& a = hull[i - 1];
        const auto& b = hull[i];
        const auto len = static_cast<long>(b.x - a.x);
        np.segments.push_back({make_rational(a.y - b.y, len * static_cast<long>(q.a)),
                               static_cast<unsigned>(len)});
    }
    return np;
}

namespace {

/// A monic integer polynomial known exactly or modulo p^prec.
struct Approx {
    std::vector<Integer> c;
    std::optional<long> prec;
};

enum class Verdict { Regular, Irregular, Uncertain };

struct SideData {
    Rational slope;                 // root valuation in ord_p units
    std::vector<unsigned> degrees;  // local degrees, filled when regular
    bool regular = false;
    std::size_t left = 0, right = 0;
    modp::Poly residual;
};

struct Analysis {
    Verdict verdict = Verdict::Regular;
    std::vector<SideData> sides;  // left to right
};

Integer ipow(const Integer& p, long e) {
    Integer r;
    mpz_pow_ui(r.get_mpz_t(), p.get_mpz_t(), static_cast<unsigned long>(e));
    return r;
}

/// Representative of x in [0, p^m); x must be p-integral.
Integer reduce_mod(const Rational& x, const Integer& pm) {
    Integer inv;
    if (mpz_invert(inv.get_mpz_t(), x.get_den().get_mpz_t(), pm.get_mpz_t()) == 0)
        throw Error(Errc::InvalidArgument, "value is not p-integral");
    Integer r = (x.get_num() * inv) % pm;
    if (r < 0) r += pm;
    return r;
}

Approx to_approx(const Polynomial& f, std::optional<long> prec, const Integer& p) {
    Approx a;
    a.prec = prec;
    if (prec) {
        const Integer pm = ipow(p, *prec);
        for (const auto& x : f.coeffs()) a.c.push_back(reduce_mod(x, pm));
        a.c.back() = 1;
    } else {
        for (const auto& x : f.coeffs()) a.c.push_back(x.get_num());
    }
    return a;
}

Polynomial to_poly(const Approx& a) {
    std::vector<Rational> c;
    for (const auto& x : a.c) c.emplace_back(x);
    return Polynomial(c);
}

/// Newton polygon sides and residual polynomials of f. With an inexact f a
/// coefficient divisible by p^prec only counts when prec lies strictly above
/// the hull there; otherwise the verdict is Uncertain.
Analysis analyze(const Approx& f, const Integer& p, const modp::Field& F) {
    Analysis out;
    const std::size_t d = f.c.size() - 1;
    std::vector<Vertex> pts;
    std::vector<std::size_t> unknown;
    for (std::size_t i = 0; i <= d; ++i) {
        if (f.c[i] != 0) pts.push_back({i, ord_p(f.c[i], p)});
        else if (f.prec) unknown.push_back(i);
    }
    if (pts.empty() || pts.front().x != 0) {
        out.verdict = Verdict::Uncertain;
        return out;
    }
    auto hull = lower_hull(pts);
    for (std::size_t u : unknown) {
        auto it = std::upper_bound(hull.begin(), hull.end(), u,
                                   [](std::size_t x, const Vertex& v) { return x < v.x; });
        const auto& b = *it;
        const auto& a = *(it - 1);
        // prec > y_a + (u - x_a) (y_b - y_a) / (x_b - x_a)
        const long len = static_cast<long>(b.x - a.x);
        const long lhs = *f.prec * len;
        const long rhs = a.y * len + static_cast<long>(u - a.x) * (b.y - a.y);
        if (lhs <= rhs) {
            out.verdict = Verdict::Uncertain;
            return out;
        }
    }
    bool all_regular = true;
    for (std::size_t s = 1; s < hull.size(); ++s) {
        const auto& a = hull[s - 1];
        const auto& b = hull[s];
        const long len = static_cast<long>(b.x - a.x);
        const long drop = a.y - b.y;
        const long g = std::gcd(len, drop == 0 ? len : drop);
        const long e = len / g, h = drop / g;
        SideData side;
        side.slope = make_rational(drop, len);
        side.left = a.x;
        side.right = b.x;
        modp::Poly residual;
        for (long t = 0; t <= g; ++t) {
            const std::size_t idx = a.x + static_cast<std::size_t>(t * e);
            const long height = a.y - t * h;
            modp::Coeff r = 0;
            if (f.c[idx] != 0 && ord_p(f.c[idx], p) == height) {
                Integer unit = f.c[idx] / ipow(p, height);
                r = F.reduce(unit);
            }
            residual.push_back(r);
        }
        modp::trim(residual);
        side.residual = residual;
        if (modp::is_squarefree(residual, F)) {
            side.regular = true;
            for (const auto& phi : modp::factor_squarefree(modp::monic(residual, F), F))
                side.degrees.push_back(static_cast<unsigned>(e * modp::degree(phi)));
        } else {
            all_regular = false;
        }
        out.sides.push_back(std::move(side));
    }
    out.verdict = all_regular ? Verdict::Regular : Verdict::Irregular;
    return out;
}

/// Monic factor of P of degree k collecting the roots of valuation above the
/// polygon slope just right of vertex k, correct modulo p^prec. Linear Hensel
/// iteration in the Gauss valuation attached to the vertex.
std::optional<Approx> left_factor(const Polynomial& f, std::size_t k, long prec, long target,
                                  const Integer& p) {
    const std::size_t d = static_cast<std::size_t>(f.degree());
    const Rational ck = f.coeff(k);
    const long yk = ord_p(ck, p);
    const Integer pm = ipow(p, target + yk + 2);
    std::vector<Rational> g(k + 1), h(d - k + 1);
    for (std::size_t i = 0; i <= k; ++i) g[i] = f.coeff(i) / ck;
    for (std::size_t i = k; i <= d; ++i) h[i - k] = f.coeff(i);
    const long max_iter = 64 + 8 * target * static_cast<long>(d);
    for (long it = 0; it < max_iter; ++it) {
        Polynomial err = f - Polynomial(g) * Polynomial(h);
        long minv = target;
        for (const auto& x : err.coeffs())
            if (x != 0) minv = std::min(minv, ord_p(x, p));
        if (minv >= target) {
            Approx out;
            out.prec = prec;
            const Integer pn = ipow(p, prec);
            for (const auto& x : g) out.c.push_back(reduce_mod(x, pn));
            out.c.back() = 1;
            return out;
        }
        for (std::size_t i = 0; i < k; ++i) g[i] += err.coeff(i) / ck;
        for (std::size_t i = k; i <= d; ++i) h[i - k] += err.coeff(i);
        for (auto& x : g)
            if (ord_p(x.get_den(), p) == 0 && x != 0) x = reduce_mod(x, pm);
        for (auto& x : h)
            if (ord_p(x.get_den(), p) == 0 && x != 0) x = reduce_mod(x, pm);
    }
    return std::nullopt;
}

Approx exact_quotient(const Approx& a, const Approx& b, long prec, const Integer& p) {
    Polynomial qt = to_poly(a) / to_poly(b);
    return to_approx(qt, prec, p);
}

std::vector<Polynomial> theta_schedule(const Rational& slope, unsigned e, const Integer& p) {
    std::vector<Integer> shifts;
    const Integer top = slope.get_num() / slope.get_den() + 2;
    const unsigned long tmax = p > 7 ? 6UL : p.get_ui() - 1;
    Integer pj = 1;
    for (Integer j = 0; j <= top; ++j, pj *= p) {
        for (unsigned long t = 1; t <= tmax; ++t) {
            shifts.push_back(pj * t);
            shifts.push_back(-pj * t);
        }
    }
    std::vector<Polynomial> out;
    auto lin = [](const Integer& c0, const Integer& c1, unsigned deg) {
        std::vector<Rational> c(deg + 1);
        c[0] = c0;
        c[1] = c[1] + c1;
        c[deg] = c[deg] + 1;
        return Polynomial(c);
    };
    for (const auto& c : shifts) out.push_back(lin(c, 0, 1));
    out.push_back(lin(0, 0, 2));
    for (const auto& c : shifts) out.push_back(lin(0, c, 2));
    for (const auto& c : shifts) out.push_back(lin(c, 0, 2));
    if (e > 2) {
        out.push_back(Polynomial::monomial(1, e));
        for (const auto& c : shifts) out.push_back(Polynomial::monomial(1, e) + Polynomial::constant(c));
    }
    return out;
}

struct SlopeBlockResult {
    std::vector<unsigned> degrees;
    bool uncertain = false;
};

/// Distinct roots in F_p of the repeated factors of a residual polynomial.
std::vector<modp::Coeff> repeated_roots(const modp::Poly& psi, const modp::Field& F) {
    modp::Poly rep = modp::derivative(psi, F);
    rep = rep.empty() ? psi : modp::gcd(psi, rep, F);
    if (modp::degree(rep) < 1) return {};
    const modp::Poly y{0, 1};
    modp::Poly frob = modp::sub(modp::powmod(y, Integer(static_cast<unsigned long>(F.p())), rep, F), y, F);
    modp::Poly lin = frob.empty() ? modp::monic(rep, F) : modp::gcd(rep, frob, F);
    std::vector<modp::Coeff> out;
    if (modp::degree(lin) < 1) return out;
    for (const auto& phi : modp::factor_squarefree(lin, F)) out.push_back(F.neg(phi[0]));
    return out;
}

/// Product of the distinct monic irreducible factors of f.
modp::Poly radical(const modp::Poly& f, const modp::Field& F) {
    if (modp::degree(f) < 1) return {1};
    const modp::Poly d = modp::derivative(f, F);
    if (d.empty()) {
        // f(y) = g(y^p) = g(y)^p over F_p.
        modp::Poly g;
        for (std::size_t i = 0; i < f.size(); i += F.p()) g.push_back(f[i]);
        return radical(g, F);
    }
    const modp::Poly g = modp::gcd(f, d, F);
    const modp::Poly s = modp::monic(modp::divmod(f, g, F).first, F);
    const modp::Poly r = radical(g, F);
    const modp::Poly common = modp::gcd(s, r, F);
    return modp::monic(modp::divmod(modp::mul(s, r, F), common, F).first, F);
}

Polynomial lift(const modp::Poly& f) {
    std::vector<Rational> c;
    for (auto x : f) c.emplace_back(Integer(static_cast<unsigned long>(x)));
    return Polynomial(c);
}

/// Dedekind's criterion for a monic f in Z_p[T] known modulo p^prec, prec >= 2:
/// when Z_p[T]/(f) is p-maximal, each factor phi^k of f mod p is one place of
/// ramification k and residue degree deg phi.
std::optional<std::vector<unsigned>> dedekind_degrees(const Approx& f, const Integer& p, const modp::Field& F) {
    if (f.prec && *f.prec < 2) return std::nullopt;
    const Polynomial fp = to_poly(f);
    const modp::Poly fbar = modp::reduce(fp, F);
    const modp::Poly rad = radical(fbar, F);
    std::vector<std::pair<modp::Poly, unsigned>> factors;
    for (const auto& phi : modp::factor_squarefree(rad, F)) {
        unsigned k = 0;
        modp::Poly rest = fbar;
        while (true) {
            auto [q, r] = modp::divmod(rest, phi, F);
            if (!r.empty()) break;
            rest = std::move(q);
            ++k;
        }
        factors.emplace_back(phi, k);
    }
    Polynomial g{1}, h{1};
    for (const auto& [phi, k] : factors) {
        const Polynomial l = lift(phi);
        g = g * l;
        for (unsigned i = 1; i < k; ++i) h = h * l;
    }
    const Polynomial diff = g * h - fp;
    std::vector<Rational> fc;
    for (const auto& x : diff.coeffs()) fc.push_back(x / Rational(p));
    const modp::Poly Fbar = modp::reduce(Polynomial(fc), F);
    std::vector<unsigned> degrees;
    for (const auto& [phi, k] : factors) {
        if (k > 1 && modp::rem(Fbar, phi, F).empty()) return std::nullopt;
        degrees.push_back(k * static_cast<unsigned>(modp::degree(phi)));
    }
    return degrees;
}

/// P(p^s T) / p^(s deg P) for a polynomial all of whose roots have valuation s.
std::optional<Approx> normalized(const Polynomial& P, long s, std::optional<long> prec, const Integer& p) {
    const long d = P.degree();
    std::optional<long> out_prec;
    if (prec) {
        out_prec = *prec - s * d;
        if (*out_prec < 2) return std::nullopt;
    }
    std::vector<Rational> c;
    for (long i = 0; i <= d; ++i) {
        const Rational x = P.coeff(static_cast<std::size_t>(i)) / Rational(ipow(p, s * (d - i)));
        if (x != 0 && ord_p(x, p) < 0) return std::nullopt;
        c.push_back(x);
    }
    return to_approx(Polynomial(c), out_prec, p);
}

SlopeBlockResult irregular_block(const Approx& s, const Rational& slope, const Integer& p, const modp::Field& F,
                                 const modp::Poly& residual, long target, unsigned depth);

/// Local degrees of all factors of f, splitting irregular sides recursively.
SlopeBlockResult approx_degrees(const Approx& f, const Integer& p, const modp::Field& F, long target,
                                unsigned depth) {
    SlopeBlockResult out;
    const Analysis an = analyze(f, p, F);
    if (an.verdict == Verdict::Uncertain) {
        out.uncertain = true;
        return out;
    }
    const Polynomial fp = to_poly(f);
    const std::size_t d = f.c.size() - 1;
    for (const auto& side : an.sides) {
        if (side.regular) {
            out.degrees.insert(out.degrees.end(), side.degrees.begin(), side.degrees.end());
            continue;
        }
        Approx block = f;
        if (an.sides.size() > 1) {
            const long prec = f.prec.value_or(target);
            auto factor_at = [&](std::size_t k) -> std::optional<Approx> {
                if (k == 0) return Approx{{Integer(1)}, prec};
                if (k == d) return to_approx(fp, prec, p);
                return left_factor(fp, k, prec, target, p);
            };
            auto lo = factor_at(side.left), hi = factor_at(side.right);
            if (!lo || !hi) {
                out.uncertain = true;
                out.degrees.clear();
                return out;
            }
            block = exact_quotient(*hi, *lo, prec, p);
        }
        auto res = irregular_block(block, side.slope, p, F, side.residual, target, depth + 1);
        if (res.degrees.empty()) {
            out.uncertain = res.uncertain;
            out.degrees.clear();
            return out;
        }
        out.degrees.insert(out.degrees.end(), res.degrees.begin(), res.degrees.end());
    }
    return out;
}

/// Local degrees of a single-slope factor. With an integral slope and a
/// repeated residual root r the variable is shifted by r p^slope, which pushes
/// the cluster of roots near r p^slope to a larger valuation; otherwise an
/// element theta = g(alpha) with a regular characteristic polynomial is sought.
SlopeBlockResult irregular_block(const Approx& s, const Rational& slope, const Integer& p, const modp::Field& F,
                                 const modp::Poly& residual, long target, unsigned depth) {
    SlopeBlockResult out;
    const Polynomial sp = to_poly(s);
    constexpr unsigned kMaxDepth = 256;
    if (slope.get_den() == 1 && depth < kMaxDepth) {
        const auto roots = repeated_roots(residual, F);
        if (!roots.empty()) {
            const Integer c = Integer(static_cast<unsigned long>(roots.front())) * ipow(p, slope.get_num().get_si());
            return approx_degrees(to_approx(sp.shift(c), s.prec, p), p, F, target, depth);
        }
    }
    const unsigned e = static_cast<unsigned>(slope.get_den().get_ui());
    // alpha^e / p^h is a unit; test whether it generates a p-maximal order.
    {
        const Polynomial pe = e == 1 ? sp : charpoly_of_element(sp, Polynomial::monomial(1, e));
        if (auto u = normalized(pe, slope.get_num().get_si(), s.prec, p))
            if (auto deg = dedekind_degrees(*u, p, F)) {
                out.degrees = *deg;
                return out;
            }
    }
    for (const auto& g : theta_schedule(slope, e, p)) {
        Polynomial ptheta = g.degree() == 1 ? sp.shift(-g.constant_term()) : charpoly_of_element(sp, g);
        Analysis an = analyze(to_approx(ptheta, s.prec, p), p, F);
        if (an.verdict == Verdict::Uncertain) {
            out.uncertain = true;
            continue;
        }
        if (an.verdict == Verdict::Regular) {
            out.uncertain = false;
            for (const auto& side : an.sides) out.degrees.insert(out.degrees.end(), side.degrees.begin(), side.degrees.end());
            return out;
        }
    }
    return out;
}

unsigned digits_base_p(const Integer& x, const Integer& p) {
    unsigned n = 0;
    Integer r = x;
    while (r > 0) {
        r /= p;
        ++n;
    }
    return n;
}

}  // namespace

std::vector<PlaceData> padic_places(const Polynomial& f, const PrimePower& q, unsigned precision) {
    if (f.is_zero() || f.constant_term() == 0) throw Error(Errc::ZeroConstantTerm, f.to_string());
    if (!f.is_monic()) throw Error(Errc::NotMonic, f.to_string());
    if (!f.has_integer_coeffs()) throw Error(Errc::InvalidArgument, "padic_places needs integer coefficients");
    if (!is_irreducible(f)) throw Error(Errc::NotIrreducible, f.to_string());
    if (!q.p.fits_ulong_p()) throw Error(Errc::InvalidArgument, "prime too large for residue arithmetic");
    const Integer& p = q.p;
    const modp::Field F(q.p.get_ui());
    const std::size_t d = static_cast<std::size_t>(f.degree());

    std::vector<std::pair<Rational, unsigned>> raw;
    const Analysis top = analyze(to_approx(f, std::nullopt, p), p, F);
    std::vector<std::size_t> irregular;
    for (std::size_t s = 0; s < top.sides.size(); ++s) {
        if (top.sides[s].regular)
            for (unsigned deg : top.sides[s].degrees) raw.emplace_back(top.sides[s].slope, deg);
        else
            irregular.push_back(s);
    }

    if (!irregular.empty()) {
        // Starting precision from the Mignotte bound on factor coefficients.
        Integer norm2 = 0;
        for (const auto& c : f.coeffs()) norm2 += c.get_num() * c.get_num();
        Integer root;
        mpz_sqrt(root.get_mpz_t(), norm2.get_mpz_t());
        const Integer bound = binomial(static_cast<unsigned>(d), static_cast<unsigned>(d / 2)) * (root + 1);
        const long b = static_cast<long>(digits_base_p(bound, p));
        long prec = precision ? static_cast<long>(precision) : 2 * b + 10;
        const long vdisc = ord_p(norm_of_element(f, f.derivative()), p);

        bool done = false;
        for (int attempt = 0; attempt <= 4 && !done; ++attempt, prec *= 2) {
            std::vector<std::pair<Rational, unsigned>> found;
            bool uncertain = false;
            for (std::size_t s : irregular) {
                const auto& side = top.sides[s];
                Approx block;
                if (top.sides.size() == 1) {
                    block = to_approx(f, std::nullopt, p);
                } else {
                    const long target = prec + vdisc + 5;
                    auto factor_at = [&](std::size_t k) -> std::optional<Approx> {
                        if (k == 0) return Approx{{Integer(1)}, prec};
                        if (k == d) return to_approx(f, prec, p);
                        return left_factor(f, k, prec, target, p);
                    };
                    auto lo = factor_at(side.left), hi = factor_at(side.right);
                    if (!lo || !hi) {
                        uncertain = true;
                        break;
                    }
                    block = exact_quotient(*hi, *lo, prec, p);
                }
                auto res = irregular_block(block, side.slope, p, F, side.residual, prec + vdisc + 5, 0);
                if (res.degrees.empty()) {
                    if (!res.uncertain)
                        throw Error(Errc::PrecisionExhausted, "no regular element found for " + f.to_string());
                    uncertain = true;
                    break;
                }
                for (unsigned deg : res.degrees) found.emplace_back(side.slope, deg);
            }
            if (!uncertain) {
                raw.insert(raw.end(), found.begin(), found.end());
                done = true;
            }
        }
        if (!done) throw Error(Errc::PrecisionExhausted, "could not separate the places of " + f.to_string());
    }

    std::vector<PlaceData> out;
    for (auto& [slope_p, deg] : raw) {
        Rational s = slope_p / Rational(static_cast<long>(q.a));
        s.canonicalize();
        out.push_back({s, deg, 0});
    }
    std::sort(out.begin(), out.end(), [](const PlaceData& x, const PlaceData& y) {
        if (x.slope != y.slope) return x.slope < y.slope;
        return x.local_degree < y.local_degree;
    });
    for (std::size_t i = 0; i < out.size(); ++i) out[i].place_id = i;
    return out;
}

}  // namespace weilalg
