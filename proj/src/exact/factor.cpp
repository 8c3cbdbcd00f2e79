#include "weilalg/factor.hpp"

#include <algorithm>
#include <numeric>

#include "weilalg/error.hpp"
#include "weilalg/modp.hpp"

namespace weilalg {

namespace {

using IntPoly = std::vector<Integer>;

void trim(IntPoly& f) {
    while (!f.empty() && f.back() == 0) f.pop_back();
}

Integer mod_pos(const Integer& x, const Integer& m) {
    Integer r;
    mpz_fdiv_r(r.get_mpz_t(), x.get_mpz_t(), m.get_mpz_t());
    return r;
}

Integer symmetric(const Integer& x, const Integer& m) {
    Integer r = mod_pos(x, m);
    if (2 * r > m) r -= m;
    return r;
}

IntPoly reduce(const IntPoly& f, const Integer& m) {
    IntPoly r(f.size());
    for (std::size_t i = 0; i < f.size(); ++i) r[i] = mod_pos(f[i], m);
    trim(r);
    return r;
}

IntPoly mul(const IntPoly& a, const IntPoly& b, const Integer& m) {
    if (a.empty() || b.empty()) return {};
    IntPoly r(a.size() + b.size() - 1);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    }
    return reduce(r, m);
}

IntPoly add(const IntPoly& a, const IntPoly& b, const Integer& m) {
    IntPoly r(std::max(a.size(), b.size()));
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i];
    for (std::size_t i = 0; i < b.size(); ++i) r[i] += b[i];
    return reduce(r, m);
}

IntPoly sub(const IntPoly& a, const IntPoly& b, const Integer& m) {
    IntPoly r(std::max(a.size(), b.size()));
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i];
    for (std::size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
    return reduce(r, m);
}

// Division by a monic polynomial modulo m.
std::pair<IntPoly, IntPoly> divmod_monic(const IntPoly& a, const IntPoly& b, const Integer& m) {
    if (a.size() < b.size()) return {IntPoly{}, reduce(a, m)};
    IntPoly r = a;
    const std::size_t db = b.size() - 1;
    IntPoly q(a.size() - db);
    for (std::size_t k = q.size(); k-- > 0;) {
        Integer c = mod_pos(r[k + db], m);
        q[k] = c;
        if (c == 0) continue;
        for (std::size_t j = 0; j <= db; ++j) r[k + j] -= c * b[j];
    }
    r.resize(db);
    return {reduce(q, m), reduce(r, m)};
}

IntPoly from_modp(const modp::Poly& f) {
    IntPoly r;
    r.reserve(f.size());
    for (auto c : f) r.emplace_back(static_cast<unsigned long>(c));
    return r;
}

modp::Poly to_modp(const IntPoly& f, const modp::Field& F) {
    modp::Poly r;
    r.reserve(f.size());
    for (const auto& c : f) r.push_back(F.reduce(c));
    modp::trim(r);
    return r;
}

// Scales f by the inverse of its leading coefficient modulo m.
IntPoly make_monic(const IntPoly& f, const Integer& m) {
    Integer inv;
    Integer lc = mod_pos(f.back(), m);
    if (mpz_invert(inv.get_mpz_t(), lc.get_mpz_t(), m.get_mpz_t()) == 0)
        throw Error(Errc::InvalidArgument, "leading coefficient not invertible in Hensel lifting");
    IntPoly r(f.size());
    for (std::size_t i = 0; i < f.size(); ++i) r[i] = f[i] * inv;
    return reduce(r, m);
}

// Lifts f = g*h (mod p), g, h monic and coprime mod p, to a factorization
// modulo p^k. f is an integer polynomial whose leading coefficient is a unit.
std::pair<IntPoly, IntPoly> hensel_pair(const IntPoly& f, const modp::Poly& g0, const modp::Poly& h0,
                                        const modp::Field& F, unsigned k) {
    auto eg = modp::xgcd(g0, h0, F);
    if (eg.g.size() != 1) throw Error(Errc::InvalidArgument, "Hensel factors are not coprime mod p");
    const Integer p = static_cast<unsigned long>(F.p());
    IntPoly g = from_modp(g0), h = from_modp(h0), s = from_modp(eg.s), t = from_modp(eg.t);
    Integer m = p;
    unsigned e = 1;
    while (e < k) {
        const Integer m2 = m * m;
        const IntPoly fm = make_monic(f, m2);
        IntPoly err = sub(fm, mul(g, h, m2), m2);
        auto [q, r] = divmod_monic(mul(s, err, m2), h, m2);
        IntPoly g1 = add(g, add(mul(t, err, m2), mul(q, g, m2), m2), m2);
        IntPoly h1 = add(h, r, m2);
        IntPoly b = sub(add(mul(s, g1, m2), mul(t, h1, m2), m2), IntPoly{Integer(1)}, m2);
        auto [c, d] = divmod_monic(mul(s, b, m2), h1, m2);
        IntPoly s1 = sub(s, d, m2);
        IntPoly t1 = sub(sub(t, mul(t, b, m2), m2), mul(c, g1, m2), m2);
        g = std::move(g1);
        h = std::move(h1);
        s = std::move(s1);
        t = std::move(t1);
        m = m2;
        e *= 2;
    }
    Integer pk;
    mpz_pow_ui(pk.get_mpz_t(), p.get_mpz_t(), k);
    return {reduce(g, pk), reduce(h, pk)};
}

void hensel_multi(const IntPoly& f, const std::vector<modp::Poly>& facs, std::size_t lo, std::size_t hi,
                  const modp::Field& F, unsigned k, std::vector<IntPoly>& out) {
    if (hi - lo == 1) {
        Integer pk;
        mpz_ui_pow_ui(pk.get_mpz_t(), F.p(), k);
        out.push_back(make_monic(f, pk));
        return;
    }
    const std::size_t mid = lo + (hi - lo) / 2;
    modp::Poly gl{1}, gr{1};
    for (std::size_t i = lo; i < mid; ++i) gl = modp::mul(gl, facs[i], F);
    for (std::size_t i = mid; i < hi; ++i) gr = modp::mul(gr, facs[i], F);
    auto [g, h] = hensel_pair(f, gl, gr, F, k);
    hensel_multi(g, facs, lo, mid, F, k, out);
    hensel_multi(h, facs, mid, hi, F, k, out);
}

// Exact division of integer polynomials; returns false if b does not divide a.
bool int_divide(const IntPoly& a, const IntPoly& b, IntPoly& quotient) {
    if (a.size() < b.size()) return false;
    IntPoly r = a;
    const std::size_t db = b.size() - 1;
    IntPoly q(a.size() - db);
    for (std::size_t k = q.size(); k-- > 0;) {
        if (!mpz_divisible_p(r[k + db].get_mpz_t(), b.back().get_mpz_t())) return false;
        Integer c = r[k + db] / b.back();
        q[k] = c;
        if (c == 0) continue;
        for (std::size_t j = 0; j <= db; ++j) r[k + j] -= c * b[j];
    }
    for (std::size_t i = 0; i < db; ++i)
        if (r[i] != 0) return false;
    quotient = std::move(q);
    return true;
}

IntPoly primitive(IntPoly f) {
    Integer g = 0;
    for (const auto& c : f) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (f.back() < 0) g = -g;
    for (auto& c : f) c /= g;
    return f;
}

bool is_small_prime(unsigned long n) {
    if (n < 2) return false;
    for (unsigned long d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

}  // namespace

namespace detail {

std::vector<IntPoly> zassenhaus(const IntPoly& f_in) {
    IntPoly f = f_in;
    trim(f);
    const std::size_t n = f.size() - 1;
    if (n <= 1) return {f};

    // Prime selection: among the first few admissible primes keep the one
    // giving the fewest modular factors.
    unsigned long best_p = 0;
    std::size_t best_count = 0;
    int tried = 0;
    for (unsigned long p = 3; tried < 5 && p < 100000; p += 2) {
        if (!is_small_prime(p)) continue;
        if (mpz_divisible_ui_p(f.back().get_mpz_t(), p)) continue;
        modp::Field F(p);
        modp::Poly fp = to_modp(f, F);
        if (!modp::is_squarefree(fp, F)) continue;
        std::size_t c = modp::count_factors(fp, F);
        ++tried;
        if (best_p == 0 || c < best_count) {
            best_p = p;
            best_count = c;
        }
        if (c == 1) return {f};
    }
    if (best_p == 0) throw Error(Errc::InvalidArgument, "no admissible prime for Zassenhaus");

    modp::Field F(best_p);
    std::vector<modp::Poly> modular = modp::factor_squarefree(modp::monic(to_modp(f, F), F), F);

    // Coefficient bound for lc(f) * (any factor): lc * 2^n * ||f||_2.
    Integer norm2 = 0;
    for (const auto& c : f) norm2 += c * c;
    Integer root;
    mpz_sqrt(root.get_mpz_t(), norm2.get_mpz_t());
    root += 1;
    Integer bound = abs(f.back()) * root;
    mpz_mul_2exp(bound.get_mpz_t(), bound.get_mpz_t(), n + 1);
    unsigned k = 1;
    Integer pk = best_p;
    while (pk <= bound) {
        pk *= best_p;
        ++k;
    }

    std::vector<IntPoly> lifted;
    hensel_multi(f, modular, 0, modular.size(), F, k, lifted);

    std::vector<IntPoly> result;
    std::vector<IntPoly> pool = lifted;
    std::size_t s = 1;
    while (2 * s <= pool.size()) {
        bool found = false;
        std::vector<std::size_t> idx(s);
        std::iota(idx.begin(), idx.end(), 0);
        for (;;) {
            IntPoly cand{f.back()};
            for (auto i : idx) cand = mul(cand, pool[i], pk);
            for (auto& c : cand) c = symmetric(c, pk);
            trim(cand);
            cand = primitive(cand);
            IntPoly quotient;
            if (int_divide(f, cand, quotient)) {
                result.push_back(cand);
                f = std::move(quotient);
                std::vector<IntPoly> rest;
                for (std::size_t i = 0, j = 0; i < pool.size(); ++i) {
                    if (j < idx.size() && idx[j] == i) {
                        ++j;
                        continue;
                    }
                    rest.push_back(pool[i]);
                }
                pool = std::move(rest);
                found = true;
                break;
            }
            // next combination
            std::size_t pos = s;
            while (pos > 0 && idx[pos - 1] == pool.size() - s + pos - 1) --pos;
            if (pos == 0) break;
            ++idx[pos - 1];
            for (std::size_t j = pos; j < s; ++j) idx[j] = idx[j - 1] + 1;
        }
        if (!found) ++s;
    }
    if (f.size() > 1) result.push_back(primitive(f));
    return result;
}

}  // namespace detail

Polynomial Factorization::expand() const {
    Polynomial r = Polynomial::constant(unit);
    for (const auto& f : factors) r = r * f.poly.pow(f.multiplicity);
    return r;
}

std::vector<Factor> squarefree_decomposition(const Polynomial& p) {
    if (p.is_zero()) throw Error(Errc::ZeroPolynomial, "squarefree decomposition of 0");
    std::vector<Factor> out;
    if (p.degree() == 0) return out;
    Polynomial f = p.monic();
    Polynomial df = f.derivative();
    Polynomial a0 = gcd(f, df);
    Polynomial b = f / a0;
    Polynomial c = df / a0;
    Polynomial d = c - b.derivative();
    unsigned i = 1;
    while (b.degree() > 0) {
        Polynomial a = gcd(b, d);
        b = b / a;
        c = d / a;
        d = c - b.derivative();
        if (a.degree() > 0) out.push_back({a.monic(), i});
        ++i;
    }
    return out;
}

Factorization factor_rational_poly(const Polynomial& p) {
    if (p.is_zero()) throw Error(Errc::ZeroPolynomial, "cannot factor the zero polynomial");
    Factorization out;
    out.unit = p.lead();
    for (const auto& sq : squarefree_decomposition(p)) {
        for (const auto& g : detail::zassenhaus(primitive_integer_coeffs(sq.poly)))
            out.factors.push_back({from_integers(g).monic(), sq.multiplicity});
    }
    std::sort(out.factors.begin(), out.factors.end(),
              [](const Factor& a, const Factor& b) { return canonical_less(a.poly, b.poly); });
    return out;
}

bool is_irreducible(const Polynomial& p) {
    if (p.degree() < 1) return false;
    auto f = factor_rational_poly(p);
    return f.factors.size() == 1 && f.factors[0].multiplicity == 1;
}

}  // namespace weilalg
