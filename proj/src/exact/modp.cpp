#include "weilalg/modp.hpp"

#include <algorithm>
#include <random>

#include "weilalg/error.hpp"

namespace weilalg::modp {

Field::Field(Coeff p) : p_(p) {
    if (p < 2) throw Error(Errc::InvalidArgument, "modulus must be prime");
}

Coeff Field::inv(Coeff a) const {
    if (a % p_ == 0) throw Error(Errc::InvalidArgument, "inverse of zero mod p");
    // Extended Euclid on signed 128-bit values.
    __int128 r0 = static_cast<__int128>(p_), r1 = static_cast<__int128>(a % p_);
    __int128 t0 = 0, t1 = 1;
    while (r1 != 0) {
        __int128 q = r0 / r1;
        __int128 r2 = r0 - q * r1;
        r0 = r1;
        r1 = r2;
        __int128 t2 = t0 - q * t1;
        t0 = t1;
        t1 = t2;
    }
    if (t0 < 0) t0 += p_;
    return static_cast<Coeff>(t0);
}

Coeff Field::reduce(const Integer& x) const {
    Integer r;
    mpz_fdiv_r_ui(r.get_mpz_t(), x.get_mpz_t(), p_);
    return r.get_ui();
}

Coeff Field::reduce(const Rational& x) const {
    return mul(reduce(x.get_num()), inv(reduce(x.get_den())));
}

void trim(Poly& f) {
    while (!f.empty() && f.back() == 0) f.pop_back();
}

int degree(const Poly& f) { return static_cast<int>(f.size()) - 1; }

Poly reduce(const Polynomial& f, const Field& F) {
    Poly out;
    out.reserve(f.coeffs().size());
    for (const auto& c : f.coeffs()) out.push_back(F.reduce(c));
    trim(out);
    return out;
}

Poly add(const Poly& a, const Poly& b, const Field& F) {
    Poly r(std::max(a.size(), b.size()), 0);
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i];
    for (std::size_t i = 0; i < b.size(); ++i) r[i] = F.add(r[i], b[i]);
    trim(r);
    return r;
}

Poly sub(const Poly& a, const Poly& b, const Field& F) {
    Poly r(std::max(a.size(), b.size()), 0);
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i];
    for (std::size_t i = 0; i < b.size(); ++i) r[i] = F.sub(r[i], b[i]);
    trim(r);
    return r;
}

Poly mul(const Poly& a, const Poly& b, const Field& F) {
    if (a.empty() || b.empty()) return {};
    Poly r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = F.add(r[i + j], F.mul(a[i], b[j]));
    }
    trim(r);
    return r;
}

std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b, const Field& F) {
    if (b.empty()) throw Error(Errc::ZeroPolynomial, "division by zero mod p");
    if (a.size() < b.size()) return {Poly{}, a};
    Poly r = a;
    const std::size_t db = b.size() - 1;
    Poly q(a.size() - db, 0);
    const Coeff inv = F.inv(b.back());
    for (std::size_t k = q.size(); k-- > 0;) {
        Coeff c = F.mul(r[k + db], inv);
        q[k] = c;
        if (c == 0) continue;
        for (std::size_t j = 0; j <= db; ++j) r[k + j] = F.sub(r[k + j], F.mul(c, b[j]));
    }
    r.resize(db);
    trim(r);
    trim(q);
    return {q, r};
}

Poly rem(const Poly& a, const Poly& b, const Field& F) { return divmod(a, b, F).second; }

Poly monic(const Poly& a, const Field& F) {
    if (a.empty()) return a;
    const Coeff inv = F.inv(a.back());
    Poly r(a);
    for (auto& c : r) c = F.mul(c, inv);
    return r;
}

Poly gcd(const Poly& a, const Poly& b, const Field& F) {
    Poly x = a, y = b;
    while (!y.empty()) {
        Poly r = rem(x, y, F);
        x = std::move(y);
        y = std::move(r);
    }
    return monic(x, F);
}

Xgcd xgcd(const Poly& a, const Poly& b, const Field& F) {
    Poly r0 = a, r1 = b, s0{1}, s1{}, t0{}, t1{1};
    while (!r1.empty()) {
        auto [q, r] = divmod(r0, r1, F);
        Poly s2 = sub(s0, mul(q, s1, F), F);
        Poly t2 = sub(t0, mul(q, t1, F), F);
        r0 = std::move(r1);
        r1 = std::move(r);
        s0 = std::move(s1);
        s1 = std::move(s2);
        t0 = std::move(t1);
        t1 = std::move(t2);
    }
    if (r0.empty()) return {};
    const Coeff inv = F.inv(r0.back());
    for (auto* v : {&r0, &s0, &t0})
        for (auto& c : *v) c = F.mul(c, inv);
    return {r0, s0, t0};
}

Poly derivative(const Poly& a, const Field& F) {
    if (a.size() <= 1) return {};
    Poly d(a.size() - 1);
    for (std::size_t i = 1; i < a.size(); ++i) d[i - 1] = F.mul(a[i], static_cast<Coeff>(i % F.p()));
    trim(d);
    return d;
}

Poly powmod(const Poly& a, const Integer& e, const Poly& m, const Field& F) {
    Poly result{1};
    result = rem(result, m, F);
    Poly base = rem(a, m, F);
    const std::size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
    for (std::size_t i = bits; i-- > 0;) {
        result = rem(mul(result, result, F), m, F);
        if (mpz_tstbit(e.get_mpz_t(), i)) result = rem(mul(result, base, F), m, F);
    }
    return result;
}

bool is_squarefree(const Poly& f, const Field& F) {
    if (f.empty()) return false;
    if (f.size() <= 2) return true;
    Poly d = derivative(f, F);
    if (d.empty()) return false;
    return gcd(f, d, F).size() == 1;
}

namespace {

// Distinct-degree factorization of a monic squarefree polynomial:
// returns pairs (product of all irreducible factors of degree d, d).
std::vector<std::pair<Poly, int>> distinct_degree(const Poly& f_in, const Field& F) {
    std::vector<std::pair<Poly, int>> out;
    Poly f = monic(f_in, F);
    const Poly x{0, 1};
    Poly h = x;  // x^{p^d} mod f
    const Integer p = static_cast<unsigned long>(F.p());
    for (int d = 1; 2 * d <= degree(f); ++d) {
        h = powmod(h, p, f, F);
        Poly g = gcd(f, sub(h, x, F), F);
        if (g.size() > 1) {
            out.emplace_back(g, d);
            f = divmod(f, g, F).first;
            h = rem(h, f, F);
        }
    }
    if (degree(f) > 0) out.emplace_back(f, degree(f));
    return out;
}

void equal_degree(const Poly& f, int d, const Field& F, std::mt19937_64& rng, std::vector<Poly>& out) {
    if (degree(f) == d) {
        out.push_back(monic(f, F));
        return;
    }
    const int n = degree(f);
    std::uniform_int_distribution<Coeff> dist(0, F.p() - 1);
    Integer exponent;
    if (F.p() != 2) {
        mpz_ui_pow_ui(exponent.get_mpz_t(), F.p(), static_cast<unsigned long>(d));
        exponent = (exponent - 1) / 2;
    }
    for (;;) {
        Poly a(static_cast<std::size_t>(n), 0);
        for (auto& c : a) c = dist(rng);
        trim(a);
        if (degree(a) < 1) continue;
        Poly g = gcd(a, f, F);
        if (g.size() > 1 && degree(g) < n) {
            equal_degree(g, d, F, rng, out);
            equal_degree(divmod(f, g, F).first, d, F, rng, out);
            return;
        }
        Poly b;
        if (F.p() == 2) {
            // Trace map from F_{2^d}: a + a^2 + ... + a^{2^{d-1}}.
            Poly term = rem(a, f, F);
            b = term;
            for (int i = 1; i < d; ++i) {
                term = rem(mul(term, term, F), f, F);
                b = add(b, term, F);
            }
        } else {
            b = sub(powmod(a, exponent, f, F), Poly{1}, F);
        }
        g = gcd(b, f, F);
        if (g.size() > 1 && degree(g) < n) {
            equal_degree(g, d, F, rng, out);
            equal_degree(divmod(f, g, F).first, d, F, rng, out);
            return;
        }
    }
}

}  // namespace

std::vector<Poly> factor_squarefree(const Poly& f, const Field& F) {
    if (degree(f) < 1) throw Error(Errc::InvalidArgument, "factor_squarefree of a constant");
    std::mt19937_64 rng(0x5eed5eedULL ^ F.p());
    std::vector<Poly> out;
    for (auto& [g, d] : distinct_degree(f, F)) equal_degree(g, d, F, rng, out);
    std::sort(out.begin(), out.end(), [](const Poly& a, const Poly& b) {
        if (a.size() != b.size()) return a.size() < b.size();
        return a < b;
    });
    return out;
}

std::size_t count_factors(const Poly& f, const Field& F) {
    std::size_t n = 0;
    for (auto& [g, d] : distinct_degree(f, F)) n += static_cast<std::size_t>(degree(g) / d);
    return n;
}

}  // namespace weilalg::modp
