#pragma once

// Test data: elliptic isogeny classes by trace (Waterhouse), curve zeta data
// and products of curves.

#include <cmath>
#include <vector>

#include "weilalg/motives.hpp"

namespace corpus {

using namespace weilalg;

inline bool is_square(long n, long* root = nullptr) {
    long r = std::lround(std::sqrt(static_cast<double>(n)));
    if (root) *root = r;
    return r * r == n;
}

/// Traces a with 1 - aT + qT^2 the L-polynomial of an elliptic curve over F_q.
inline std::vector<long> elliptic_traces(long q) {
    const PrimePower b = PrimePower::from_q(q);
    const long p = b.p.get_si();
    std::vector<long> out;
    for (long a = -2 * q; a <= 2 * q; ++a) {
        if (a * a > 4 * q) continue;
        long r = 0;
        bool ok = false;
        if (a % p != 0) ok = true;
        else if (b.a % 2 == 0) {
            is_square(q, &r);
            ok = a == 2 * r || a == -2 * r || ((a == r || a == -r) && p % 3 != 1) || (a == 0 && p % 4 != 1);
        } else {
            ok = a == 0 || (p == 2 && a * a == 2 * q) || (p == 3 && a * a == 3 * q);
        }
        if (ok) out.push_back(a);
    }
    return out;
}

inline Polynomial elliptic_l(long q, long a) { return Polynomial{1, -a, q}; }

inline ZetaData curve(long q, long a) { return zeta_from_curve(elliptic_l(q, a), PrimePower::from_q(q)); }

inline ZetaData point(long q) { return ZetaData{PrimePower::from_q(q), 0, {Polynomial{1, -1}}}; }

inline ZetaData projective_line(long q) { return zeta_from_curve(Polynomial{1}, PrimePower::from_q(q)); }

}  // namespace corpus
