#include "weilalg/prime_power.hpp"

#include "weilalg/error.hpp"

namespace weilalg {

bool is_prime(const Integer& n) {
    if (n < 2) return false;
    for (unsigned long d = 2; d < 1000000; ++d) {
        if (d * d > n) return true;
        if (mpz_divisible_ui_p(n.get_mpz_t(), d)) return n == d;
    }
    const Integer nm1 = n - 1;
    Integer d = nm1;
    unsigned s = 0;
    while (mpz_even_p(d.get_mpz_t())) {
        d /= 2;
        ++s;
    }
    for (unsigned long base : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
        Integer x;
        const Integer b = base;
        mpz_powm(x.get_mpz_t(), b.get_mpz_t(), d.get_mpz_t(), n.get_mpz_t());
        if (x == 1 || x == nm1) continue;
        bool witness = true;
        for (unsigned r = 1; r < s && witness; ++r) {
            x = (x * x) % n;
            if (x == nm1) witness = false;
        }
        if (witness) return false;
    }
    return true;
}

PrimePower PrimePower::from_pa(const Integer& p, unsigned a) {
    if (a == 0 || !is_prime(p)) throw Error(Errc::InvalidArgument, p.get_str() + "^" + std::to_string(a) + " is not a prime power");
    PrimePower r;
    r.p = p;
    r.a = a;
    mpz_pow_ui(r.q.get_mpz_t(), p.get_mpz_t(), a);
    return r;
}

PrimePower PrimePower::from_q(const Integer& q) {
    if (q < 2) throw Error(Errc::InvalidArgument, q.get_str() + " is not a prime power");
    // The smallest divisor > 1 is prime; q must be a power of it.
    Integer p = 0;
    for (unsigned long d = 2; d < 1000000; ++d) {
        if (d * d > q) break;
        if (mpz_divisible_ui_p(q.get_mpz_t(), d)) {
            p = d;
            break;
        }
    }
    if (p == 0) {
        // No small factor: q is a prime or a perfect power of a large prime.
        for (unsigned long k = 64; k >= 2; --k) {
            Integer root;
            if (mpz_root(root.get_mpz_t(), q.get_mpz_t(), k) != 0 && is_prime(root)) return from_pa(root, k);
        }
        return from_pa(q, 1);
    }
    unsigned a = 0;
    Integer rest = q;
    while (mpz_divisible_p(rest.get_mpz_t(), p.get_mpz_t())) {
        rest /= p;
        ++a;
    }
    if (rest != 1) throw Error(Errc::InvalidArgument, q.get_str() + " is not a prime power");
    return from_pa(p, a);
}

}  // namespace weilalg
