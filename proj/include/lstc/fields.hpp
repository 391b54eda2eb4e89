// Coefficient fields for the linear algebra layer: exact rationals and
// prime fields with a runtime modulus. Algorithms receive a field object
// and work with its element type.

#pragma once

#include "rational.hpp"

#include <stdexcept>
#include <string>

namespace lstc {

struct RationalField {
    using Elem = Rational;

    Elem zero() const { return Rational(0); }
    Elem one() const { return Rational(1); }
    Elem add(const Elem& a, const Elem& b) const { return a + b; }
    Elem sub(const Elem& a, const Elem& b) const { return a - b; }
    Elem mul(const Elem& a, const Elem& b) const { return a * b; }
    Elem neg(const Elem& a) const { return -a; }
    Elem inv(const Elem& a) const
    {
        if (a == 0)
            throw std::domain_error("rational field: inverse of zero");
        return Rational(1) / a;
    }
    bool is_zero(const Elem& a) const { return a == 0; }
    Elem from_int(const Int& n) const { return Rational(n); }
    std::string to_string(const Elem& a) const { return to_fraction_string(a); }
    std::string name() const { return "Q"; }
};

/// F_p for a prime p < 2^31; elements are canonical representatives 0..p-1.
struct PrimeField {
    using Elem = long long;

    long long p;

    explicit PrimeField(long long prime) : p(prime)
    {
        if (prime < 2 || prime > 0x7fffffffLL)
            throw std::domain_error("prime field: modulus out of range");
        for (long long d = 2; d * d <= prime; ++d)
            if (prime % d == 0)
                throw std::domain_error("prime field: modulus " + std::to_string(prime) +
                                        " is not prime");
    }

    Elem zero() const { return 0; }
    Elem one() const { return 1; }
    Elem add(Elem a, Elem b) const { return (a + b) % p; }
    Elem sub(Elem a, Elem b) const { return ((a - b) % p + p) % p; }
    Elem mul(Elem a, Elem b) const { return (a * b) % p; }
    Elem neg(Elem a) const { return (p - a) % p; }
    Elem inv(Elem a) const
    {
        a %= p;
        if (a == 0)
            throw std::domain_error("prime field: inverse of zero");
        // extended Euclid on (a, p)
        long long r0 = a, r1 = p, s0 = 1, s1 = 0;
        while (r1 != 0) {
            const long long q = r0 / r1;
            r0 -= q * r1;
            std::swap(r0, r1);
            s0 -= q * s1;
            std::swap(s0, s1);
        }
        return (s0 % p + p) % p;
    }
    bool is_zero(Elem a) const { return a % p == 0; }
    Elem from_int(const Int& n) const
    {
        Int m = n % p;
        if (m < 0)
            m += p;
        return m.convert_to<long long>();
    }
    std::string to_string(Elem a) const { return std::to_string(a); }
    std::string name() const { return "F" + std::to_string(p); }
};

}  // namespace lstc
