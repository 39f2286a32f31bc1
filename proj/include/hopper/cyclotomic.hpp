#pragma once

#include <complex>
#include <optional>
#include <vector>

#include "hopper/bigint.hpp"

namespace hopper {

// Monic N-th cyclotomic polynomial, ascending coefficients, degree phi(N).
// Computed by recursive exact division of x^N - 1 by Phi_d over proper
// divisors d of N; results are memoized.
std::vector<Int> cyclotomic_polynomial(int N);

int euler_phi(int N);

// Element of Z[zeta_N]: integer coefficient vector of length phi(N),
// canonically reduced mod Phi_N, so equality is structural.
class Cyc {
public:
    Cyc() : order_(1), c_(1) {}
    explicit Cyc(int N);                       // zero of order N
    static Cyc integer(int N, const Int& v);   // constant v
    static Cyc zeta(int N);                    // the root zeta_N
    static Cyc zeta_pow(int N, long k);        // zeta_N^k, any k (mod N)

    int order() const { return order_; }
    int degree() const { return static_cast<int>(c_.size()); }
    const Int& coeff(int i) const { return c_[i]; }
    const std::vector<Int>& coeffs() const { return c_; }

    bool is_zero() const;
    bool operator==(const Cyc& o) const { return order_ == o.order_ && c_ == o.c_; }
    bool operator!=(const Cyc& o) const { return !(*this == o); }
    // Total order on equal-order elements (coefficient lex), for multisets.
    bool operator<(const Cyc& o) const;

    Cyc operator+(const Cyc& o) const;
    Cyc operator-(const Cyc& o) const;
    Cyc operator-() const;
    Cyc operator*(const Cyc& o) const;
    Cyc operator*(const Int& k) const;
    Cyc& operator+=(const Cyc& o) { return *this = *this + o; }
    Cyc& operator-=(const Cyc& o) { return *this = *this - o; }

    // Complex conjugate: zeta^k -> zeta^(N-k).
    Cyc conj() const;
    // Galois map zeta -> zeta^k, gcd(k, N) = 1.
    Cyc galois(long k) const;
    Cyc pow(unsigned long e) const;

    // Exact quotient if o divides *this in Z[zeta_N]; nullopt otherwise.
    std::optional<Cyc> divide_exact(const Cyc& o) const;

    std::complex<double> embed() const;  // zeta_N -> exp(2*pi*i/N)

    // Exact sign of a real element (conj-invariant) under the standard
    // embedding: -1, 0, +1. Throws if the input is not real or the float
    // ladder cannot separate it from zero.
    int sign_real() const;

    std::string to_string() const;

private:
    static Cyc from_raw(int N, std::vector<Int> raw);  // reduce mod Phi_N

    int order_;
    std::vector<Int> c_;

    friend class CycTables;
};

}  // namespace hopper
