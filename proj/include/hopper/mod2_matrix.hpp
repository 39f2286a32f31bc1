#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "hopper/int_matrix.hpp"

namespace hopper {

// Square matrix over GF(2), one bit-packed word row per matrix row (n <= 64
// covers every use here; larger n would need multi-word rows).
class Mod2Matrix {
public:
    explicit Mod2Matrix(int n) : n_(n), rows_(static_cast<size_t>(n), 0) {
        if (n < 1 || n > 64) throw std::invalid_argument("Mod2Matrix: need 1 <= n <= 64");
    }

    static Mod2Matrix identity(int n) {
        Mod2Matrix m(n);
        for (int i = 0; i < n; ++i) m.set(i, i, 1);
        return m;
    }

    int n() const { return n_; }

    int get(int r, int c) const { return static_cast<int>((rows_[r] >> c) & 1U); }
    void set(int r, int c, int v) {
        if (v & 1)
            rows_[r] |= (uint64_t{1} << c);
        else
            rows_[r] &= ~(uint64_t{1} << c);
    }

    bool operator==(const Mod2Matrix& o) const { return n_ == o.n_ && rows_ == o.rows_; }
    bool operator!=(const Mod2Matrix& o) const { return !(*this == o); }

    bool is_identity() const {
        for (int i = 0; i < n_; ++i)
            if (rows_[i] != (uint64_t{1} << i)) return false;
        return true;
    }

    friend Mod2Matrix mod2_mul(const Mod2Matrix& a, const Mod2Matrix& b);
    friend bool mod2_invertible(const Mod2Matrix& m);

private:
    int n_;
    std::vector<uint64_t> rows_;
};

Mod2Matrix reduce_mod2(const IntMatrix& m);
Mod2Matrix mod2_mul(const Mod2Matrix& a, const Mod2Matrix& b);
bool mod2_invertible(const Mod2Matrix& m);

// Smallest t >= 1 with m^t = I over GF(2). Throws on singular input, and on
// exceeding the 2^n - 1 cap (the largest element order in GL(n,2)).
unsigned long mod2_order(const Mod2Matrix& m);

}  // namespace hopper
