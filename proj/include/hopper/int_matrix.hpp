#pragma once

#include <cstddef>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <vector>

#include "hopper/bigint.hpp"

namespace hopper {

// Square matrix of arbitrary-precision integers, row-major.
class IntMatrix {
public:
    explicit IntMatrix(int n) : n_(n), e_(static_cast<size_t>(n) * n) {
        if (n < 1) throw std::invalid_argument("IntMatrix: n must be >= 1");
    }

    IntMatrix(std::initializer_list<std::initializer_list<long long>> rows)
        : n_(static_cast<int>(rows.size())), e_(rows.size() * rows.size()) {
        if (n_ < 1) throw std::invalid_argument("IntMatrix: empty init");
        int r = 0;
        for (const auto& row : rows) {
            if (static_cast<int>(row.size()) != n_)
                throw std::invalid_argument("IntMatrix: ragged init");
            int c = 0;
            for (long long v : row) at(r, c++) = v;
            ++r;
        }
    }

    static IntMatrix identity(int n) {
        IntMatrix m(n);
        for (int i = 0; i < n; ++i) m.at(i, i) = 1;
        return m;
    }

    int n() const { return n_; }

    Int& at(int r, int c) { return e_[static_cast<size_t>(r) * n_ + c]; }
    const Int& at(int r, int c) const { return e_[static_cast<size_t>(r) * n_ + c]; }

    bool operator==(const IntMatrix& o) const { return n_ == o.n_ && e_ == o.e_; }
    bool operator!=(const IntMatrix& o) const { return !(*this == o); }

    bool is_identity() const {
        for (int r = 0; r < n_; ++r)
            for (int c = 0; c < n_; ++c)
                if (at(r, c) != (r == c ? 1 : 0)) return false;
        return true;
    }

    Int max_abs_entry() const {
        Int m = 0;
        for (const Int& v : e_)
            if (abs_int(v) > m) m = abs_int(v);
        return m;
    }

    std::string to_string() const;

private:
    int n_;
    std::vector<Int> e_;
};

IntMatrix mat_mul(const IntMatrix& a, const IntMatrix& b);
IntMatrix mat_pow(const IntMatrix& a, unsigned long e);
IntMatrix mat_add(const IntMatrix& a, const IntMatrix& b);

// Exact determinant, fraction-free Bareiss elimination.
Int det(const IntMatrix& m);

// Coefficients of det(xI - m), ascending degree, exact.
std::vector<Int> char_poly(const IntMatrix& m);

}  // namespace hopper
