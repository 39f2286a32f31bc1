#include "hopper/int_matrix.hpp"

#include <sstream>
#include <utility>

namespace hopper {

IntMatrix mat_mul(const IntMatrix& a, const IntMatrix& b) {
    if (a.n() != b.n()) throw std::invalid_argument("mat_mul: dimension mismatch");
    const int n = a.n();
    IntMatrix out(n);
    for (int r = 0; r < n; ++r)
        for (int k = 0; k < n; ++k) {
            const Int& arj = a.at(r, k);
            if (arj == 0) continue;
            for (int c = 0; c < n; ++c) out.at(r, c) += arj * b.at(k, c);
        }
    return out;
}

IntMatrix mat_pow(const IntMatrix& a, unsigned long e) {
    IntMatrix base = a;
    IntMatrix acc = IntMatrix::identity(a.n());
    while (e > 0) {
        if (e & 1UL) acc = mat_mul(acc, base);
        e >>= 1UL;
        if (e > 0) base = mat_mul(base, base);
    }
    return acc;
}

IntMatrix mat_add(const IntMatrix& a, const IntMatrix& b) {
    if (a.n() != b.n()) throw std::invalid_argument("mat_add: dimension mismatch");
    IntMatrix out(a.n());
    for (int r = 0; r < a.n(); ++r)
        for (int c = 0; c < a.n(); ++c) out.at(r, c) = a.at(r, c) + b.at(r, c);
    return out;
}

Int det(const IntMatrix& m) {
    const int n = m.n();
    IntMatrix w = m;
    Int prev = 1;
    int sign = 1;
    for (int k = 0; k < n - 1; ++k) {
        if (w.at(k, k) == 0) {
            int p = -1;
            for (int r = k + 1; r < n; ++r)
                if (w.at(r, k) != 0) { p = r; break; }
            if (p < 0) return 0;
            for (int c = k; c < n; ++c) std::swap(w.at(k, c), w.at(p, c));
            sign = -sign;
        }
        for (int r = k + 1; r < n; ++r) {
            for (int c = k + 1; c < n; ++c) {
                Int v = w.at(r, c) * w.at(k, k) - w.at(r, k) * w.at(k, c);
                // Bareiss: division by the previous pivot is exact.
                w.at(r, c) = v / prev;
            }
            w.at(r, k) = 0;
        }
        prev = w.at(k, k);
    }
    return sign > 0 ? w.at(n - 1, n - 1) : Int(-w.at(n - 1, n - 1));
}

std::vector<Int> char_poly(const IntMatrix& m) {
    // Faddeev-LeVerrier: exact over the integers for integer matrices.
    const int n = m.n();
    std::vector<Int> c(static_cast<size_t>(n) + 1);
    c[n] = 1;
    IntMatrix mk = IntMatrix::identity(n);  // M_0 = I
    for (int k = 1; k <= n; ++k) {
        mk = mat_mul(m, mk);
        Int tr = 0;
        for (int i = 0; i < n; ++i) tr += mk.at(i, i);
        if (tr % k != 0) throw std::logic_error("char_poly: inexact trace division");
        Int ck = -tr / k;
        c[n - k] = ck;
        for (int i = 0; i < n; ++i) mk.at(i, i) += ck;
    }
    return c;
}

std::string IntMatrix::to_string() const {
    std::ostringstream os;
    for (int r = 0; r < n_; ++r) {
        os << (r == 0 ? "[" : " ");
        os << "[";
        for (int c = 0; c < n_; ++c) {
            if (c) os << ", ";
            os << at(r, c);
        }
        os << "]";
        if (r + 1 < n_) os << "\n";
    }
    os << "]";
    return os.str();
}

}  // namespace hopper
