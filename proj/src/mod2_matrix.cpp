#include "hopper/mod2_matrix.hpp"

namespace hopper {

Mod2Matrix reduce_mod2(const IntMatrix& m) {
    Mod2Matrix out(m.n());
    for (int r = 0; r < m.n(); ++r)
        for (int c = 0; c < m.n(); ++c)
            out.set(r, c, static_cast<int>(m.at(r, c) & 1));
    return out;
}

Mod2Matrix mod2_mul(const Mod2Matrix& a, const Mod2Matrix& b) {
    if (a.n_ != b.n_) throw std::invalid_argument("mod2_mul: dimension mismatch");
    Mod2Matrix out(a.n_);
    for (int r = 0; r < a.n_; ++r) {
        uint64_t acc = 0;
        uint64_t row = a.rows_[r];
        while (row) {
            int k = __builtin_ctzll(row);
            row &= row - 1;
            acc ^= b.rows_[k];
        }
        out.rows_[r] = acc;
    }
    return out;
}

bool mod2_invertible(const Mod2Matrix& m) {
    std::vector<uint64_t> rows = m.rows_;
    const int n = m.n_;
    int rank = 0;
    for (int c = 0; c < n && rank < n; ++c) {
        int p = -1;
        for (int r = rank; r < n; ++r)
            if ((rows[r] >> c) & 1U) { p = r; break; }
        if (p < 0) continue;
        std::swap(rows[rank], rows[p]);
        for (int r = 0; r < n; ++r)
            if (r != rank && ((rows[r] >> c) & 1U)) rows[r] ^= rows[rank];
        ++rank;
    }
    return rank == n;
}

unsigned long mod2_order(const Mod2Matrix& m) {
    if (!mod2_invertible(m)) throw std::invalid_argument("mod2_order: singular matrix has no order");
    const unsigned long cap = m.n() >= 64 ? ~0UL : ((1UL << m.n()) - 1UL);
    Mod2Matrix acc = m;
    unsigned long t = 1;
    while (!acc.is_identity()) {
        acc = mod2_mul(acc, m);
        ++t;
        if (t > cap) throw std::logic_error("mod2_order: exceeded the 2^n - 1 cap");
    }
    return t;
}

}  // namespace hopper
