#include "hopper/decomposer.hpp"

#include <algorithm>
#include <numeric>
#include <optional>
#include <tuple>
#include <vector>

namespace hopper {

bool is_member(const IntMatrix& a) {
    const int n = a.n();
    for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c)
            if ((a.at(r, c) - Int(r == c ? 1 : 0)) % 2 != 0) return false;
    Int dv = det(a);
    return dv == 1 || dv == -1;
}

namespace {

// Records admissible column ops while mutating the working matrix.
// negate(i):          col_i <- -col_i
// add_twice(i,j,s,q): col_i <- col_i + 2*s*q*col_j   (a batch of q ops)
struct Reducer {
    int n;
    IntMatrix W;
    struct Op {
        bool neg;
        int i, j, s;
        Int q;
    };
    std::vector<Op> ops;

    explicit Reducer(const IntMatrix& a) : n(a.n()), W(a) {}

    void negate(int i) {
        for (int r = 0; r < n; ++r) {
            Int& x = W.at(r, i - 1);
            x = -x;
        }
        ops.push_back({true, i, 0, 0, Int(1)});
    }
    void add_twice(int i, int j, int s, Int q) {
        Int f = 2 * s * q;
        for (int r = 0; r < n; ++r) W.at(r, i - 1) += f * W.at(r, j - 1);
        ops.push_back({false, i, j, s, std::move(q)});
    }
};

// Integral Gram data for the given columns: d[k] = det Gram(prefix k),
// lam[i][j] the Cohen-style scaled projections.
void gram_scratch(const std::vector<std::vector<Int>>& cols, std::vector<Int>& d,
                  std::vector<std::vector<Int>>& lam) {
    const size_t m = cols.size();
    d.assign(m + 1, Int(1));
    lam.assign(m, std::vector<Int>(m, Int(0)));
    for (size_t i = 0; i < m; ++i) {
        for (size_t j = 0; j <= i; ++j) {
            Int u = 0;
            for (size_t r = 0; r < cols[i].size(); ++r) u += cols[i][r] * cols[j][r];
            for (size_t k = 0; k < j; ++k) {
                u = d[k + 1] * u - lam[i][k] * lam[j][k];
                if (u % d[k] != 0) throw std::logic_error("gram: inexact division");
                u /= d[k];
            }
            if (j < i)
                lam[i][j] = u;
            else
                d[i + 1] = u;
        }
    }
}

// LLL over the even-translation group: only doubled column additions are
// recorded (they are admissible); swaps are virtual, reordering elimination
// via `order` without touching the matrix.
void even_lll(Reducer& rec, std::vector<int> order) {
    const int n = rec.n;
    const size_t m = order.size();
    if (m < 2) return;

    auto colvec = [&](size_t pos) {
        std::vector<Int> v(static_cast<size_t>(n));
        for (int r = 0; r < n; ++r) v[static_cast<size_t>(r)] = rec.W.at(r, order[pos] - 1);
        return v;
    };
    std::vector<std::vector<Int>> cols;
    cols.reserve(m);
    for (size_t p = 0; p < m; ++p) cols.push_back(colvec(p));
    std::vector<Int> d;
    std::vector<std::vector<Int>> lam;
    gram_scratch(cols, d, lam);

    auto red = [&](size_t k, size_t l) {
        Int q = round_div(lam[k][l], 2 * d[l + 1]);
        if (q == 0) return;
        rec.add_twice(order[k], order[l], q > 0 ? -1 : 1, abs_int(q));
        lam[k][l] -= 2 * q * d[l + 1];
        for (size_t i = 0; i < l; ++i) lam[k][i] -= 2 * q * lam[l][i];
    };
    auto swap_step = [&](size_t k) {
        std::swap(order[k], order[k - 1]);
        for (size_t j = 0; j + 1 < k; ++j) std::swap(lam[k][j], lam[k - 1][j]);
        Int lb = lam[k][k - 1];
        Int B = d[k - 1] * d[k + 1] + lb * lb;
        if (B % d[k] != 0) throw std::logic_error("lll: inexact swap");
        B /= d[k];
        for (size_t i = k + 1; i < m; ++i) {
            Int t = lam[i][k];
            Int num = lam[i][k - 1] * d[k + 1] - lb * t;
            if (num % d[k] != 0) throw std::logic_error("lll: inexact swap");
            lam[i][k] = num / d[k];
            num = B * t + lb * lam[i][k];
            if (num % d[k + 1] != 0) throw std::logic_error("lll: inexact swap");
            lam[i][k - 1] = num / d[k + 1];
        }
        d[k] = B;
    };

    size_t k = 1;
    long guard = 0;
    while (k < m) {
        if (++guard >= 100000) throw std::logic_error("lll: no convergence");
        red(k, k - 1);
        if (4 * d[k + 1] * d[k - 1] < 3 * d[k] * d[k] - 4 * lam[k][k - 1] * lam[k][k - 1]) {
            swap_step(k);
            k = std::max<size_t>(1, k - 1);
        } else {
            for (size_t l = k - 1; l-- > 0;) red(k, l);
            ++k;
        }
    }
}

// Greedy pairwise even reduction of the first m columns by squared norm;
// skip_source (0-based) is never used as a source column.
void size_reduce(Reducer& rec, int m, int skip_source) {
    const int n = rec.n;
    bool changed = true;
    int passes = 0;
    while (changed && passes < 100) {
        changed = false;
        ++passes;
        for (int a = 0; a < m; ++a) {
            for (int b = 0; b < m; ++b) {
                if (a == b || b == skip_source) continue;
                Int nb = 0, dot = 0;
                for (int r = 0; r < n; ++r) {
                    nb += rec.W.at(r, b) * rec.W.at(r, b);
                    dot += rec.W.at(r, a) * rec.W.at(r, b);
                }
                if (nb == 0) continue;
                Int q = round_div(dot, 2 * nb);
                if (q == 0) continue;
                if (4 * q * q * nb - 4 * q * dot >= 0) continue;
                rec.add_twice(a + 1, b + 1, q > 0 ? -1 : 1, abs_int(q));
                changed = true;
            }
        }
    }
}

std::vector<Reducer::Op> decompose_ops(const IntMatrix& a) {
    const int n = a.n();
    Reducer rec(a);
    std::vector<int> all(static_cast<size_t>(n));
    std::iota(all.begin(), all.end(), 1);
    even_lll(rec, all);

    for (int m = n; m >= 2; --m) {
        const int r = m - 1;
        while (true) {
            std::vector<std::pair<Int, int>> nz;
            for (int c = 0; c < m; ++c)
                if (rec.W.at(r, c) != 0) nz.push_back({abs_int(rec.W.at(r, c)), c});
            if (nz.size() <= 1) break;
            int imax = std::max_element(nz.begin(), nz.end())->second;
            const Int x = rec.W.at(r, imax);

            struct Best {
                Int na, q;
                int s, c;
            };
            std::optional<Best> best;
            for (const auto& entry : nz) {
                const int c = entry.second;
                if (c == imax) continue;
                const Int y = rec.W.at(r, c);
                Int t = y > 0 ? round_div(x, 2 * y) : -round_div(x, -2 * y);
                if (t == 0) t = (sign_of(x) == sign_of(y)) ? 1 : -1;
                const int s = t > 0 ? 1 : -1;
                Int q = abs_int(t);
                Int na = abs_int(x - 2 * s * q * y);
                if (na < abs_int(x) &&
                    (!best || std::tie(na, q) < std::tie(best->na, best->q)))
                    best = Best{std::move(na), std::move(q), s, c};
            }
            if (!best) throw std::logic_error("decompose: stuck row reduction");
            rec.add_twice(imax + 1, best->c + 1, -best->s, best->q);
        }
        if (abs_int(rec.W.at(r, m - 1)) != 1)
            throw std::logic_error("decompose: reduced row is not a unit");
        if (rec.W.at(r, m - 1) == -1) rec.negate(m);
        if (m >= 3) {
            std::vector<int> block(static_cast<size_t>(m - 1));
            std::iota(block.begin(), block.end(), 1);
            even_lll(rec, block);
        }
        size_reduce(rec, m, m - 1);
    }
    if (rec.W.at(0, 0) == -1) rec.negate(1);

    for (int mcol = 2; mcol <= n; ++mcol) {
        for (int k = mcol - 1; k >= 1; --k) {
            const Int v = rec.W.at(k - 1, mcol - 1);
            if (v % 2 != 0) throw std::logic_error("decompose: odd upper entry");
            if (v != 0) rec.add_twice(mcol, k, v > 0 ? -1 : 1, abs_int(v) / 2);
        }
    }
    if (!rec.W.is_identity()) throw std::logic_error("decompose: reduction incomplete");
    return std::move(rec.ops);
}

constexpr long kLiteralThreshold = 8;

// Appends the word for col_target += sgn*2*m*col_src. Large batches use the
// exact commutator contraction through a scratch column (needs n >= 3).
void emit_add(JumpSequence& out, int src, int target, const Int& m, int sgn, int n) {
    if (m <= kLiteralThreshold || n < 3) {
        if (m > 100000000L)  // only reachable for n = 2, which has no scratch column
            throw std::length_error("decompose: literal word too long");
        const long reps = m.convert_to<long>();
        for (long t = 0; t < reps; ++t) {
            if (sgn > 0) {
                out.push_back({target, 0});
                out.push_back({target, src});
            } else {
                out.push_back({target, src});
                out.push_back({target, 0});
            }
        }
        return;
    }
    const Int a = isqrt_int(m / 2);
    const Int r = m - 2 * a * a;
    int h = 1;
    while (h == src || h == target) ++h;
    emit_add(out, src, h, a, 1, n);
    emit_add(out, h, target, a, sgn, n);
    emit_add(out, src, h, a, -1, n);
    emit_add(out, h, target, a, -sgn, n);
    if (r != 0) emit_add(out, src, target, r, sgn, n);
}

}  // namespace

JumpSequence decompose(const IntMatrix& a) {
    if (!is_member(a)) throw MembershipError("decompose: matrix is not in the group");
    const int n = a.n();
    auto ops = decompose_ops(a);
    JumpSequence jumps;
    for (auto it = ops.rbegin(); it != ops.rend(); ++it) {
        if (it->neg)
            jumps.push_back({it->i, 0});
        else
            emit_add(jumps, it->j, it->i, it->q, -it->s, n);
    }
    return jumps;
}

}  // namespace hopper
