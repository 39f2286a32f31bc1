#include "hopper/configuration.hpp"

#include <algorithm>
#include <sstream>

namespace hopper {

JumpSequence parse_jumps(const std::string& text) {
    std::string cleaned;
    cleaned.reserve(text.size());
    bool comment = false;
    for (char ch : text) {
        if (ch == '#') comment = true;
        if (ch == '\n') comment = false;
        cleaned.push_back(comment ? ' ' : ch);
    }
    JumpSequence out;
    std::istringstream is(cleaned);
    std::string tok;
    while (is >> tok) {
        size_t slash = tok.find('/');
        if (slash == std::string::npos || slash == 0 || slash + 1 == tok.size())
            throw std::invalid_argument("bad jump token: " + tok);
        Jump j;
        j.mover = std::stoi(tok.substr(0, slash));
        j.over = std::stoi(tok.substr(slash + 1));
        if (j.mover < 0 || j.over < 0) throw std::invalid_argument("bad jump token: " + tok);
        out.push_back(j);
    }
    return out;
}

std::string format_jumps(const JumpSequence& s) {
    std::ostringstream os;
    for (size_t i = 0; i < s.size(); ++i) {
        if (i) os << ' ';
        os << s[i].mover << '/' << s[i].over;
    }
    return os.str();
}

Configuration Configuration::rational(int dim, std::vector<std::vector<Rat>> pts) {
    if (dim < 1) throw std::invalid_argument("Configuration: dim >= 1");
    if (pts.size() < 2) throw std::invalid_argument("Configuration: need at least 2 pieces");
    for (const auto& p : pts)
        if (static_cast<int>(p.size()) != dim)
            throw std::invalid_argument("Configuration: point dimension mismatch");
    Configuration c;
    c.backend_ = Backend::Rational;
    c.dim_ = dim;
    c.rat_ = std::move(pts);
    return c;
}

Configuration Configuration::cyclotomic(int order, std::vector<Cyc> pts) {
    if (order < 1) throw std::invalid_argument("Configuration: cyclotomic order >= 1");
    if (pts.size() < 2) throw std::invalid_argument("Configuration: need at least 2 pieces");
    for (const auto& p : pts)
        if (p.order() != order) throw std::invalid_argument("Configuration: point order mismatch");
    Configuration c;
    c.backend_ = Backend::Cyclotomic;
    c.dim_ = 2;
    c.cyc_order_ = order;
    c.cyc_ = std::move(pts);
    return c;
}

Configuration Configuration::regular_ngon(int N) {
    if (N < 3) throw std::invalid_argument("regular_ngon: N >= 3");
    std::vector<Cyc> pts;
    pts.reserve(static_cast<size_t>(N));
    Cyc one = Cyc::integer(N, 1);
    for (int k = 0; k < N; ++k) pts.push_back(Cyc::zeta_pow(N, k) - one);
    return cyclotomic(N, std::move(pts));
}

bool Configuration::special_at_origin() const {
    if (backend_ == Backend::Cyclotomic) return cyc_[0].is_zero();
    for (const Rat& x : rat_[0])
        if (x != 0) return false;
    return true;
}

bool Configuration::operator==(const Configuration& o) const {
    return backend_ == o.backend_ && dim_ == o.dim_ && cyc_order_ == o.cyc_order_ &&
           rat_ == o.rat_ && cyc_ == o.cyc_;
}

std::string Configuration::canonical_key() const {
    // cpp_rational normalizes and Cyc is canonically reduced, so plain
    // serialization is a sound dedup key.
    std::ostringstream os;
    if (backend_ == Backend::Rational) {
        os << "r" << dim_;
        for (const auto& p : rat_) {
            for (const Rat& x : p) os << '|' << x;
        }
    } else {
        os << "c" << cyc_order_;
        for (const auto& p : cyc_) os << '|' << p.to_string();
    }
    return os.str();
}

void validate_jump(const Configuration& c, const Jump& j) {
    const int N = c.pieces();
    if (j.mover < 0 || j.mover >= N || j.over < 0 || j.over >= N)
        throw std::out_of_range("jump piece index out of range");
    if (j.mover == j.over) throw std::invalid_argument("jump: mover equals over");
}

Configuration apply_jump(const Configuration& c, const Jump& j) {
    validate_jump(c, j);
    Configuration out = c;
    if (c.backend() == Backend::Rational) {
        std::vector<Rat>& mv = out.rat_[static_cast<size_t>(j.mover)];
        const std::vector<Rat>& ov = out.rat_[static_cast<size_t>(j.over)];
        for (int k = 0; k < c.dim(); ++k) mv[static_cast<size_t>(k)] = 2 * ov[static_cast<size_t>(k)] - mv[static_cast<size_t>(k)];
    } else {
        Cyc& mv = out.cyc_[static_cast<size_t>(j.mover)];
        const Cyc& ov = out.cyc_[static_cast<size_t>(j.over)];
        mv = ov * Int(2) - mv;
    }
    return out;
}

Configuration apply_sequence(const Configuration& c, const JumpSequence& s) {
    Configuration cur = c;
    for (const Jump& j : s) cur = apply_jump(cur, j);
    return cur;
}

JumpSequence reversed(const JumpSequence& s) {
    JumpSequence out(s.rbegin(), s.rend());
    return out;
}

IntMatrix elementary_involution(int n, int i, int j) {
    if (n < 1) throw std::invalid_argument("elementary_involution: n >= 1");
    if (i < 1 || i > n) throw std::out_of_range("elementary_involution: i in 1..n");
    if (j < 0 || j > n) throw std::out_of_range("elementary_involution: j in 0..n");
    if (i == j) throw std::invalid_argument("elementary_involution: i != j");
    IntMatrix m(n);
    for (int k = 1; k <= n; ++k) m.at(k - 1, k - 1) = (k == i) ? -1 : 1;
    if (j >= 1) m.at(j - 1, i - 1) = 2;
    return m;
}

IntMatrix sequence_to_matrix(const JumpSequence& s, int n) {
    IntMatrix acc = IntMatrix::identity(n);
    for (const Jump& j : s) {
        if (j.mover == 0)
            throw SpecialPieceMoved(
                "sequence moves piece 0; run normalize_sequence first");
        if (j.mover < 1 || j.mover > n || j.over < 0 || j.over > n)
            throw std::out_of_range("sequence_to_matrix: piece index out of range");
        // right-multiply by the involution: column mover <- 2*col(over) - col(mover)
        for (int r = 0; r < n; ++r) {
            Int& x = acc.at(r, j.mover - 1);
            if (j.over == 0)
                x = -x;
            else
                x = 2 * acc.at(r, j.over - 1) - x;
        }
    }
    return acc;
}

Configuration apply_matrix(const Configuration& c, const IntMatrix& A) {
    const int n = c.ordinary();
    if (A.n() != n)
        throw std::invalid_argument("apply_matrix: matrix shape must match the ordinary-piece count");
    if (c.backend() == Backend::Cyclotomic) {
        std::vector<Cyc> pts;
        pts.reserve(static_cast<size_t>(n) + 1);
        pts.push_back(c.cyc_pos(0));
        for (int j = 0; j < n; ++j) {
            Cyc v(c.cyc_order());
            for (int k = 0; k < n; ++k) v += c.cyc_pos(k + 1) * A.at(k, j);
            pts.push_back(std::move(v));
        }
        return Configuration::cyclotomic(c.cyc_order(), std::move(pts));
    }
    std::vector<std::vector<Rat>> pts;
    pts.reserve(static_cast<size_t>(n) + 1);
    pts.push_back(c.rat_pos(0));
    for (int j = 0; j < n; ++j) {
        std::vector<Rat> v(static_cast<size_t>(c.dim()));
        for (int k = 0; k < n; ++k)
            for (int r = 0; r < c.dim(); ++r)
                v[static_cast<size_t>(r)] += c.rat_pos(k + 1)[static_cast<size_t>(r)] * Rat(A.at(k, j));
        pts.push_back(std::move(v));
    }
    return Configuration::rational(c.dim(), std::move(pts));
}

JumpSequence translation_gadget(const Configuration& c, int a) {
    const int N = c.pieces();
    if (a < 1 || a >= N) throw std::invalid_argument("translation_gadget: a must be an ordinary piece");
    JumpSequence s;
    s.reserve(2 * static_cast<size_t>(N - 1));
    for (int p = 0; p < N; ++p)
        if (p != a) s.push_back({p, a});
    for (int p = 1; p < N; ++p) s.push_back({p, 0});
    return s;
}

namespace {

// Exact integer shadow coordinates: position(p) = start(0)-relative combo
// c_p of the initial ordinary offsets, tracked through a sequence.
struct Shadow {
    int n;
    std::vector<std::vector<Int>> c;  // pieces x n

    explicit Shadow(int n_) : n(n_), c(static_cast<size_t>(n_) + 1, std::vector<Int>(static_cast<size_t>(n_))) {
        for (int p = 1; p <= n; ++p) c[static_cast<size_t>(p)][static_cast<size_t>(p - 1)] = 1;
    }
    void jump(const Jump& j) {
        auto& mv = c[static_cast<size_t>(j.mover)];
        const auto& ov = c[static_cast<size_t>(j.over)];
        for (int k = 0; k < n; ++k) mv[static_cast<size_t>(k)] = 2 * ov[static_cast<size_t>(k)] - mv[static_cast<size_t>(k)];
    }
};

}  // namespace

std::pair<std::vector<Int>, JumpSequence> normalize_sequence(const Configuration& c,
                                                             const JumpSequence& s) {
    if (!c.special_at_origin())
        throw std::invalid_argument("normalize_sequence: special piece must start at the origin");
    const int N = c.pieces();
    const int n = N - 1;
    for (const Jump& j : s) validate_jump(c, j);

    // Literal insertion of the gadget after each special jump; the special
    // piece's jump and the gadget's leading jump (same move) cancel.
    JumpSequence out;
    out.reserve(s.size() * 2);
    for (const Jump& j : s) {
        if (j.mover != 0) {
            out.push_back(j);
            continue;
        }
        const int a = j.over;
        for (int p = 1; p < N; ++p)
            if (p != a) out.push_back({p, a});
        for (int p = 1; p < N; ++p) out.push_back({p, 0});
    }

    // w from exact shadow runs of both sequences.
    Shadow orig(n), norm(n);
    for (const Jump& j : s) orig.jump(j);
    for (const Jump& j : out) norm.jump(j);
    std::vector<Int> w(static_cast<size_t>(n));
    for (int k = 0; k < n; ++k) {
        Int diff = orig.c[0][static_cast<size_t>(k)] - norm.c[0][static_cast<size_t>(k)];
        if (diff % 2 != 0) throw std::logic_error("normalize_sequence: odd translation component");
        w[static_cast<size_t>(k)] = diff / 2;
    }
    for (int p = 0; p <= n; ++p)
        for (int k = 0; k < n; ++k)
            if (orig.c[static_cast<size_t>(p)][static_cast<size_t>(k)] -
                    norm.c[static_cast<size_t>(p)][static_cast<size_t>(k)] !=
                2 * w[static_cast<size_t>(k)])
                throw std::logic_error("normalize_sequence: translation mismatch across pieces");
    return {std::move(w), std::move(out)};
}

bool special_piece_lattice_check(const Configuration& c0, const Configuration& c1) {
    if (c0.backend() != Backend::Rational || c1.backend() != Backend::Rational)
        throw std::invalid_argument("special_piece_lattice_check: rational backend required");
    if (!c0.special_at_origin())
        throw std::invalid_argument("special_piece_lattice_check: c0 special piece must be at the origin");
    const int d = c0.dim();
    const int n = c0.ordinary();
    if (c1.dim() != d || c1.pieces() != c0.pieces())
        throw std::invalid_argument("special_piece_lattice_check: shape mismatch");

    // Solve 2*P*w = q over the integers after clearing denominators.
    Int D = 1;
    for (int p = 1; p <= n; ++p)
        for (int k = 0; k < d; ++k)
            D = boost::multiprecision::lcm(D, Int(boost::multiprecision::denominator(c0.rat_pos(p)[static_cast<size_t>(k)])));
    for (int k = 0; k < d; ++k)
        D = boost::multiprecision::lcm(D, Int(boost::multiprecision::denominator(c1.rat_pos(0)[static_cast<size_t>(k)])));

    auto scaled = [&](const Rat& x) {
        Rat v = x * D;
        return Int(boost::multiprecision::numerator(v));
    };
    // columns of A: 2 * D * (ordinary start positions); b = D * special end
    std::vector<std::vector<Int>> A(static_cast<size_t>(d), std::vector<Int>(static_cast<size_t>(n)));
    std::vector<Int> b(static_cast<size_t>(d));
    for (int k = 0; k < d; ++k) {
        for (int p = 1; p <= n; ++p) A[static_cast<size_t>(k)][static_cast<size_t>(p - 1)] = 2 * scaled(c0.rat_pos(p)[static_cast<size_t>(k)]);
        b[static_cast<size_t>(k)] = scaled(c1.rat_pos(0)[static_cast<size_t>(k)]);
    }

    // Column Hermite reduction of A, then greedy triangular solve for b.
    int col = 0;
    for (int row = 0; row < d && col < n; ++row) {
        // gcd-reduce columns col..n-1 on this row
        while (true) {
            int nz = 0, last = -1;
            for (int c = col; c < n; ++c)
                if (A[static_cast<size_t>(row)][static_cast<size_t>(c)] != 0) { ++nz; last = c; }
            if (nz <= 1) {
                if (nz == 1 && last != col)
                    for (int r = 0; r < d; ++r) std::swap(A[static_cast<size_t>(r)][static_cast<size_t>(last)], A[static_cast<size_t>(r)][static_cast<size_t>(col)]);
                break;
            }
            // reduce the largest against the smallest nonzero
            int imax = -1, imin = -1;
            for (int c = col; c < n; ++c) {
                const Int& v = A[static_cast<size_t>(row)][static_cast<size_t>(c)];
                if (v == 0) continue;
                if (imax < 0 || abs_int(v) > abs_int(A[static_cast<size_t>(row)][static_cast<size_t>(imax)])) imax = c;
            }
            for (int c = col; c < n; ++c) {
                const Int& v = A[static_cast<size_t>(row)][static_cast<size_t>(c)];
                if (v == 0 || c == imax) continue;
                if (imin < 0 || abs_int(v) < abs_int(A[static_cast<size_t>(row)][static_cast<size_t>(imin)])) imin = c;
            }
            Int q = A[static_cast<size_t>(row)][static_cast<size_t>(imax)] / A[static_cast<size_t>(row)][static_cast<size_t>(imin)];
            for (int r = 0; r < d; ++r)
                A[static_cast<size_t>(r)][static_cast<size_t>(imax)] -= q * A[static_cast<size_t>(r)][static_cast<size_t>(imin)];
        }
        if (A[static_cast<size_t>(row)][static_cast<size_t>(col)] != 0) ++col;
    }

    // forward-solve: for each row, the active column pivot must divide the
    // residual; columns beyond `col` are zero in all reduced rows.
    std::vector<Int> residual = b;
    int used = 0;
    for (int row = 0; row < d; ++row) {
        Int piv = used < n ? A[static_cast<size_t>(row)][static_cast<size_t>(used)] : Int(0);
        if (piv == 0) {
            if (residual[static_cast<size_t>(row)] != 0) return false;
            continue;
        }
        if (residual[static_cast<size_t>(row)] % piv != 0) return false;
        Int y = residual[static_cast<size_t>(row)] / piv;
        for (int r = 0; r < d; ++r) residual[static_cast<size_t>(r)] -= y * A[static_cast<size_t>(r)][static_cast<size_t>(used)];
        ++used;
    }
    for (int r = 0; r < d; ++r)
        if (residual[static_cast<size_t>(r)] != 0) return false;
    return true;
}

}  // namespace hopper
