#include "hopper/similarity.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace hopper {

namespace {

bool all_zero_cyc(const std::vector<Cyc>& v) {
    for (const Cyc& z : v)
        if (!z.is_zero()) return false;
    return true;
}

bool multiset_equal(std::vector<Cyc> a, std::vector<Cyc> b) {
    if (a.size() != b.size()) return false;
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    return a == b;
}

Similarity cyc_similarity(const std::vector<Cyc>& u, const std::vector<Cyc>& w) {
    Similarity res;
    const size_t N = u.size();
    if (w.size() != N) return res;
    if (all_zero_cyc(u) || all_zero_cyc(w)) {
        if (all_zero_cyc(u) && all_zero_cyc(w)) {
            res.similar = true;
            res.scale_cmp = 0;
            res.scale = 1.0;
        }
        return res;
    }
    size_t ref = 0;
    while (u[ref].is_zero()) ++ref;
    const Cyc& ur = u[ref];
    const Cyc ur_conj = ur.conj();

    std::vector<Cyc> rhs_direct(N), rhs_refl(N);
    for (size_t j = 0; j < N; ++j) {
        rhs_direct[j] = w[j] * ur;
        rhs_refl[j] = w[j] * ur_conj;
    }

    auto finish = [&](const Cyc& cand, bool refl) {
        res.similar = true;
        res.reflected = refl;
        res.scale_sq_num = cand * cand.conj();
        res.scale_sq_den = ur * ur.conj();
        res.scale_cmp = (*res.scale_sq_num - *res.scale_sq_den).sign_real();
        res.scale = std::abs(cand.embed()) / std::abs(ur.embed());
    };

    std::vector<Cyc> tried;
    for (size_t c = 0; c < N; ++c) {
        const Cyc& cand = w[c];
        if (cand.is_zero()) continue;
        if (std::find(tried.begin(), tried.end(), cand) != tried.end()) continue;
        tried.push_back(cand);
        std::vector<Cyc> lhs(N);
        for (size_t j = 0; j < N; ++j) lhs[j] = u[j] * cand;
        if (multiset_equal(lhs, rhs_direct)) {
            finish(cand, false);
            return res;
        }
    }
    for (const Cyc& cand : tried) {
        std::vector<Cyc> lhs(N);
        for (size_t j = 0; j < N; ++j) lhs[j] = u[j].conj() * cand;
        if (multiset_equal(lhs, rhs_refl)) {
            finish(cand, true);
            return res;
        }
    }
    return res;
}

using RatPt = std::vector<Rat>;

bool all_zero_rat(const std::vector<RatPt>& v) {
    for (const RatPt& p : v)
        for (const Rat& x : p)
            if (x != 0) return false;
    return true;
}

bool multiset_equal_rat(std::vector<RatPt> a, std::vector<RatPt> b) {
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    return a == b;
}

Similarity rat_similarity(const std::vector<RatPt>& u, const std::vector<RatPt>& w) {
    Similarity res;
    const size_t N = u.size();
    if (all_zero_rat(u) || all_zero_rat(w)) {
        if (all_zero_rat(u) && all_zero_rat(w)) {
            res.similar = true;
            res.scale_cmp = 0;
            res.scale = 1.0;
            res.scale_sq = Rat(1);
        }
        return res;
    }
    size_t ref = 0;
    while (u[ref][0] == 0 && u[ref][1] == 0) ++ref;
    const Rat ux = u[ref][0], uy = u[ref][1];
    const Rat nrm = ux * ux + uy * uy;

    std::vector<RatPt> target(w);

    auto try_map = [&](const Rat& a, const Rat& b, bool refl) {
        std::vector<RatPt> img(N);
        for (size_t j = 0; j < N; ++j) {
            Rat x = u[j][0], y = refl ? -u[j][1] : u[j][1];
            img[j] = {a * x - b * y, b * x + a * y};
        }
        if (!multiset_equal_rat(img, target)) return false;
        res.similar = true;
        res.reflected = refl;
        res.scale_sq = a * a + b * b;
        res.scale_cmp = *res.scale_sq > 1 ? 1 : (*res.scale_sq == 1 ? 0 : -1);
        res.scale = std::sqrt(static_cast<double>(*res.scale_sq));
        return true;
    };

    std::vector<RatPt> tried;
    for (size_t c = 0; c < N; ++c) {
        const Rat wx = w[c][0], wy = w[c][1];
        if (wx == 0 && wy == 0) continue;
        if (std::find(tried.begin(), tried.end(), w[c]) != tried.end()) continue;
        tried.push_back(w[c]);
        if (try_map((ux * wx + uy * wy) / nrm, (ux * wy - uy * wx) / nrm, false)) return res;
    }
    for (const RatPt& cand : tried) {
        const Rat wx = cand[0], wy = cand[1];
        if (try_map((ux * wx - uy * wy) / nrm, (ux * wy + uy * wx) / nrm, true)) return res;
    }
    return res;
}

void check_comparable(const Configuration& c0, const Configuration& c1) {
    if (c0.backend() != c1.backend() || c0.pieces() != c1.pieces() || c0.dim() != c1.dim())
        throw std::invalid_argument("similarity: configurations are not comparable");
    if (c0.backend() == Backend::Cyclotomic && c0.cyc_order() != c1.cyc_order())
        throw std::invalid_argument("similarity: cyclotomic order mismatch");
    if (c0.backend() == Backend::Rational && c0.dim() != 2)
        throw std::invalid_argument("similarity: rational backend supports dim 2 only");
}

std::vector<Cyc> centered_cyc(const Configuration& c) {
    const int N = c.pieces();
    Cyc sum(c.cyc_order());
    for (int p = 0; p < N; ++p) sum += c.cyc_pos(p);
    std::vector<Cyc> out;
    out.reserve(static_cast<size_t>(N));
    for (int p = 0; p < N; ++p) out.push_back(c.cyc_pos(p) * Int(N) - sum);
    return out;
}

std::vector<RatPt> centered_rat(const Configuration& c) {
    const int N = c.pieces();
    RatPt sum(static_cast<size_t>(c.dim()));
    for (int p = 0; p < N; ++p)
        for (int k = 0; k < c.dim(); ++k) sum[static_cast<size_t>(k)] += c.rat_pos(p)[static_cast<size_t>(k)];
    std::vector<RatPt> out(static_cast<size_t>(N), RatPt(static_cast<size_t>(c.dim())));
    for (int p = 0; p < N; ++p)
        for (int k = 0; k < c.dim(); ++k)
            out[static_cast<size_t>(p)][static_cast<size_t>(k)] =
                Rat(N) * c.rat_pos(p)[static_cast<size_t>(k)] - sum[static_cast<size_t>(k)];
    return out;
}

}  // namespace

Similarity similar_fixing_origin(const Configuration& c0, const Configuration& c1) {
    check_comparable(c0, c1);
    if (c0.backend() == Backend::Cyclotomic) return cyc_similarity(c0.cyc_points(), c1.cyc_points());
    return rat_similarity(c0.rat_points(), c1.rat_points());
}

Similarity similar_up_to_translation(const Configuration& c0, const Configuration& c1) {
    check_comparable(c0, c1);
    if (c0.backend() == Backend::Cyclotomic)
        return cyc_similarity(centered_cyc(c0), centered_cyc(c1));
    return rat_similarity(centered_rat(c0), centered_rat(c1));
}

bool is_regular_ngon(const Configuration& c) {
    const int N = c.pieces();
    if (N < 3) return false;
    if (c.backend() == Backend::Rational) {
        if (N != 4 || c.dim() != 2) return false;
        std::vector<RatPt> u = centered_rat(c);
        std::vector<RatPt> rot;
        rot.reserve(u.size());
        for (const RatPt& p : u) {
            if (p[0] == 0 && p[1] == 0) return false;
            rot.push_back({-p[1], p[0]});
        }
        return multiset_equal_rat(u, rot);
    }
    const int m = c.cyc_order();
    // Roots of unity in Q(zeta_m) have order m (m even) or 2m (m odd).
    const long G = (m % 2 == 0) ? m : 2L * m;
    if (G % N != 0) return false;
    const long e = G / N;
    Cyc omega = Cyc::zeta_pow(m, e);
    if (m % 2 != 0 && e % 2 != 0) omega = -omega;  // root group generator is -zeta for odd m
    std::vector<Cyc> u = centered_cyc(c);
    std::vector<Cyc> rot;
    rot.reserve(u.size());
    for (const Cyc& z : u) {
        if (z.is_zero()) return false;
        rot.push_back(z * omega);
    }
    return multiset_equal(std::move(u), std::move(rot));
}

}  // namespace hopper
