#include "hopper/planner.hpp"

#include <cmath>
#include <numeric>
#include <optional>
#include <tuple>

#include "hopper/decomposer.hpp"
#include "hopper/mod2_matrix.hpp"
#include "hopper/similarity.hpp"

namespace hopper {

IntMatrix build_M(int n) {
    if (n < 1) throw std::invalid_argument("build_M: n >= 1");
    IntMatrix m(n);
    for (int j = 0; j < n; ++j) m.at(0, j) = -1;
    for (int i = 1; i < n; ++i) m.at(i, i - 1) = 1;
    return m;
}

IntMatrix build_B(int n, int k) {
    if (n < 1 || k < 1) throw std::invalid_argument("build_B: n, k >= 1");
    IntMatrix b(n);
    IntMatrix p = IntMatrix::identity(n);
    const IntMatrix m = build_M(n);
    for (int j = 0; j < k; ++j) {
        b = mat_add(b, p);
        if (j + 1 < k) p = mat_mul(p, m);
    }
    return b;
}

int choose_index(int N) {
    if (N < 3) throw std::invalid_argument("choose_index: N >= 3");
    for (int i = 2; i < N - 1; ++i)
        if (std::gcd(i, N) == 1) return i;
    switch (N) {
        case 3:
            throw ImpossibleN("N=3: every jump preserves the triangle's area, so no larger similar triangle is reachable");
        case 4:
            throw ImpossibleN("N=4: the four pieces stay on the integer lattice spanned by the start, which admits no larger similar square");
        case 6:
            throw ImpossibleN("N=6: the six pieces stay on a triangular lattice, which admits no larger similar hexagon");
        default:
            throw ImpossibleN("no admissible diagonal index for N=" + std::to_string(N));
    }
}

double EnlargementPlan::scale_float() const {
    const double pi = std::acos(-1.0);
    return std::pow(std::sin(i * pi / N) / std::sin(pi / N), static_cast<double>(t));
}

namespace {

long parity_order(const IntMatrix& a) { return static_cast<long>(mod2_order(reduce_mod2(a))); }

}  // namespace

EnlargementPlan plan_enlargement(int N) {
    const int i0 = choose_index(N);
    const int n = N - 1;
    const double pi = std::acos(-1.0);
    const IntMatrix M = build_M(n);

    const IntMatrix B0 = build_B(n, i0);
    {
        Int dv = det(B0);
        if (dv != 1 && dv != -1) throw std::logic_error("plan: |det B_i| != 1");
    }
    const long t0 = parity_order(B0);
    const double ratio0 = std::sin(i0 * pi / N) / std::sin(pi / N);

    int best_i = i0, best_k = 0;
    long best_t = t0;
    IntMatrix base = B0;

    // When the pinned (i0, t0) answer would blow the matrix up past ~16 bits
    // per entry, scan all valid diagonals i and rotation shifts k (the base
    // M^k*B_i keeps the same per-application modulus; M^k only rotates) and
    // take the cheapest parity order.
    if (static_cast<double>(t0) * std::log2(ratio0) > 16.0) {
        std::optional<std::tuple<double, int, int>> best_score;
        for (int i = 2; i < N - 1; ++i) {
            if (std::gcd(i, N) != 1) continue;
            const double ratio = std::sin(i * pi / N) / std::sin(pi / N);
            if (ratio <= 1.0) continue;
            const IntMatrix Bi = build_B(n, i);
            IntMatrix Mk = IntMatrix::identity(n);
            for (int k = 0; k < N; ++k) {
                const IntMatrix cand = k == 0 ? Bi : mat_mul(Mk, Bi);
                const long t = parity_order(cand);
                const std::tuple<double, int, int> score{static_cast<double>(t) * std::log2(ratio), i, k};
                if (!best_score || score < *best_score) {
                    best_score = score;
                    best_i = i;
                    best_k = k;
                    best_t = t;
                    base = cand;
                }
                Mk = mat_mul(Mk, M);
            }
        }
    }

    EnlargementPlan plan;
    plan.N = N;
    plan.i = best_i;
    plan.k = best_k;
    plan.t = best_t;
    plan.a_matrix = mat_pow(base, static_cast<unsigned long>(best_t));
    if (!is_member(plan.a_matrix)) throw std::logic_error("plan: a_matrix fails membership");
    plan.jumps = decompose(plan.a_matrix);
    plan.rotation_steps = static_cast<int>((best_t * (best_i - 1 + 2L * best_k)) % (2L * N));
    return plan;
}

void verify_plan(const EnlargementPlan& plan) {
    const Configuration start = Configuration::regular_ngon(plan.N);
    const IntMatrix word = sequence_to_matrix(plan.jumps, plan.N - 1);
    if (word != plan.a_matrix)
        throw VerificationFailure("plan: jump word does not multiply back to the matrix");
    const Configuration final_c = apply_sequence(start, plan.jumps);
    if (!final_c.special_at_origin())
        throw VerificationFailure("plan: special piece moved");
    if (!is_regular_ngon(final_c))
        throw VerificationFailure("plan: final configuration is not a regular N-gon");
    const Similarity sim = similar_fixing_origin(start, final_c);
    if (!sim.similar || sim.scale_cmp <= 0)
        throw VerificationFailure("plan: final configuration is not a strictly larger similar copy");
    if (std::abs(sim.scale - plan.scale_float()) > 1e-9 * plan.scale_float())
        throw VerificationFailure("plan: simulated scale disagrees with the symbolic scale");
}

Verdict verify_similarity_enlargement(const Configuration& P, const IntMatrix& A) {
    if (!P.special_at_origin())
        throw std::invalid_argument("verify_similarity_enlargement: special piece must start at the origin");
    {
        if (A.n() != P.ordinary())
            throw InvalidCertificate("certificate matrix shape does not match the configuration");
        Int dv = det(A);
        if (dv != 1 && dv != -1) throw InvalidCertificate("certificate matrix must have |det| = 1");
    }
    const Configuration image = apply_matrix(P, A);
    const Similarity sim = similar_fixing_origin(P, image);
    if (!sim.similar) return Verdict::NotSimilar;
    return sim.scale_cmp > 0 ? Verdict::SimilarLarger : Verdict::SimilarNotLarger;
}

}  // namespace hopper
