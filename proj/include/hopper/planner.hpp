#pragma once

#include <stdexcept>

#include "hopper/configuration.hpp"
#include "hopper/int_matrix.hpp"

namespace hopper {

// Thrown for N in {3, 4, 6}, where no enlarging sequence exists.
struct ImpossibleN : std::domain_error {
    using std::domain_error::domain_error;
};

// Thrown when a claimed certificate fails its precondition (|det| = 1).
struct InvalidCertificate : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Thrown when a synthesized plan or found sequence fails re-verification.
struct VerificationFailure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// First row all -1, ones on the subdiagonal. Satisfies P*M = S*P on the
// regular (n+1)-gon with the special piece at the origin.
IntMatrix build_M(int n);

// Power sum I + M + ... + M^(k-1).
IntMatrix build_B(int n, int k);

// Smallest i with 1 < i < N-1 and gcd(i, N) = 1; throws ImpossibleN when no
// such index exists (exactly N in {3, 4, 6} among N >= 3).
int choose_index(int N);

struct EnlargementPlan {
    int N = 0;
    int i = 0;   // diagonal index: per-application scale sin(i*pi/N)/sin(pi/N)
    int k = 0;   // rotation shift: the base matrix is M^k * B_i
    long t = 0;  // parity order of the base in GL(n, 2)
    IntMatrix a_matrix{1};   // (M^k * B_i)^t
    JumpSequence jumps;      // decomposition of a_matrix
    int rotation_steps = 0;  // total rotation, in units of pi/N, mod 2N

    double scale_float() const;  // (sin(i*pi/N)/sin(pi/N))^t
};

// Synthesizes a verified enlargement plan for the regular N-gon.
EnlargementPlan plan_enlargement(int N);

// Exact re-simulation check: the plan's jumps, applied to the regular N-gon,
// must land on a strictly larger regular N-gon fixing the origin, with float
// scale within 1e-9 of the symbolic value. Throws VerificationFailure.
void verify_plan(const EnlargementPlan& plan);

enum class Verdict { SimilarLarger, SimilarNotLarger, NotSimilar };

// Classifies the configuration P*A against P (origin-fixing similarity).
// Requires P's special piece at the origin and |det A| = 1.
Verdict verify_similarity_enlargement(const Configuration& P, const IntMatrix& A);

}  // namespace hopper
