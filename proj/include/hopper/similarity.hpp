#pragma once

#include <optional>

#include "hopper/configuration.hpp"

namespace hopper {

// Outcome of an exact plane-similarity comparison of two configurations on
// the same backend. scale_cmp is the exact sign of (scale^2 - 1).
struct Similarity {
    bool similar = false;
    bool reflected = false;
    int scale_cmp = 0;
    double scale = 1.0;
    // Cyclotomic backend: scale^2 = scale_sq_num / scale_sq_den, both real
    // elements of Z[zeta]; kept as a pair so exact claims about the scale can
    // be checked by cross-multiplication.
    std::optional<Cyc> scale_sq_num;
    std::optional<Cyc> scale_sq_den;
    // Rational backend: scale^2 exactly.
    std::optional<Rat> scale_sq;
};

// Is there f(z) = mu*z or mu*conj(z), mu != 0, mapping the vertex multiset of
// c0 onto c1's? (No translation: the origin corresponds to itself.)
Similarity similar_fixing_origin(const Configuration& c0, const Configuration& c1);

// Same question after translating both vertex multisets to their centroids.
Similarity similar_up_to_translation(const Configuration& c0, const Configuration& c1);

// Exact test: the N pieces form a regular N-gon (any center/rotation/size).
// Rational backend: only N = 4 squares exist over Q^2; other N report false.
bool is_regular_ngon(const Configuration& c);

}  // namespace hopper
