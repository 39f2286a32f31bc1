#pragma once

#include <string>
#include <utility>
#include <vector>

#include "hopper/cyclotomic.hpp"
#include "hopper/int_matrix.hpp"

namespace hopper {

// One legal move: piece `mover` reflects through piece `over`.
struct Jump {
    int mover = 0;
    int over = 0;
    bool operator==(const Jump& o) const { return mover == o.mover && over == o.over; }
};

using JumpSequence = std::vector<Jump>;

// Text format: whitespace-separated "i/j" tokens, '#' comments to end of line.
JumpSequence parse_jumps(const std::string& text);
std::string format_jumps(const JumpSequence& s);

enum class Backend { Rational, Cyclotomic };

// N = n+1 pieces; index 0 is the special piece. Rational backend stores exact
// d-vectors; cyclotomic backend stores points of Z[zeta_order] (planar).
class Configuration {
public:
    static Configuration rational(int dim, std::vector<std::vector<Rat>> pts);
    static Configuration cyclotomic(int order, std::vector<Cyc> pts);
    // Regular N-gon with p_k = zeta^k - 1 (special piece at the origin).
    static Configuration regular_ngon(int N);

    Backend backend() const { return backend_; }
    int dim() const { return dim_; }
    int pieces() const { return backend_ == Backend::Rational ? static_cast<int>(rat_.size())
                                                              : static_cast<int>(cyc_.size()); }
    int ordinary() const { return pieces() - 1; }
    int cyc_order() const { return cyc_order_; }

    const std::vector<Rat>& rat_pos(int p) const { return rat_[static_cast<size_t>(p)]; }
    const Cyc& cyc_pos(int p) const { return cyc_[static_cast<size_t>(p)]; }
    const std::vector<std::vector<Rat>>& rat_points() const { return rat_; }
    const std::vector<Cyc>& cyc_points() const { return cyc_; }

    bool special_at_origin() const;
    bool operator==(const Configuration& o) const;
    bool operator!=(const Configuration& o) const { return !(*this == o); }

    std::string canonical_key() const;

private:
    friend Configuration apply_jump(const Configuration& c, const Jump& j);

    Backend backend_ = Backend::Rational;
    int dim_ = 2;
    int cyc_order_ = 0;
    std::vector<std::vector<Rat>> rat_;
    std::vector<Cyc> cyc_;
};

void validate_jump(const Configuration& c, const Jump& j);
Configuration apply_jump(const Configuration& c, const Jump& j);
Configuration apply_sequence(const Configuration& c, const JumpSequence& s);
JumpSequence reversed(const JumpSequence& s);

// The n x n involution matrix of "ordinary piece i jumps over piece j"
// (j = 0 means the special piece; no doubled entry in that case).
IntMatrix elementary_involution(int n, int i, int j);

// Product, in application order, of the involutions of s. Requires that s
// never moves piece 0; throws SpecialPieceMoved otherwise.
struct SpecialPieceMoved : std::runtime_error {
    using std::runtime_error::runtime_error;
};
IntMatrix sequence_to_matrix(const JumpSequence& s, int n);

// The configuration with ordinary positions P*A (special piece unchanged);
// A must be n x n for n ordinary pieces.
Configuration apply_matrix(const Configuration& c, const IntMatrix& A);

// The 2n-jump gadget translating everything by 2*(pos(a) - pos(special)).
JumpSequence translation_gadget(const Configuration& c, int a);

// Rewrites s (which may move piece 0) into s' that never moves piece 0 plus an
// integer vector w with: apply(c, s) = apply(c, s') translated by 2*P*w,
// where P's columns are the initial ordinary positions.
std::pair<std::vector<Int>, JumpSequence> normalize_sequence(const Configuration& c,
                                                             const JumpSequence& s);

// True iff the special piece of c1 sits in the doubled lattice {2*P*w}
// spanned by the initial ordinary positions of c0 (rational backend).
bool special_piece_lattice_check(const Configuration& c0, const Configuration& c1);

}  // namespace hopper
