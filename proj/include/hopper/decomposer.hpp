#pragma once

#include <stdexcept>

#include "hopper/configuration.hpp"
#include "hopper/int_matrix.hpp"

namespace hopper {

// Group membership: |det| = 1 and congruent to the identity mod 2.
bool is_member(const IntMatrix& a);

struct MembershipError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Decomposes a member matrix into a jump word whose ordered involution
// product reproduces the input exactly:
//   sequence_to_matrix(decompose(a), n) == a.
// Throws MembershipError when is_member(a) fails.
JumpSequence decompose(const IntMatrix& a);

}  // namespace hopper
