#pragma once

// Turns: an SL(2,C) element seen as an ordered pair of complex unit vectors
// (tail x, head y) with a0 = x.y and a = x ^ y. Any pair with the same two
// invariants is the same turn; sliding the tail within the plane orthogonal
// to a moves between representatives. Two turns compose by sliding them
// until the head of the first sits on the tail of the second.

#include <optional>
#include <string_view>

#include "sl2c/calg.hpp"
#include "sl2c/group.hpp"

namespace sl2c {

/// Below this |(a ^ b).(a ^ b)| two turns are treated as non-meeting.
inline constexpr double kMeetTol = 1e-9;

/// Invariant agreement needed for two turns to count as equal.
inline constexpr double kEquivalenceTol = 1e-9;

class Turn {
public:
    Turn(const UnitCVec3& tail, const UnitCVec3& head) : tail_(tail), head_(head) {}

    const UnitCVec3& tail() const noexcept { return tail_; }
    const UnitCVec3& head() const noexcept { return head_; }

private:
    UnitCVec3 tail_;
    UnitCVec3 head_;
};

/// (tail . head, tail ^ head).
GroupElement element_of(const Turn& t);

/// Canonical representative: a real tail (e1 for a = 0, the unit normal of
/// Re a and Im a when they are independent, otherwise the first complement
/// vector of the real carrier axis) and head a0 x + a ^ x.
Turn turn_of(const GroupElement& s);

/// The canonical real tail used by turn_of.
UnitCVec3 canonical_tail(const GroupElement& s);

bool equivalent(const Turn& t1, const Turn& t2, double tol = kEquivalenceTol);

/// Representative of t with the given tail. Throws TailNotAdmissible unless
/// new_tail . a vanishes (within 1e-9).
Turn slide(const Turn& t, const UnitCVec3& new_tail);

/// Representative of t with the given head. Same admissibility rule.
Turn slide_to_head(const Turn& t, const UnitCVec3& new_head);

Turn invert(const Turn& t);

/// Common point of the carrier planes of t1 and t2: normalize(a ^ b), signed
/// so that its first non-negligible component has argument in (-pi/2, pi/2].
/// Empty when |(a ^ b).(a ^ b)| < meet_tol.
std::optional<UnitCVec3> meet(const Turn& t1, const Turn& t2, double meet_tol = kMeetTol);

enum class CompositionPath {
    Geometric,             ///< single parallelogram step
    DegenerateFactorized,  ///< second factor split in two, law applied twice
};

std::string_view to_string(CompositionPath p);

struct Composition {
    Turn turn;
    CompositionPath path;
};

/// Parallelogram law: a turn for element_of(second) * element_of(first).
/// Throws DegenerateCompositionFailure if no factorization in the fixed
/// candidate sweep makes both intermediate turns meet.
Composition compose(const Turn& second, const Turn& first);

}  // namespace sl2c
