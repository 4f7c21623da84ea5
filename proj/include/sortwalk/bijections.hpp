#pragma once

#include <cstddef>
#include <vector>

#include "sortwalk/machines.hpp"
#include "sortwalk/walks.hpp"

namespace sortwalk {

// Letter-wise relabeling N->I1, E->I2, S->O1, W->O2 and back.
OperationSequence walk_to_ops(const Walk& w);
Walk ops_to_walk(const OperationSequence& ops);

// The sortable permutation a 2sip-walk / deque-walk corresponds to: run the
// walk's operation sequence against input 1..n, then invert the produced
// output order (the machine sorts exactly the inverses of what it produces).
// Precondition: classify(w) contains TwoSip (kind 2sip) / Deque (kind deque);
// throws InvalidWalkClass otherwise.
Permutation walk_to_permutation(MachineKind kind, const Walk& w);

// Core of the left/right bijection: reflect in x=y (swap N<->E, S<->W
// letter-wise), then swap the letters back inside every maximal QP-subloop of
// the reflected walk. Applying it twice is the identity on big-walks.
Walk reflect_transform(const Walk& w);

// reflect_transform with the left-walk (right-walk) precondition checked.
Walk reflect_left_to_right(const Walk& w);  // throws NotLeftWalk
Walk reflect_right_to_left(const Walk& w);  // throws NotRightWalk

// Composed walk plus the cut indices between its stages:
// cuts = {0, end of stage 1, end of part 1, ..., end of part m, total length}.
struct ComposedWalk {
    Walk walk;
    std::size_t m = 0;
    std::vector<std::size_t> cuts;
};

// Builds the 2sip-walk of length 2m^2+8m+4 from m canonical left-walk parts of
// length 2m each: a fixed prefix, then the m parts (reflected to right-walks
// whenever the running endpoint (2m+x, 2m-x) has x <= 0), then south steps to
// the x-axis and west steps home. Throws WrongPartLength / WrongSide.
ComposedWalk compose_theorem1_detailed(const std::vector<Walk>& parts);
Walk compose_theorem1(const std::vector<Walk>& parts);

// Inverse of compose_theorem1: strips the fixed prefix/suffix, cuts the middle
// into m pieces of 2m steps, and un-reflects the pieces the endpoint rule had
// reflected. Throws MalformedWalk if w was not built by compose_theorem1.
std::vector<Walk> decompose_theorem1(const Walk& w, std::size_t m);

}  // namespace sortwalk
