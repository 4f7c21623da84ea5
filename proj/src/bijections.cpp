#include "sortwalk/bijections.hpp"

#include <algorithm>
#include <stdexcept>

namespace sortwalk {

namespace {

Op step_to_op(Step s) {
    switch (s) {
        case Step::N: return Op::I1;
        case Step::E: return Op::I2;
        case Step::S: return Op::O1;
        case Step::W: return Op::O2;
    }
    throw std::logic_error("bad step");
}

Step op_to_step(Op op) {
    switch (op) {
        case Op::I1: return Step::N;
        case Op::I2: return Step::E;
        case Op::O1: return Step::S;
        case Op::O2: return Step::W;
        default:
            throw InvalidOperation(0, "op has no walk-step counterpart");
    }
}

// N<->E, S<->W.
Step swap_step(Step s) {
    switch (s) {
        case Step::N: return Step::E;
        case Step::E: return Step::N;
        case Step::S: return Step::W;
        case Step::W: return Step::S;
    }
    throw std::logic_error("bad step");
}

}  // namespace

OperationSequence walk_to_ops(const Walk& w) {
    OperationSequence seq;
    seq.ops.reserve(w.length());
    for (Step s : w.steps()) seq.ops.push_back(step_to_op(s));
    return seq;
}

Walk ops_to_walk(const OperationSequence& ops) {
    std::vector<Step> steps;
    steps.reserve(ops.ops.size());
    for (Op op : ops.ops) steps.push_back(op_to_step(op));
    return Walk(std::move(steps));
}

Permutation walk_to_permutation(MachineKind kind, const Walk& w) {
    const ClassSet classes = classify(w);
    if (kind == MachineKind::TwoSip) {
        if (!classes.contains(WalkClass::TwoSip))
            throw InvalidWalkClass("walk " + w.to_string() + " is not a 2sip-walk");
    } else if (kind == MachineKind::Deque) {
        if (!classes.contains(WalkClass::Deque))
            throw InvalidWalkClass("walk " + w.to_string() + " is not a deque-walk");
    } else {
        throw InvalidWalkClass("walk correspondence is defined for 2sip and deque only");
    }
    const Permutation produced = apply(kind, walk_to_ops(w), int(w.half_length()));
    return produced.inverse();
}

Walk reflect_transform(const Walk& w) {
    std::vector<Step> steps;
    steps.reserve(w.length());
    for (Step s : w.steps()) steps.push_back(swap_step(s));
    const Walk reflected(steps);

    const auto loops = qp_subloops(reflected);
    // Maximal loops: not strict subsections of another loop.
    std::vector<SubloopSpan> maximal;
    for (const auto& a : loops) {
        bool contained = false;
        for (const auto& b : loops) {
            if (b == a) continue;
            if (b.begin <= a.begin && a.end <= b.end) {
                contained = true;
                break;
            }
        }
        if (!contained) maximal.push_back(a);
    }
    for (std::size_t i = 1; i < maximal.size(); ++i) {
        if (maximal[i].begin < maximal[i - 1].end)
            throw std::logic_error("reflect_transform: overlapping maximal QP-subloops in " +
                                   reflected.to_string());
    }
    for (const auto& span : maximal)
        for (std::size_t i = span.begin; i < span.end; ++i) steps[i] = swap_step(steps[i]);
    return Walk(std::move(steps));
}

Walk reflect_left_to_right(const Walk& w) {
    if (!classify(w).contains(WalkClass::Left))
        throw NotLeftWalk("walk " + w.to_string() + " is not a left-walk");
    return reflect_transform(w);
}

Walk reflect_right_to_left(const Walk& w) {
    if (!classify(w).contains(WalkClass::Right))
        throw NotRightWalk("walk " + w.to_string() + " is not a right-walk");
    return reflect_transform(w);
}

ComposedWalk compose_theorem1_detailed(const std::vector<Walk>& parts) {
    const std::size_t m = parts.size();
    for (std::size_t i = 0; i < m; ++i) {
        if (parts[i].length() != 2 * m)
            throw WrongPartLength("part " + std::to_string(i) + " has length " +
                                  std::to_string(parts[i].length()) + ", want " +
                                  std::to_string(2 * m));
        if (!classify(parts[i]).contains(WalkClass::Left))
            throw WrongSide("part " + std::to_string(i) + " (" + parts[i].to_string() +
                            ") is not a left-walk");
    }

    ComposedWalk result;
    result.m = m;
    std::vector<Step> acc;
    result.cuts.push_back(0);

    // Stage 1: 2m+1 north, 2m east, one north, two south. Ends at (2m, 2m).
    acc.insert(acc.end(), 2 * m + 1, Step::N);
    acc.insert(acc.end(), 2 * m, Step::E);
    acc.push_back(Step::N);
    acc.push_back(Step::S);
    acc.push_back(Step::S);
    result.cuts.push_back(acc.size());

    // Stage 2: we are at (2m+x, 2m-x); x > 0 takes the left-walk as supplied,
    // otherwise its reflection (a right-walk).
    long x = 0;
    for (const Walk& part : parts) {
        const Walk used = (x > 0) ? part : reflect_transform(part);
        acc.insert(acc.end(), used.steps().begin(), used.steps().end());
        x += used.end().x;
        result.cuts.push_back(acc.size());
    }

    // Stage 3: south to the x-axis, then west to the origin.
    const long south = 2 * long(m) - x;
    const long west = 2 * long(m) + x;
    acc.insert(acc.end(), std::size_t(south), Step::S);
    acc.insert(acc.end(), std::size_t(west), Step::W);
    result.cuts.push_back(acc.size());

    result.walk = Walk(std::move(acc));
    return result;
}

Walk compose_theorem1(const std::vector<Walk>& parts) {
    return compose_theorem1_detailed(parts).walk;
}

std::vector<Walk> decompose_theorem1(const Walk& w, std::size_t m) {
    const std::size_t want = 2 * m * m + 8 * m + 4;
    if (w.length() != want)
        throw MalformedWalk("length " + std::to_string(w.length()) + ", want " +
                            std::to_string(want));
    const auto& s = w.steps();
    std::size_t i = 0;
    auto expect = [&](Step step, std::size_t count) {
        for (std::size_t k = 0; k < count; ++k, ++i)
            if (s[i] != step)
                throw MalformedWalk("step " + std::to_string(i) + " is " +
                                    std::string(1, step_char(s[i])) + ", want " +
                                    std::string(1, step_char(step)));
    };
    // Stage 1 prefix.
    expect(Step::N, 2 * m + 1);
    expect(Step::E, 2 * m);
    expect(Step::N, 1);
    expect(Step::S, 2);

    // Stage 2 pieces, un-reflecting where the endpoint rule had reflected.
    std::vector<Walk> parts;
    long x = 0;
    for (std::size_t p = 0; p < m; ++p) {
        std::vector<Step> piece(s.begin() + long(i), s.begin() + long(i + 2 * m));
        i += 2 * m;
        const Walk pw(std::move(piece));
        const bool want_left = (x > 0);
        x += pw.end().x;
        if (want_left) {
            if (!classify(pw).contains(WalkClass::Left))
                throw MalformedWalk("piece " + std::to_string(p) + " is not a left-walk");
            parts.push_back(pw);
        } else {
            if (!classify(pw).contains(WalkClass::Right))
                throw MalformedWalk("piece " + std::to_string(p) + " is not a right-walk");
            Walk canonical = reflect_transform(pw);
            if (!classify(canonical).contains(WalkClass::Left))
                throw MalformedWalk("piece " + std::to_string(p) +
                                    " does not un-reflect to a left-walk");
            parts.push_back(std::move(canonical));
        }
    }

    // Stage 3 suffix, computed from the actual endpoint after the parts.
    expect(Step::S, std::size_t(2 * long(m) - x));
    expect(Step::W, std::size_t(2 * long(m) + x));
    return parts;
}

}  // namespace sortwalk
