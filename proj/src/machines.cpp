#include "sortwalk/machines.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <numeric>
#include <sstream>
#include <unordered_set>

namespace sortwalk {

Permutation::Permutation(std::vector<int> values) : values_(std::move(values)) {
    const int n = int(values_.size());
    std::vector<bool> seen(std::size_t(n) + 1, false);
    for (int v : values_) {
        if (v < 1 || v > n || seen[std::size_t(v)])
            throw InvalidOperation(0, "not a permutation of 1.." + std::to_string(n));
        seen[std::size_t(v)] = true;
    }
}

Permutation Permutation::parse(std::string_view text) {
    std::vector<int> vals;
    const bool has_space = text.find(' ') != std::string_view::npos;
    if (has_space) {
        std::istringstream in{std::string(text)};
        int v;
        while (in >> v) vals.push_back(v);
    } else {
        for (char c : text) {
            if (!std::isdigit(static_cast<unsigned char>(c)))
                throw InvalidOperation(0, "bad permutation text '" + std::string(text) + "'");
            vals.push_back(c - '0');
        }
    }
    return Permutation(std::move(vals));
}

Permutation Permutation::identity(int n) {
    std::vector<int> v(std::size_t(n));
    std::iota(v.begin(), v.end(), 1);
    return Permutation(std::move(v));
}

Permutation Permutation::inverse() const {
    std::vector<int> inv(values_.size());
    for (int i = 0; i < size(); ++i) inv[std::size_t(values_[std::size_t(i)] - 1)] = i + 1;
    return Permutation(std::move(inv));
}

Permutation Permutation::direct_sum(const Permutation& other) const {
    std::vector<int> v = values_;
    v.reserve(values_.size() + other.values_.size());
    for (int x : other.values_) v.push_back(x + size());
    return Permutation(std::move(v));
}

std::string Permutation::to_string() const {
    std::string out;
    for (std::size_t i = 0; i < values_.size(); ++i) {
        if (i) out += ' ';
        out += std::to_string(values_[i]);
    }
    return out;
}

std::string machine_kind_name(MachineKind k) {
    switch (k) {
        case MachineKind::Stack: return "stack";
        case MachineKind::TwoSip: return "2sip";
        case MachineKind::Deque: return "deque";
        case MachineKind::TwoSis: return "2sis";
    }
    return "?";
}

MachineKind machine_kind_from_name(std::string_view name) {
    std::string lower(name);
    std::transform(lower.begin(), lower.end(), lower.begin(),
                   [](unsigned char ch) { return char(std::tolower(ch)); });
    if (lower == "stack") return MachineKind::Stack;
    if (lower == "2sip" || lower == "twosip") return MachineKind::TwoSip;
    if (lower == "deque") return MachineKind::Deque;
    if (lower == "2sis" || lower == "twosis") return MachineKind::TwoSis;
    throw InvalidOperation(0, "unknown machine kind '" + std::string(name) + "'");
}

std::string OperationSequence::to_string() const {
    std::string out;
    for (Op op : ops) {
        switch (op) {
            case Op::I: out += "I"; break;
            case Op::O: out += "O"; break;
            case Op::I1: out += "I1"; break;
            case Op::I2: out += "I2"; break;
            case Op::O1: out += "O1"; break;
            case Op::O2: out += "O2"; break;
            case Op::Rho: out += "R"; break;
            case Op::Lambda: out += "L"; break;
            case Op::Mu: out += "M"; break;
        }
    }
    return out;
}

OperationSequence OperationSequence::parse(std::string_view text) {
    OperationSequence seq;
    for (std::size_t i = 0; i < text.size(); ++i) {
        char c = text[i];
        char digit = (i + 1 < text.size()) ? text[i + 1] : '\0';
        switch (c) {
            case 'I':
                if (digit == '1' || digit == '2') {
                    seq.ops.push_back(digit == '1' ? Op::I1 : Op::I2);
                    ++i;
                } else {
                    seq.ops.push_back(Op::I);
                }
                break;
            case 'O':
                if (digit == '1' || digit == '2') {
                    seq.ops.push_back(digit == '1' ? Op::O1 : Op::O2);
                    ++i;
                } else {
                    seq.ops.push_back(Op::O);
                }
                break;
            case 'R': seq.ops.push_back(Op::Rho); break;
            case 'L': seq.ops.push_back(Op::Lambda); break;
            case 'M': seq.ops.push_back(Op::Mu); break;
            default:
                throw InvalidOperation(i, std::string("bad op character '") + c + "'");
        }
    }
    return seq;
}

namespace {

// Shared simulation core. Storage layout per kind:
//   Stack:  a = the stack
//   TwoSip: a = stack 1, b = stack 2
//   Deque:  d, front = end 1
//   TwoSis: a = first stack (input side), b = second stack (output side)
struct Sim {
    MachineKind kind;
    int n;
    int next_in = 1;
    std::vector<int> a, b;
    std::deque<int> d;
    std::vector<int> out;

    explicit Sim(MachineKind k, int n_) : kind(k), n(n_) {}

    bool op_valid_for_kind(Op op) const {
        switch (kind) {
            case MachineKind::Stack: return op == Op::I || op == Op::O;
            case MachineKind::TwoSip:
            case MachineKind::Deque:
                return op == Op::I1 || op == Op::I2 || op == Op::O1 || op == Op::O2;
            case MachineKind::TwoSis:
                return op == Op::Rho || op == Op::Lambda || op == Op::Mu;
        }
        return false;
    }

    // Returns false if the op cannot be applied in this state.
    bool try_apply(Op op) {
        switch (op) {
            case Op::I:
            case Op::I1:
            case Op::Rho:
                if (next_in > n) return false;
                if (op == Op::I1 && kind == MachineKind::Deque)
                    d.push_front(next_in++);
                else
                    a.push_back(next_in++);
                return true;
            case Op::I2:
                if (next_in > n) return false;
                if (kind == MachineKind::Deque)
                    d.push_back(next_in++);
                else
                    b.push_back(next_in++);
                return true;
            case Op::O:
                if (a.empty()) return false;
                out.push_back(a.back());
                a.pop_back();
                return true;
            case Op::O1:
                if (kind == MachineKind::Deque) {
                    if (d.empty()) return false;
                    out.push_back(d.front());
                    d.pop_front();
                } else {
                    if (a.empty()) return false;
                    out.push_back(a.back());
                    a.pop_back();
                }
                return true;
            case Op::O2:
                if (kind == MachineKind::Deque) {
                    if (d.empty()) return false;
                    out.push_back(d.back());
                    d.pop_back();
                } else {
                    if (b.empty()) return false;
                    out.push_back(b.back());
                    b.pop_back();
                }
                return true;
            case Op::Lambda:
                if (a.empty()) return false;
                b.push_back(a.back());
                a.pop_back();
                return true;
            case Op::Mu:
                if (b.empty()) return false;
                out.push_back(b.back());
                b.pop_back();
                return true;
        }
        return false;
    }

    // Compact state key: next_in byte, then storage sections separated by 0.
    // All values fit a byte at desk scale.
    std::string key() const {
        std::string k;
        k.reserve(a.size() + b.size() + d.size() + 4);
        k.push_back(char(next_in));
        for (int v : a) k.push_back(char(v));
        k.push_back('\0');
        for (int v : b) k.push_back(char(v));
        k.push_back('\0');
        for (int v : d) k.push_back(char(v));
        return k;
    }
};

const std::vector<Op>& ops_for_kind(MachineKind kind) {
    static const std::vector<Op> stack = {Op::I, Op::O};
    static const std::vector<Op> two = {Op::I1, Op::I2, Op::O1, Op::O2};
    static const std::vector<Op> series = {Op::Rho, Op::Lambda, Op::Mu};
    switch (kind) {
        case MachineKind::Stack: return stack;
        case MachineKind::TwoSip:
        case MachineKind::Deque: return two;
        case MachineKind::TwoSis: return series;
    }
    return stack;
}

bool search(Sim& sim, const Permutation& target, std::vector<Op>& trail,
            std::unordered_set<std::string>& dead) {
    const int n = target.size();
    if (int(sim.out.size()) == n) return true;
    const std::string k = sim.key();
    if (dead.contains(k)) return false;
    for (Op op : ops_for_kind(sim.kind)) {
        Sim next = sim;
        if (!next.try_apply(op)) continue;
        // Prune: output must stay a prefix of the target.
        if (!next.out.empty() && next.out.size() > sim.out.size() &&
            next.out.back() != target[int(next.out.size()) - 1])
            continue;
        trail.push_back(op);
        if (search(next, target, trail, dead)) return true;
        trail.pop_back();
    }
    dead.insert(k);
    return false;
}

}  // namespace

Permutation apply(MachineKind kind, const OperationSequence& ops, int n) {
    Sim sim(kind, n);
    for (std::size_t i = 0; i < ops.ops.size(); ++i) {
        if (!sim.op_valid_for_kind(ops.ops[i]))
            throw InvalidOperation(i, "op not in the " + machine_kind_name(kind) + " alphabet");
        if (!sim.try_apply(ops.ops[i]))
            throw InvalidOperation(i, "underflow or input past n=" + std::to_string(n));
    }
    if (int(sim.out.size()) != n)
        throw InvalidOperation(ops.ops.size(),
                               "run left " + std::to_string(n - int(sim.out.size())) +
                                   " elements un-output");
    return Permutation(sim.out);
}

std::optional<OperationSequence> producible(MachineKind kind, const Permutation& p) {
    Sim sim(kind, p.size());
    std::vector<Op> trail;
    std::unordered_set<std::string> dead;
    if (search(sim, p, trail, dead)) return OperationSequence{std::move(trail)};
    return std::nullopt;
}

bool sortable(MachineKind kind, const Permutation& p) {
    return producible(kind, p.inverse()).has_value();
}

std::uint64_t count_producible(MachineKind kind, int n, int limit) {
    if (n > limit)
        throw LimitExceeded("count_producible n=" + std::to_string(n) + " above limit " +
                            std::to_string(limit));
    if (n == 0) return 1;  // the empty permutation
    std::vector<int> v(std::size_t(n));
    std::iota(v.begin(), v.end(), 1);
    std::uint64_t count = 0;
    do {
        if (producible(kind, Permutation(v)).has_value()) ++count;
    } while (std::next_permutation(v.begin(), v.end()));
    return count;
}

}  // namespace sortwalk
