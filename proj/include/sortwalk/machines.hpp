#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "sortwalk/errors.hpp"

namespace sortwalk {

// One-line notation over exactly {1..n}.
class Permutation {
  public:
    Permutation() = default;
    explicit Permutation(std::vector<int> values);  // validates bijection on 1..n
    // "3 1 2" (space separated) or, for n <= 9, the digit string "312".
    static Permutation parse(std::string_view text);
    static Permutation identity(int n);

    int size() const { return int(values_.size()); }
    int operator[](int i) const { return values_[std::size_t(i)]; }  // 0-based position
    const std::vector<int>& values() const { return values_; }

    Permutation inverse() const;
    // Direct sum: this followed by other shifted up by size().
    Permutation direct_sum(const Permutation& other) const;

    std::string to_string() const;  // space-separated one-line notation
    friend bool operator==(const Permutation&, const Permutation&) = default;
    friend bool operator<(const Permutation& a, const Permutation& b) {
        return a.values_ < b.values_;
    }

  private:
    std::vector<int> values_;
};

enum class MachineKind : std::uint8_t { Stack, TwoSip, Deque, TwoSis };

std::string machine_kind_name(MachineKind k);
MachineKind machine_kind_from_name(std::string_view name);  // throws InvalidOperation

// Operation alphabet across all four machines. Validity per machine:
//   Stack: I, O      TwoSip/Deque: I1, I2, O1, O2      TwoSis: Rho, Lambda, Mu
// For the deque, end 1 is the end the walk step N maps to (the front).
enum class Op : std::uint8_t { I, O, I1, I2, O1, O2, Rho, Lambda, Mu };

struct OperationSequence {
    std::vector<Op> ops;
    std::string to_string() const;  // "IIOO", "I1I2O1O2", "RLM"
    static OperationSequence parse(std::string_view text);
    friend bool operator==(const OperationSequence&, const OperationSequence&) = default;
};

// Runs ops against input 1..n and returns the output order.
// Throws InvalidOperation (with the failing op index) on container underflow,
// input past n, an op outside the machine's alphabet, or an incomplete run.
Permutation apply(MachineKind kind, const OperationSequence& ops, int n);

// Searches for an operation sequence that makes `kind` produce p, by DFS over
// machine states with memoization. Ops are tried in a fixed order (inputs
// before outputs, lower index first), so the witness is deterministic.
std::optional<OperationSequence> producible(MachineKind kind, const Permutation& p);

// p is sortable iff its inverse is producible.
bool sortable(MachineKind kind, const Permutation& p);

// Exact count of length-n producible permutations, by exhausting all n!
// candidates. Throws LimitExceeded above the desk-scale limit.
std::uint64_t count_producible(MachineKind kind, int n, int limit = 10);

}  // namespace sortwalk
