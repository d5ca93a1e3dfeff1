#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "cubefire/hypercube.hpp"

namespace cubefire {

/// Ordered classes S_0, ..., S_{k-1} of vertices of H_n. Class order is
/// semantic (cyclic); vertices inside a class are kept sorted.
struct LeftCyclicPartition {
    int n = 0;
    std::vector<std::vector<Vertex>> sets;

    std::size_t order() const { return sets.size(); }

    /// Sorts each class in place. Does not reorder classes.
    void canonicalize();

    friend bool operator==(const LeftCyclicPartition&, const LeftCyclicPartition&) = default;
};

/// Thrown when a constructor produces output that fails validation.
class ConstructionError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

/// Order 3 never admits a left cyclic partition.
class ImpossibleOrder : public DomainError {
public:
    using DomainError::DomainError;
};

enum class ViolationKind {
    Cover,             // vertex of H_n in no class
    Disjointness,      // vertex listed more than once
    EmptyClass,        // class with no vertices
    PredecessorNeighbor,  // vertex with no neighbor in the preceding class
    InternalEdge,      // two adjacent vertices in one class
};

const char* to_string(ViolationKind k);

struct Violation {
    ViolationKind kind;
    std::optional<std::size_t> class_index;  // empty for Cover
    Vertex vertex = 0;
    std::optional<Vertex> other;  // second endpoint for InternalEdge

    std::string describe(int n) const;

    friend bool operator==(const Violation&, const Violation&) = default;
};

struct ValidationReport {
    bool valid = true;
    std::vector<Violation> violations;  // by class index, then vertex; Cover last
};

/// Checks the partition conditions. Out-of-range vertices throw DomainError
/// instead of being reported.
ValidationReport validate(const LeftCyclicPartition& p);

/// Order-p partition grown from the cycle even_cycle(n, p) by repeatedly
/// sweeping i = 0..p-1 and moving unassigned neighbors of S_i into S_{i+1}.
LeftCyclicPartition construct_even(int n, std::uint64_t p);

/// Same-order partition of H_{n+1}: class i is 1S_i ∪ 0S_{i-1}.
LeftCyclicPartition lift(const LeftCyclicPartition& p);

/// Order 2p-1 on H_{n+1} from an odd order p >= 5 on H_n.
LeftCyclicPartition double_minus_1(const LeftCyclicPartition& p);

/// Order 2p-3 on H_{n+1} from an odd order p >= 7 on H_n.
LeftCyclicPartition double_minus_3(const LeftCyclicPartition& p);

/// The published order-5 partition of H_4.
LeftCyclicPartition h4_order5();

/// The published order-7 partition of H_4.
LeftCyclicPartition h4_order7();

/// Order 2^{n-1}-1 on H_n for n >= 4, built from the Gray cycle u of H_{n-1}
/// and its shift v_i = u_i ^ 1 ^ 2^{n-2}.
LeftCyclicPartition max_odd(int n);

/// Any odd order p in [5, 2^{n-1}-1], n >= 4. Rejects p = 3 with
/// ImpossibleOrder and everything else outside the range with DomainError.
LeftCyclicPartition construct_odd(int n, std::uint64_t p);

/// Dispatches on parity: construct_even for even p, construct_odd otherwise.
LeftCyclicPartition construct(int n, std::uint64_t p);

/// Human-readable admissible range of orders for H_n.
std::string admissible_orders(int n);

}  // namespace cubefire
