#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <variant>
#include <vector>

#include "cubefire/hypercube.hpp"
#include "cubefire/partition.hpp"

namespace cubefire {

/// Orientation of every edge of H_n: the whole state of the game.
///
/// Externally an orientation is a flat list of n * 2^(n-1) bits, one per edge
/// {u, u ^ 2^d} with bit d of u clear, ordered by d and then u. A set bit means
/// the arc points toward the endpoint with bit d set.
///
/// Internally each dimension d owns a 2^n-bit plane in which both endpoints of
/// an edge carry that edge's bit. Vertex v receives the dimension-d arc iff
/// its plane bit equals bit d of v, so the sink mask is an AND of n planes and
/// firing is a masked XOR.
class Orientation {
public:
    Orientation() = default;

    /// All arcs pointing toward the endpoint with the lower value.
    explicit Orientation(int n);

    static Orientation from_edge_bits(int n, std::span<const std::uint8_t> bits);

    int dimension() const { return n_; }
    std::uint64_t vertex_count() const { return cubefire::vertex_count(n_); }
    std::uint64_t edge_count() const;

    /// Direction bit of edge {low, low ^ 2^d}; low must have bit d clear.
    bool points_up(int d, Vertex low) const;
    void set_points_up(int d, Vertex low, bool up);

    /// Directs the edge {from, to} as the arc from -> to.
    void set_arc(Vertex from, Vertex to);

    int in_degree(Vertex v) const;
    int out_degree(Vertex v) const { return n_ - in_degree(v); }

    std::vector<std::uint8_t> edge_bits() const;

    /// Bit mask (one bit per vertex, 64 per word) of the sinks.
    std::vector<std::uint64_t> sink_mask() const;

    /// Reverses every in-arc of the vertices in `mask`. The mask must be an
    /// independent set of sinks.
    void fire(std::span<const std::uint64_t> mask);

    std::span<const std::uint64_t> planes() const { return planes_; }
    std::size_t words_per_plane() const { return words_; }

    friend bool operator==(const Orientation&, const Orientation&) = default;

private:
    bool bit(int d, Vertex v) const;
    void flip(int d, Vertex v);

    int n_ = 0;
    std::size_t words_ = 1;
    std::vector<std::uint64_t> planes_;
};

/// Chips per vertex; for an orientation-derived state chips(v) = in-degree(v).
struct ChipState {
    std::vector<std::uint8_t> chips;

    std::uint64_t total() const;

    friend bool operator==(const ChipState&, const ChipState&) = default;
};

struct StepResult {
    Orientation next;
    std::vector<Vertex> fired;
};

struct ParallelSchedule {};

/// W_0, ..., W_{k-1} applied cyclically. Parallel and sequential evolutions
/// are special cases.
struct BlockSchedule {
    std::vector<std::vector<Vertex>> sets;
};

using Schedule = std::variant<ParallelSchedule, BlockSchedule>;

/// True iff the sets of a block schedule partition V(H_n).
bool is_serial_parallel(const BlockSchedule& s, int n);

enum class EvolutionStatus { Determined, Undetermined };

struct EvolutionResult {
    EvolutionStatus status = EvolutionStatus::Undetermined;
    std::uint64_t transient = 0;  // q: first time the chip cycle is entered
    std::uint64_t period = 0;     // p: chip-state period
    std::optional<std::uint64_t> orientation_transient;
    std::optional<std::uint64_t> orientation_period;  // multiple of period
    std::vector<std::vector<Vertex>> firing_sets;      // steps q .. q+p-1
    std::uint64_t steps_executed = 0;
    std::uint64_t total_chips = 0;
    /// Firing sets of every executed step; filled only when undetermined.
    std::vector<std::vector<Vertex>> trajectory;
    Orientation final_state;

    bool determined() const { return status == EvolutionStatus::Determined; }
};

inline constexpr std::uint64_t kDefaultMaxSteps = std::uint64_t{1} << 20;

std::vector<Vertex> sinks(const Orientation& o);

StepResult parallel_step(const Orientation& o);

/// Fires sinks(o) ∩ w. Throws DomainError for empty or out-of-range w.
StepResult block_step(const Orientation& o, std::span<const Vertex> w);

ChipState chips(const Orientation& o);

/// Every edge directed from the higher-indexed class to the lower one.
Orientation from_partition(const LeftCyclicPartition& p);

/// Gray cycle of H_n directed forward; every other edge from the endpoint with
/// larger popcount (ties: larger value). No sinks, so a fixed point. n >= 2.
Orientation hamiltonian_orientation(int n);

/// Runs until the orientation repeats (which also settles the chip cycle)
/// or max_steps steps have run. Period detection keys on the chip state, and
/// on (state, schedule phase) for block schedules.
EvolutionResult evolve(const Orientation& o, const Schedule& schedule = ParallelSchedule{},
                       std::uint64_t max_steps = kDefaultMaxSteps);

}  // namespace cubefire
