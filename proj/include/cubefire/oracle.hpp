#pragma once

// Brute-force checks that share no code path with the constructors or the
// bit-plane simulator.

#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <utility>

#include "cubefire/dynamics.hpp"
#include "cubefire/partition.hpp"

namespace cubefire {

struct SearchOutcome {
    bool found = false;
    std::optional<LeftCyclicPartition> witness;
    std::uint64_t nodes_explored = 0;
};

inline constexpr int kMaxSearchDimension = 4;

/// Exhaustive backtracking over class labels. Vertices are labelled in BFS
/// order from 0 with vertex 0 pinned to class 0; a partial labelling is cut
/// as soon as two neighbours share a class or a vertex whose neighbourhood
/// is fully labelled has no neighbour in its predecessor class.
SearchOutcome search_partition(int n, std::size_t k);

/// Upper bound on labellings visited: k^(2^n - 1).
double search_cost_estimate(int n, std::size_t k);

struct CensusKey {
    std::uint64_t period = 0;
    std::uint64_t transient = 0;

    friend auto operator<=>(const CensusKey&, const CensusKey&) = default;
};

struct PeriodCensus {
    int n = 0;
    std::uint64_t total = 0;
    std::map<CensusKey, std::uint64_t> entries;
};

inline constexpr int kMaxCensusDimension = 3;

/// Evolves every orientation of H_n (n <= 3) under the parallel schedule.
PeriodCensus census(int n);

struct ReferencePeriod {
    bool determined = false;
    std::uint64_t transient = 0;
    std::uint64_t period = 0;
};

/// Naive chip-firing on the chip vector with a linear scan for the first
/// repeated state.
ReferencePeriod reference_period(const Orientation& o, std::uint64_t max_steps = kDefaultMaxSteps);

/// True iff p is valid and every vertex has at least two neighbours in its
/// predecessor class. p must have order 3 and n >= 2.
bool check_lemma23(const LeftCyclicPartition& p);

/// Each edge bit drawn independently from the generator's raw output.
Orientation random_orientation(int n, std::mt19937_64& rng);

}  // namespace cubefire
