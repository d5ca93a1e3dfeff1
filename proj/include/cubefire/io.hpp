#pragma once

#include <stdexcept>
#include <string>

#include <json.hpp>

#include "cubefire/dynamics.hpp"
#include "cubefire/oracle.hpp"
#include "cubefire/partition.hpp"

namespace cubefire::io {

using Json = nlohmann::ordered_json;

/// Malformed or structurally inconsistent input document.
class FormatError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Partition: {"n": int, "k": int, "sets": [[int, ...], ...]}, classes sorted.
Json to_json(const LeftCyclicPartition& p);
/// Rejects bad types, k != sets.size(), out-of-range and repeated vertices.
/// Classes are sorted on read; coverage and adjacency are left to validate().
LeftCyclicPartition partition_from_json(const Json& j);

// Orientation: {"n": int, "edges": [0|1, ...]} in the fixed edge order.
Json to_json(const Orientation& o);
Orientation orientation_from_json(const Json& j);

// Block schedule: {"n": int, "sets": [[int, ...], ...]}; "n" optional.
BlockSchedule schedule_from_json(const Json& j, int n);

Json to_json(const PeriodCensus& c);
Json to_json(const ValidationReport& r, int n);
Json to_json(const EvolutionResult& r);
Json to_json(const SearchOutcome& s, int n, std::size_t k);

/// Parses text; syntax errors become FormatError.
Json parse(const std::string& text);
Json read_file(const std::string& path);

/// Canonical single-line rendering followed by a newline.
std::string dump(const Json& j);

/// Undirected graph with one cluster per class, vertices labelled in binary.
std::string to_dot(const LeftCyclicPartition& p);
/// Directed graph with one arc per edge.
std::string to_dot(const Orientation& o);

}  // namespace cubefire::io
