#include "cubefire/dynamics.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <string>
#include <string_view>
#include <unordered_map>

namespace cubefire {

namespace {

// Vertices (bit positions within a word) whose coordinate d is set, d < 6.
constexpr std::uint64_t kInWordMask[6] = {
    0xAAAAAAAAAAAAAAAAULL, 0xCCCCCCCCCCCCCCCCULL, 0xF0F0F0F0F0F0F0F0ULL,
    0xFF00FF00FF00FF00ULL, 0xFFFF0000FFFF0000ULL, 0xFFFFFFFF00000000ULL,
};

std::uint64_t coordinate_mask(int d, std::size_t word) {
    if (d < 6) return kInWordMask[d];
    return ((word >> (d - 6)) & 1U) ? ~std::uint64_t{0} : 0;
}

std::uint64_t valid_mask(int n) {
    return n >= 6 ? ~std::uint64_t{0} : (std::uint64_t{1} << (1U << n)) - 1;
}

std::vector<Vertex> mask_to_vertices(std::span<const std::uint64_t> mask) {
    std::vector<Vertex> out;
    for (std::size_t w = 0; w < mask.size(); ++w) {
        std::uint64_t bits = mask[w];
        while (bits) {
            out.push_back(static_cast<Vertex>(w * 64 + std::countr_zero(bits)));
            bits &= bits - 1;
        }
    }
    return out;
}

std::vector<std::uint64_t> vertices_to_mask(std::span<const Vertex> vs, int n) {
    std::vector<std::uint64_t> mask(std::max<std::size_t>(1, vertex_count(n) / 64), 0);
    for (Vertex v : vs) {
        check_vertex(v, n);
        mask[v / 64] |= std::uint64_t{1} << (v % 64);
    }
    return mask;
}

std::string_view bytes_of(const auto& container) {
    return {reinterpret_cast<const char*>(container.data()),
            container.size() * sizeof(*container.data())};
}

}  // namespace

Orientation::Orientation(int n) : n_(n) {
    check_dimension(n);
    words_ = std::max<std::size_t>(1, cubefire::vertex_count(n) / 64);
    planes_.assign(words_ * static_cast<std::size_t>(n), 0);
}

Orientation Orientation::from_edge_bits(int n, std::span<const std::uint8_t> bits) {
    Orientation o(n);
    if (bits.size() != o.edge_count()) {
        throw DomainError("orientation of H_" + std::to_string(n) + " needs " +
                          std::to_string(o.edge_count()) + " edge bits, got " +
                          std::to_string(bits.size()));
    }
    std::size_t idx = 0;
    for (int d = 0; d < n; ++d) {
        for (Vertex u = 0; u < o.vertex_count(); ++u) {
            if ((u >> d) & 1U) continue;
            if (bits[idx] > 1) throw DomainError("edge bits must be 0 or 1");
            o.set_points_up(d, u, bits[idx] == 1);
            ++idx;
        }
    }
    return o;
}

std::uint64_t Orientation::edge_count() const {
    return n_ == 0 ? 0 : static_cast<std::uint64_t>(n_) * cubefire::vertex_count(n_ - 1);
}

bool Orientation::bit(int d, Vertex v) const {
    return (planes_[static_cast<std::size_t>(d) * words_ + v / 64] >> (v % 64)) & 1U;
}

void Orientation::flip(int d, Vertex v) {
    planes_[static_cast<std::size_t>(d) * words_ + v / 64] ^= std::uint64_t{1} << (v % 64);
}

bool Orientation::points_up(int d, Vertex low) const { return bit(d, low); }

void Orientation::set_points_up(int d, Vertex low, bool up) {
    if (d < 0 || d >= n_) throw DomainError("dimension index out of range");
    check_vertex(low, n_);
    if ((low >> d) & 1U) throw DomainError("edge must be named by its low endpoint");
    if (bit(d, low) != up) {
        flip(d, low);
        flip(d, low ^ (Vertex{1} << d));
    }
}

void Orientation::set_arc(Vertex from, Vertex to) {
    if (!adjacent(from, to)) throw DomainError("set_arc: endpoints are not adjacent");
    const int d = std::countr_zero(from ^ to);
    set_points_up(d, std::min(from, to), to > from);
}

int Orientation::in_degree(Vertex v) const {
    check_vertex(v, n_);
    int in = 0;
    for (int d = 0; d < n_; ++d) in += bit(d, v) == (((v >> d) & 1U) != 0);
    return in;
}

std::vector<std::uint8_t> Orientation::edge_bits() const {
    std::vector<std::uint8_t> out;
    out.reserve(edge_count());
    for (int d = 0; d < n_; ++d) {
        for (Vertex u = 0; u < vertex_count(); ++u) {
            if (!((u >> d) & 1U)) out.push_back(bit(d, u) ? 1 : 0);
        }
    }
    return out;
}

std::vector<std::uint64_t> Orientation::sink_mask() const {
    std::vector<std::uint64_t> mask(words_, ~std::uint64_t{0});
    mask.back() &= valid_mask(n_);
    for (int d = 0; d < n_; ++d) {
        const std::uint64_t* plane = planes_.data() + static_cast<std::size_t>(d) * words_;
        for (std::size_t w = 0; w < words_; ++w) {
            mask[w] &= ~(plane[w] ^ coordinate_mask(d, w));
        }
    }
    return mask;
}

void Orientation::fire(std::span<const std::uint64_t> mask) {
    for (int d = 0; d < n_; ++d) {
        std::uint64_t* plane = planes_.data() + static_cast<std::size_t>(d) * words_;
        if (d < 6) {
            const std::uint64_t hi = kInWordMask[d];
            const unsigned shift = 1U << d;
            for (std::size_t w = 0; w < words_; ++w) {
                const std::uint64_t m = mask[w];
                plane[w] ^= m | ((m & hi) >> shift) | ((m & ~hi) << shift);
            }
        } else {
            const std::size_t stride = std::size_t{1} << (d - 6);
            for (std::size_t w = 0; w < words_; ++w) plane[w] ^= mask[w] | mask[w ^ stride];
        }
    }
}

std::uint64_t ChipState::total() const {
    return std::accumulate(chips.begin(), chips.end(), std::uint64_t{0});
}

std::vector<Vertex> sinks(const Orientation& o) { return mask_to_vertices(o.sink_mask()); }

StepResult parallel_step(const Orientation& o) {
    StepResult r{o, {}};
    const auto mask = o.sink_mask();
    r.next.fire(mask);
    r.fired = mask_to_vertices(mask);
    return r;
}

StepResult block_step(const Orientation& o, std::span<const Vertex> w) {
    if (w.empty()) throw DomainError("block_step: firing-eligibility set must be non-empty");
    auto mask = o.sink_mask();
    const auto eligible = vertices_to_mask(w, o.dimension());
    for (std::size_t i = 0; i < mask.size(); ++i) mask[i] &= eligible[i];
    StepResult r{o, {}};
    r.next.fire(mask);
    r.fired = mask_to_vertices(mask);
    return r;
}

ChipState chips(const Orientation& o) {
    ChipState s;
    s.chips.resize(static_cast<std::size_t>(o.vertex_count()));
    for (Vertex v = 0; v < s.chips.size(); ++v) {
        s.chips[v] = static_cast<std::uint8_t>(o.in_degree(v));
    }
    return s;
}

bool is_serial_parallel(const BlockSchedule& s, int n) {
    std::vector<int> seen(static_cast<std::size_t>(vertex_count(n)), 0);
    for (const auto& w : s.sets) {
        for (Vertex v : w) {
            check_vertex(v, n);
            if (seen[v]++) return false;
        }
    }
    return std::all_of(seen.begin(), seen.end(), [](int c) { return c == 1; });
}

Orientation from_partition(const LeftCyclicPartition& p) {
    if (!validate(p).valid) throw DomainError("from_partition: input is not a left cyclic partition");
    std::vector<std::size_t> cls(static_cast<std::size_t>(vertex_count(p.n)));
    for (std::size_t i = 0; i < p.order(); ++i) {
        for (Vertex v : p.sets[i]) cls[v] = i;
    }
    Orientation o(p.n);
    for (int d = 0; d < p.n; ++d) {
        for (Vertex u = 0; u < cls.size(); ++u) {
            if ((u >> d) & 1U) continue;
            const Vertex v = u ^ (Vertex{1} << d);
            o.set_points_up(d, u, cls[v] < cls[u]);
        }
    }
    return o;
}

Orientation hamiltonian_orientation(int n) {
    if (n < 2) throw DomainError("hamiltonian_orientation: needs n >= 2");
    check_dimension(n);
    // Every edge starts pointing down, i.e. away from the endpoint with the
    // coordinate set, which is also the endpoint with the larger popcount.
    Orientation o(n);
    const auto cycle = gray_cycle(n);
    for (std::size_t i = 0; i < cycle.size(); ++i) {
        o.set_arc(cycle[i], cycle[(i + 1) % cycle.size()]);
    }
    return o;
}

EvolutionResult evolve(const Orientation& start, const Schedule& schedule, std::uint64_t max_steps) {
    if (max_steps < 1) throw DomainError("evolve: max_steps must be >= 1");

    const int n = start.dimension();
    std::vector<std::vector<std::uint64_t>> eligible;
    if (const auto* block = std::get_if<BlockSchedule>(&schedule)) {
        if (block->sets.empty()) throw DomainError("evolve: block schedule has no sets");
        for (const auto& w : block->sets) {
            if (w.empty()) throw DomainError("evolve: block schedule sets must be non-empty");
            eligible.push_back(vertices_to_mask(w, n));
        }
    }
    const std::size_t phases = eligible.empty() ? 1 : eligible.size();

    auto with_phase = [phases](std::string key, std::uint64_t t) {
        if (phases > 1) key += std::to_string(t % phases);
        return key;
    };

    std::unordered_map<std::string, std::uint64_t> chip_seen;
    std::unordered_map<std::string, std::uint64_t> orientation_seen;
    std::vector<std::vector<Vertex>> history;

    EvolutionResult r;
    Orientation state = start;
    r.total_chips = chips(start).total();
    bool chip_done = false;

    for (std::uint64_t t = 0;; ++t) {
        if (!chip_done) {
            auto [it, fresh] = chip_seen.try_emplace(with_phase(std::string(bytes_of(chips(state).chips)), t), t);
            if (!fresh) {
                chip_done = true;
                r.transient = it->second;
                r.period = t - it->second;
            }
        }
        auto [it, fresh] = orientation_seen.try_emplace(with_phase(std::string(bytes_of(state.planes())), t), t);
        if (!fresh) {
            r.orientation_transient = it->second;
            r.orientation_period = t - it->second;
        }
        if (!fresh || t == max_steps) {
            r.steps_executed = t;
            break;
        }

        auto mask = state.sink_mask();
        if (!eligible.empty()) {
            const auto& w = eligible[t % phases];
            for (std::size_t i = 0; i < mask.size(); ++i) mask[i] &= w[i];
        }
        state.fire(mask);
        history.push_back(mask_to_vertices(mask));
    }

    r.final_state = std::move(state);
    if (chip_done) {
        r.status = EvolutionStatus::Determined;
        r.firing_sets.assign(history.begin() + static_cast<std::ptrdiff_t>(r.transient),
                             history.begin() + static_cast<std::ptrdiff_t>(r.transient + r.period));
    } else {
        r.status = EvolutionStatus::Undetermined;
        r.trajectory = std::move(history);
    }
    return r;
}

}  // namespace cubefire
