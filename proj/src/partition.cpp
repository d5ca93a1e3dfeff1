#include "cubefire/partition.hpp"

#include <algorithm>
#include <tuple>

namespace cubefire {

namespace {

constexpr std::size_t kUnassigned = static_cast<std::size_t>(-1);

LeftCyclicPartition checked(LeftCyclicPartition p, const char* who) {
    p.canonicalize();
    auto report = validate(p);
    if (!report.valid) {
        throw ConstructionError(std::string(who) + " produced an invalid partition: " +
                                report.violations.front().describe(p.n));
    }
    return p;
}

void require_valid(const LeftCyclicPartition& p, const char* who) {
    if (!validate(p).valid) {
        throw DomainError(std::string(who) + ": input is not a left cyclic partition");
    }
}

std::vector<Vertex> shifted(const std::vector<Vertex>& s, Vertex offset) {
    std::vector<Vertex> out(s);
    for (auto& v : out) v |= offset;
    return out;
}

std::vector<Vertex> merged(const std::vector<Vertex>& a, const std::vector<Vertex>& b) {
    std::vector<Vertex> out(a);
    out.insert(out.end(), b.begin(), b.end());
    std::sort(out.begin(), out.end());
    return out;
}

void require_odd_order(const LeftCyclicPartition& p, std::size_t min, const char* who) {
    const auto k = p.order();
    if (k % 2 == 0 || k < min) {
        throw DomainError(std::string(who) + ": needs odd order >= " + std::to_string(min) +
                          ", got " + std::to_string(k));
    }
    if (p.n + 1 > kMaxDimension) throw DomainError(std::string(who) + ": dimension too large");
}

std::uint64_t max_odd_order(int n) { return (vertex_count(n - 1)) - 1; }

}  // namespace

void LeftCyclicPartition::canonicalize() {
    for (auto& s : sets) std::sort(s.begin(), s.end());
}

const char* to_string(ViolationKind k) {
    switch (k) {
        case ViolationKind::Cover: return "cover";
        case ViolationKind::Disjointness: return "disjointness";
        case ViolationKind::EmptyClass: return "empty-class";
        case ViolationKind::PredecessorNeighbor: return "predecessor-neighbor";
        case ViolationKind::InternalEdge: return "internal-edge";
    }
    return "unknown";
}

std::string Violation::describe(int n) const {
    std::string s = to_string(kind);
    if (class_index) s += " in class " + std::to_string(*class_index);
    if (kind == ViolationKind::EmptyClass) return s;
    s += ": vertex " + std::to_string(vertex) + " (" + binary_label(vertex, n) + ")";
    if (other) s += " and " + std::to_string(*other) + " (" + binary_label(*other, n) + ")";
    return s;
}

ValidationReport validate(const LeftCyclicPartition& p) {
    check_dimension(p.n);
    const auto count = static_cast<std::size_t>(vertex_count(p.n));
    const std::size_t k = p.order();
    for (const auto& s : p.sets) {
        for (Vertex v : s) check_vertex(v, p.n);
    }

    std::vector<std::size_t> owner(count, kUnassigned);
    std::vector<Violation> out;
    for (std::size_t i = 0; i < k; ++i) {
        if (p.sets[i].empty()) out.push_back({ViolationKind::EmptyClass, i, 0, std::nullopt});
        for (Vertex v : p.sets[i]) {
            if (owner[v] != kUnassigned) {
                out.push_back({ViolationKind::Disjointness, i, v, std::nullopt});
            } else {
                owner[v] = i;
            }
        }
    }

    for (std::size_t i = 0; i < k; ++i) {
        const std::size_t prev = (i + k - 1) % k;
        for (Vertex v : p.sets[i]) {
            if (owner[v] != i) continue;  // duplicate already reported
            bool has_pred = false;
            for (int d = 0; d < p.n; ++d) {
                const Vertex w = v ^ (Vertex{1} << d);
                if (owner[w] == prev) has_pred = true;
                if (owner[w] == i && v < w) {
                    out.push_back({ViolationKind::InternalEdge, i, v, w});
                }
            }
            if (!has_pred) out.push_back({ViolationKind::PredecessorNeighbor, i, v, std::nullopt});
        }
    }

    for (Vertex v = 0; v < count; ++v) {
        if (owner[v] == kUnassigned) out.push_back({ViolationKind::Cover, std::nullopt, v, std::nullopt});
    }

    auto key = [k](const Violation& x) {
        return std::tuple(x.class_index.value_or(k), x.vertex, static_cast<int>(x.kind),
                          x.other.value_or(0));
    };
    std::stable_sort(out.begin(), out.end(),
                     [&](const Violation& a, const Violation& b) { return key(a) < key(b); });
    return ValidationReport{out.empty(), std::move(out)};
}

LeftCyclicPartition construct_even(int n, std::uint64_t p) {
    if (n < 1) throw DomainError("construct_even: dimension must be >= 1");
    check_dimension(n);
    const CubeCycle cycle = even_cycle(n, p);
    const auto count = static_cast<std::size_t>(vertex_count(n));

    LeftCyclicPartition part{n, std::vector<std::vector<Vertex>>(p)};
    std::vector<bool> unassigned(count, true);
    for (std::size_t i = 0; i < p; ++i) {
        part.sets[i].push_back(cycle.vertices[i]);
        unassigned[cycle.vertices[i]] = false;
    }
    std::size_t remaining = count - p;

    while (remaining > 0) {
        for (std::size_t i = 0; i < p; ++i) {
            auto& next = part.sets[(i + 1) % p];
            // S_{i+1} may be S_i itself only when p = 1, which is excluded.
            const std::vector<Vertex> frontier = part.sets[i];
            for (Vertex v : frontier) {
                for (int d = 0; d < n; ++d) {
                    const Vertex w = v ^ (Vertex{1} << d);
                    if (unassigned[w]) {
                        unassigned[w] = false;
                        next.push_back(w);
                        --remaining;
                    }
                }
            }
        }
    }
    return checked(std::move(part), "construct_even");
}

LeftCyclicPartition lift(const LeftCyclicPartition& p) {
    require_valid(p, "lift");
    if (p.n + 1 > kMaxDimension) throw DomainError("lift: dimension too large");
    const std::size_t k = p.order();
    const Vertex top = Vertex{1} << p.n;
    LeftCyclicPartition out{p.n + 1, {}};
    out.sets.reserve(k);
    for (std::size_t i = 0; i < k; ++i) {
        out.sets.push_back(merged(shifted(p.sets[i], top), p.sets[(i + k - 1) % k]));
    }
    return checked(std::move(out), "lift");
}

namespace {

// Class sequence of double_minus_1 as (upper, lower) copies of S_j. Each entry
// lists the source classes taken with the top bit set and clear.
struct Slot {
    std::vector<std::size_t> upper;
    std::vector<std::size_t> lower;
};

std::vector<Slot> doubling_slots(std::size_t k) {
    std::vector<Slot> slots;
    slots.push_back({{}, {0}});
    slots.push_back({{0}, {1}});
    slots.push_back({{1}, {}});
    for (std::size_t i = 1; i <= (k - 3) / 2; ++i) {
        slots.push_back({{2 * i}, {}});
        slots.push_back({{}, {2 * i}});
        slots.push_back({{}, {2 * i + 1}});
        slots.push_back({{2 * i + 1}, {}});
    }
    slots.push_back({{k - 1}, {}});
    slots.push_back({{}, {k - 1}});
    return slots;
}

LeftCyclicPartition realize(const LeftCyclicPartition& p, const std::vector<Slot>& slots) {
    const Vertex top = Vertex{1} << p.n;
    LeftCyclicPartition out{p.n + 1, {}};
    out.sets.reserve(slots.size());
    for (const auto& slot : slots) {
        std::vector<Vertex> cls;
        for (auto j : slot.upper) {
            auto s = shifted(p.sets[j], top);
            cls.insert(cls.end(), s.begin(), s.end());
        }
        for (auto j : slot.lower) cls.insert(cls.end(), p.sets[j].begin(), p.sets[j].end());
        std::sort(cls.begin(), cls.end());
        out.sets.push_back(std::move(cls));
    }
    return out;
}

}  // namespace

LeftCyclicPartition double_minus_1(const LeftCyclicPartition& p) {
    require_odd_order(p, 5, "double_minus_1");
    require_valid(p, "double_minus_1");
    return checked(realize(p, doubling_slots(p.order())), "double_minus_1");
}

LeftCyclicPartition double_minus_3(const LeftCyclicPartition& p) {
    require_odd_order(p, 7, "double_minus_3");
    require_valid(p, "double_minus_3");
    auto slots = doubling_slots(p.order());
    // Slots 3..10 hold 1S2, 0S2, 0S3, 1S3, 1S4, 0S4, 0S5, 1S5.
    const std::vector<Slot> replacement{
        {{2}, {}}, {{3}, {2}}, {{}, {3}}, {{}, {4}}, {{4}, {5}}, {{5}, {}},
    };
    slots.erase(slots.begin() + 3, slots.begin() + 11);
    slots.insert(slots.begin() + 3, replacement.begin(), replacement.end());
    return checked(realize(p, slots), "double_minus_3");
}

LeftCyclicPartition h4_order5() {
    return checked({4, {{0b0000, 0b1101},
                        {0b0001, 0b1100, 0b0010, 0b1111},
                        {0b0110, 0b1011},
                        {0b0100, 0b0111, 0b1001, 0b1010},
                        {0b0011, 0b0101, 0b1000, 0b1110}}},
                   "h4_order5");
}

LeftCyclicPartition h4_order7() {
    return checked({4, {{0b0000, 0b1101},
                        {0b0001, 0b1100},
                        {0b0011, 0b1110},
                        {0b0010, 0b1111},
                        {0b0110, 0b1011},
                        {0b0100, 0b0111, 0b1001, 0b1010},
                        {0b0101, 0b1000}}},
                   "h4_order7");
}

LeftCyclicPartition max_odd(int n) {
    if (n < 4) throw DomainError("max_odd: needs n >= 4, got " + std::to_string(n));
    check_dimension(n);
    const std::size_t half = static_cast<std::size_t>(vertex_count(n - 1));
    const Vertex top = Vertex{1} << (n - 1);
    const Vertex flip = 1U | (Vertex{1} << (n - 2));
    const auto u = gray_cycle(n - 1);
    auto upper_v = [&](std::size_t i) { return top | (u[i] ^ flip); };

    LeftCyclicPartition out{n, {}};
    out.sets.reserve(half - 1);
    for (std::size_t i = 0; i + 4 <= half; ++i) out.sets.push_back({u[i], upper_v(i)});
    out.sets.push_back({u[half - 3], u[half - 1], upper_v(half - 3), upper_v(half - 1)});
    out.sets.push_back({u[half - 2], upper_v(half - 2)});
    return checked(std::move(out), "max_odd");
}

LeftCyclicPartition construct_odd(int n, std::uint64_t p) {
    if (p == 3) {
        throw ImpossibleOrder("order 3 is impossible: no n-cube admits a left cyclic partition of order 3");
    }
    check_dimension(n);
    if (p % 2 == 0 || p < 5 || n < 4 || p > max_odd_order(n)) {
        throw DomainError("odd order " + std::to_string(p) + " not constructible on H_" +
                          std::to_string(n) + ": odd orders must satisfy 5 <= p <= 2^(n-1)-1");
    }
    if (n == 4) return p == 5 ? h4_order5() : h4_order7();
    if (p <= max_odd_order(n - 1)) return lift(construct_odd(n - 1, p));
    if (p == max_odd_order(n)) return max_odd(n);
    const std::uint64_t q1 = (p + 1) / 2;
    const std::uint64_t q2 = (p + 3) / 2;
    if (q1 % 2 == 1 && q1 >= 5 && q1 <= max_odd_order(n - 1)) {
        return double_minus_1(construct_odd(n - 1, q1));
    }
    return double_minus_3(construct_odd(n - 1, q2));
}

LeftCyclicPartition construct(int n, std::uint64_t p) {
    return p % 2 == 0 ? construct_even(n, p) : construct_odd(n, p);
}

std::string admissible_orders(int n) {
    std::string s = "even orders 2.." + std::to_string(vertex_count(n));
    if (n >= 4) {
        s += "; odd orders 5.." + std::to_string(max_odd_order(n));
    } else {
        s += "; no odd orders (odd orders need n >= 4)";
    }
    if (n < 1) s = "none (dimension must be >= 1)";
    return s;
}

}  // namespace cubefire
