#include "cubefire/hypercube.hpp"

#include <bit>
#include <unordered_set>

namespace cubefire {

void check_dimension(int n) {
    if (n < 0 || n > kMaxDimension) {
        throw DomainError("dimension " + std::to_string(n) + " outside [0, " +
                          std::to_string(kMaxDimension) + "]");
    }
}

void check_vertex(Vertex v, int n) {
    if (static_cast<std::uint64_t>(v) >= vertex_count(n)) {
        throw DomainError("vertex " + std::to_string(v) + " out of range for H_" +
                          std::to_string(n));
    }
}

std::vector<Vertex> neighbors(Vertex v, int n) {
    check_dimension(n);
    check_vertex(v, n);
    std::vector<Vertex> out;
    out.reserve(static_cast<std::size_t>(n));
    for (int d = 0; d < n; ++d) out.push_back(v ^ (Vertex{1} << d));
    return out;
}

bool adjacent(Vertex a, Vertex b) { return std::has_single_bit(a ^ b); }

int popcount(Vertex v) { return std::popcount(v); }

int parity(Vertex v) { return std::popcount(v) & 1; }

std::vector<Vertex> gray_cycle(int m) {
    if (m < 1 || m > kMaxGrayDimension) {
        throw DomainError("gray_cycle: dimension must be in [1, " +
                          std::to_string(kMaxGrayDimension) + "], got " + std::to_string(m));
    }
    std::vector<Vertex> out(static_cast<std::size_t>(vertex_count(m)));
    for (Vertex i = 0; i < out.size(); ++i) out[i] = i ^ (i >> 1);
    return out;
}

CubeCycle even_cycle(int n, std::uint64_t p) {
    if (n < 1 || n > kMaxGrayDimension) {
        throw DomainError("even_cycle: dimension must be in [1, " +
                          std::to_string(kMaxGrayDimension) + "]");
    }
    if (p < 2 || p % 2 != 0 || p > vertex_count(n)) {
        throw DomainError("even_cycle: length must be even and in [2, 2^" + std::to_string(n) +
                          "], got " + std::to_string(p));
    }
    CubeCycle c{n, {}};
    if (p == 2) {
        c.vertices = {0, 1};
        return c;
    }
    int d = 1;
    while (vertex_count(d) < p) ++d;
    const std::size_t half = p / 2;
    const Vertex top = Vertex{1} << (d - 1);
    std::vector<Vertex> path = d == 1 ? std::vector<Vertex>{0} : gray_cycle(d - 1);
    path.resize(half);
    c.vertices.reserve(p);
    for (Vertex g : path) c.vertices.push_back(g);
    for (auto it = path.rbegin(); it != path.rend(); ++it) c.vertices.push_back(top | *it);
    return c;
}

bool is_cube_cycle(const CubeCycle& c) {
    const auto& xs = c.vertices;
    if (xs.size() < 2 || xs.size() % 2 != 0) return false;
    for (Vertex v : xs) {
        if (static_cast<std::uint64_t>(v) >= vertex_count(c.n)) return false;
    }
    for (std::size_t i = 0; i < xs.size(); ++i) {
        if (!adjacent(xs[i], xs[(i + 1) % xs.size()])) return false;
    }
    if (xs.size() >= 4) {
        std::unordered_set<Vertex> seen(xs.begin(), xs.end());
        if (seen.size() != xs.size()) return false;
    }
    return true;
}

std::string binary_label(Vertex v, int n) {
    std::string s(static_cast<std::size_t>(n), '0');
    for (int d = 0; d < n; ++d) {
        if ((v >> d) & 1U) s[static_cast<std::size_t>(n - 1 - d)] = '1';
    }
    return s;
}

}  // namespace cubefire
