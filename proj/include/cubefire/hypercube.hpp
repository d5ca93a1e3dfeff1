#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace cubefire {

/// A vertex of H_n. Bit d of the value is coordinate d; the ambient
/// dimension is always passed alongside, never inferred.
using Vertex = std::uint32_t;

/// Raised for arguments outside an operation's mathematical domain.
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

inline constexpr int kMaxDimension = 24;
inline constexpr int kMaxGrayDimension = 28;

constexpr std::uint64_t vertex_count(int n) { return std::uint64_t{1} << n; }

/// Throws DomainError unless 0 <= n <= kMaxDimension.
void check_dimension(int n);

/// Throws DomainError unless v < 2^n.
void check_vertex(Vertex v, int n);

/// {v ^ 2^d : 0 <= d < n}, in ascending d.
std::vector<Vertex> neighbors(Vertex v, int n);

bool adjacent(Vertex a, Vertex b);

int popcount(Vertex v);

/// Popcount modulo 2; the two parity classes are the sides of the bipartition.
int parity(Vertex v);

/// Reflected binary Gray code of H_m: entry i is i ^ (i >> 1). A hamiltonian
/// cycle for every m in [1, kMaxGrayDimension].
std::vector<Vertex> gray_cycle(int m);

/// A closed walk of even length p in H_n, with distinct entries when p >= 4.
struct CubeCycle {
    int n = 0;
    std::vector<Vertex> vertices;

    std::size_t length() const { return vertices.size(); }
};

/// Cycle of length p (even, 2 <= p <= 2^n). p = 2 is the edge [0, 1] walked
/// back and forth. For p = 2m >= 4 the cycle lives in the smallest subcube
/// H_d with 2^d >= p: the first m Gray words of H_{d-1} are walked with bit
/// d-1 clear and then back with bit d-1 set.
CubeCycle even_cycle(int n, std::uint64_t p);

/// True iff consecutive entries (cyclically) are adjacent and, for length >= 4,
/// all entries are distinct and in range.
bool is_cube_cycle(const CubeCycle& c);

/// Zero-padded binary label of width n, most significant coordinate first.
std::string binary_label(Vertex v, int n);

}  // namespace cubefire
