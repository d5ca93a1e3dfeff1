#include <doctest.h>

#include <set>

#include "cubefire/oracle.hpp"
#include "support.hpp"

using namespace cubefire;
using cubefire::testing::admissible_pairs;
using cubefire::testing::brute_is_left_cyclic;

namespace {

std::set<std::uint64_t> periods(const PeriodCensus& c) {
    std::set<std::uint64_t> out;
    for (const auto& [key, count] : c.entries) out.insert(key.period);
    return out;
}

}  // namespace

TEST_CASE("search_partition finds no order-3 partition") {
    CHECK_FALSE(search_partition(2, 3).found);
    CHECK_FALSE(search_partition(3, 3).found);
    const auto h4 = search_partition(4, 3);
    CHECK_FALSE(h4.found);
    CHECK(h4.nodes_explored > 0);
}

TEST_CASE("search_partition respects the odd-order bound on H_3") {
    CHECK_FALSE(search_partition(3, 5).found);
    CHECK_FALSE(search_partition(3, 7).found);
}

TEST_CASE("search_partition witnesses are valid") {
    const auto s = search_partition(3, 4);
    REQUIRE(s.found);
    REQUIRE(s.witness.has_value());
    CHECK(s.witness->order() == 4);
    CHECK(brute_is_left_cyclic(3, s.witness->sets));
    CHECK(std::find(s.witness->sets[0].begin(), s.witness->sets[0].end(), Vertex{0}) != s.witness->sets[0].end());
}

TEST_CASE("search_partition succeeds wherever a constructor exists") {
    for (auto [n, p] : admissible_pairs(1, 4)) {
        CAPTURE(n);
        CAPTURE(p);
        const auto s = search_partition(n, p);
        CHECK(s.found);
        if (s.found) CHECK(validate(*s.witness).valid);
    }
}

TEST_CASE("search_partition small edge cases") {
    CHECK_FALSE(search_partition(0, 1).found);  // lone vertex needs a neighbour in S_0
    CHECK(search_partition(1, 2).found);
    CHECK_FALSE(search_partition(1, 1).found);
    CHECK_FALSE(search_partition(2, 5).found);  // more classes than vertices
    CHECK_THROWS_AS(search_partition(5, 3), DomainError);
    CHECK_THROWS_AS(search_partition(3, 0), DomainError);
}

TEST_CASE("census on H_2 and H_3") {
    const auto c2 = census(2);
    CHECK(c2.total == 16);
    CHECK(periods(c2) == std::set<std::uint64_t>{1, 2, 4});
    std::uint64_t sum = 0;
    for (const auto& [key, count] : c2.entries) sum += count;
    CHECK(sum == 16);

    const auto c3 = census(3);
    CHECK(c3.total == 4096);
    CHECK(periods(c3) == std::set<std::uint64_t>{1, 2, 4, 6, 8});

    CHECK_THROWS_AS(census(4), DomainError);
}

TEST_CASE("census agrees with the reference detector orientation by orientation") {
    for (int n = 1; n <= 3; ++n) {
        const auto c = census(n);
        std::map<CensusKey, std::uint64_t> expected;
        const std::uint64_t edges = Orientation(n).edge_count();
        std::vector<std::uint8_t> bits(edges);
        for (std::uint64_t code = 0; code < (std::uint64_t{1} << edges); ++code) {
            for (std::uint64_t e = 0; e < edges; ++e) bits[e] = (code >> e) & 1U;
            const auto r = reference_period(Orientation::from_edge_bits(n, bits));
            REQUIRE(r.determined);
            ++expected[{r.period, r.transient}];
        }
        CHECK(c.entries == expected);
    }
}

TEST_CASE("reference_period basics") {
    const auto edge = reference_period(Orientation(1));
    CHECK(edge.determined);
    CHECK(edge.transient == 0);
    CHECK(edge.period == 2);

    const auto fixed = reference_period(hamiltonian_orientation(3));
    CHECK(fixed.transient == 0);
    CHECK(fixed.period == 1);

    CHECK_FALSE(reference_period(from_partition(construct_even(3, 8)), 4).determined);
}

TEST_CASE("reference_period agrees with evolve on random orientations") {
    std::mt19937_64 rng(1234);
    for (int n = 2; n <= 5; ++n) {
        for (int i = 0; i < 1000; ++i) {
            const auto o = random_orientation(n, rng);
            const auto ref = reference_period(o);
            const auto fast = evolve(o);
            REQUIRE(ref.determined);
            REQUIRE(fast.determined());
            CHECK(ref.transient == fast.transient);
            CHECK(ref.period == fast.period);
        }
    }
}

TEST_CASE("random_orientation is reproducible") {
    std::mt19937_64 a(42);
    std::mt19937_64 b(42);
    for (int i = 0; i < 10; ++i) CHECK(random_orientation(6, a) == random_orientation(6, b));
}

TEST_CASE("check_lemma23") {
    CHECK_FALSE(check_lemma23({2, {{0, 1}, {2}, {3}}}));
    CHECK_FALSE(check_lemma23({2, {{0}, {1}, {2, 3}}}));
    CHECK_THROWS_AS(check_lemma23(h4_order5()), DomainError);

    // Sweep every order-3 labelling of H_2 and H_3: validity never holds
    // without the two-neighbour property.
    for (int n = 2; n <= 3; ++n) {
        const auto count = vertex_count(n);
        std::uint64_t total = 1;
        for (std::uint64_t i = 0; i < count; ++i) total *= 3;
        for (std::uint64_t code = 0; code < total; ++code) {
            LeftCyclicPartition p{n, std::vector<std::vector<Vertex>>(3)};
            std::uint64_t c = code;
            for (Vertex v = 0; v < count; ++v, c /= 3) p.sets[c % 3].push_back(v);
            const bool valid = validate(p).valid;
            CHECK_FALSE(valid);
            CHECK(check_lemma23(p) == valid);
        }
    }
}
