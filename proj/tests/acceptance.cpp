// Acceptance suite: one line per criterion, non-zero exit if any fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "cubefire/dynamics.hpp"
#include "cubefire/oracle.hpp"
#include "cubefire/partition.hpp"

using namespace cubefire;
using Clock = std::chrono::steady_clock;

namespace {

struct Check {
    bool ok = true;
    std::string detail;

    void fail(const std::string& why) {
        if (ok) detail = why;
        ok = false;
    }
};

bool cycles_through(const LeftCyclicPartition& p, Check& c) {
    const auto r = evolve(from_partition(p));
    const std::string tag = "(n=" + std::to_string(p.n) + ", p=" + std::to_string(p.order()) + ")";
    if (!r.determined()) {
        c.fail("undetermined " + tag);
        return false;
    }
    if (r.transient != 0) c.fail("transient " + std::to_string(r.transient) + " " + tag);
    if (r.period != p.order()) c.fail("period " + std::to_string(r.period) + " " + tag);
    return c.ok;
}

// Run `body` and report it against a wall-clock budget in seconds.
bool criterion(int id, const char* name, double budget, const std::function<void(Check&)>& body) {
    Check c;
    const auto t0 = Clock::now();
    try {
        body(c);
    } catch (const std::exception& e) {
        c.fail(std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(Clock::now() - t0).count();
    if (secs > budget) c.fail("took " + std::to_string(secs) + " s, budget " + std::to_string(budget) + " s");
    std::printf("[%s] AC%-2d %-44s %8.3f s%s%s\n", c.ok ? "PASS" : "FAIL", id, name, secs,
                c.ok ? "" : "  -- ", c.detail.c_str());
    std::fflush(stdout);
    return c.ok;
}

std::set<std::uint64_t> periods(const PeriodCensus& c) {
    std::set<std::uint64_t> out;
    for (const auto& [key, count] : c.entries) out.insert(key.period);
    return out;
}

}  // namespace

int main() {
    int failures = 0;
    auto tally = [&](bool ok) { failures += ok ? 0 : 1; };

    tally(criterion(1, "even orders 2..2^n, n = 1..8", 60, [](Check& c) {
        for (int n = 1; n <= 8; ++n) {
            for (std::uint64_t p = 2; p <= vertex_count(n); p += 2) {
                const auto part = construct_even(n, p);
                if (!validate(part).valid) c.fail("invalid construct_even(" + std::to_string(n) + ", " + std::to_string(p) + ")");
                cycles_through(part, c);
            }
        }
    }));

    tally(criterion(2, "odd orders 5..2^(n-1)-1, n = 4..7", 60, [](Check& c) {
        for (int n = 4; n <= 7; ++n) {
            for (std::uint64_t p = 5; p <= vertex_count(n - 1) - 1; p += 2) {
                const auto part = construct_odd(n, p);
                if (!validate(part).valid) c.fail("invalid construct_odd(" + std::to_string(n) + ", " + std::to_string(p) + ")");
                cycles_through(part, c);
            }
        }
    }));

    tally(criterion(3, "published H4 listings, max_odd(4)", 1, [](Check& c) {
        const LeftCyclicPartition five{4, {{0b0000, 0b1101},
                                           {0b0001, 0b0010, 0b1100, 0b1111},
                                           {0b0110, 0b1011},
                                           {0b0100, 0b0111, 0b1001, 0b1010},
                                           {0b0011, 0b0101, 0b1000, 0b1110}}};
        const LeftCyclicPartition seven{4, {{0b0000, 0b1101},
                                            {0b0001, 0b1100},
                                            {0b0011, 0b1110},
                                            {0b0010, 0b1111},
                                            {0b0110, 0b1011},
                                            {0b0100, 0b0111, 0b1001, 0b1010},
                                            {0b0101, 0b1000}}};
        if (h4_order5() != five) c.fail("h4_order5 differs from the listing");
        if (h4_order7() != seven) c.fail("h4_order7 differs from the listing");
        if (max_odd(4) != seven) c.fail("max_odd(4) differs from h4_order7");
    }));

    tally(criterion(4, "no order-3 partition: (2,3), (3,3) exhaustive", 10, [](Check& c) {
        if (search_partition(2, 3).found) c.fail("found (2,3)");
        if (search_partition(3, 3).found) c.fail("found (3,3)");
    }));
    tally(criterion(4, "no order-3 partition: (4,3) pruned", 600, [](Check& c) {
        if (search_partition(4, 3).found) c.fail("found (4,3)");
    }));

    tally(criterion(5, "odd bound on H_3: k = 5, 7 absent", 60, [](Check& c) {
        if (search_partition(3, 5).found) c.fail("found (3,5)");
        if (search_partition(3, 7).found) c.fail("found (3,7)");
    }));

    tally(criterion(6, "census periods on H_2 and H_3", 60, [](Check& c) {
        const auto c2 = census(2);
        const auto c3 = census(3);
        if (c2.total != 16) c.fail("H_2 total " + std::to_string(c2.total));
        if (c3.total != 4096) c.fail("H_3 total " + std::to_string(c3.total));
        for (const auto* cen : {&c2, &c3}) {
            std::uint64_t sum = 0;
            for (const auto& [key, count] : cen->entries) sum += count;
            if (sum != cen->total) c.fail("census counts do not sum to total");
        }
        if (periods(c2) != std::set<std::uint64_t>{1, 2, 4}) c.fail("H_2 period set differs");
        if (periods(c3) != std::set<std::uint64_t>{1, 2, 4, 6, 8}) c.fail("H_3 period set differs");
    }));

    // Criteria 7 and 8 share one seeded corpus: 1000 orientations per n.
    struct Sample {
        Orientation start;
        EvolutionResult fast;
    };
    std::vector<Sample> corpus;

    tally(criterion(7, "conservation and exclusion, n = 2..10", 120, [&corpus](Check& c) {
        std::mt19937_64 rng(0x5eed);
        for (int n = 2; n <= 10; ++n) {
            const std::uint64_t total = static_cast<std::uint64_t>(n) * vertex_count(n - 1);
            for (int i = 0; i < 1000; ++i) {
                auto o = random_orientation(n, rng);
                auto r = evolve(o);
                if (!r.determined() || !r.orientation_period) {
                    c.fail("trajectory did not close for n=" + std::to_string(n));
                    continue;
                }
                corpus.push_back({o, r});

                // Chips tracked by the firing rule alone, compared with in-degrees.
                auto x = chips(o).chips;
                for (std::uint64_t t = 0; t <= r.steps_executed; ++t) {
                    std::uint64_t sum = 0;
                    for (Vertex v = 0; v < x.size(); ++v) {
                        sum += x[v];
                        if (x[v] != o.in_degree(v)) {
                            c.fail("chips != in-degree at n=" + std::to_string(n));
                            break;
                        }
                    }
                    if (sum != total) c.fail("chip total changed at n=" + std::to_string(n));
                    const auto step = parallel_step(o);
                    for (std::size_t a = 0; a < step.fired.size(); ++a) {
                        for (std::size_t b = a + 1; b < step.fired.size(); ++b) {
                            if (adjacent(step.fired[a], step.fired[b])) c.fail("adjacent vertices fired together");
                        }
                    }
                    for (Vertex v : step.fired) {
                        x[v] = static_cast<std::uint8_t>(x[v] - n);
                        for (int d = 0; d < n; ++d) ++x[v ^ (Vertex{1} << d)];
                    }
                    o = step.next;
                    if (!c.ok) return;
                }
            }
        }
    }));

    tally(criterion(8, "reference_period agrees with evolve", 120, [&corpus](Check& c) {
        if (corpus.size() != 9000) c.fail("corpus has " + std::to_string(corpus.size()) + " entries");
        for (const auto& s : corpus) {
            const auto ref = reference_period(s.start);
            if (!ref.determined || ref.transient != s.fast.transient || ref.period != s.fast.period) {
                c.fail("disagreement at n=" + std::to_string(s.start.dimension()));
                return;
            }
        }
    }));

    tally(criterion(9, "hamiltonian fixed points, n = 2..10", 5, [](Check& c) {
        for (int n = 2; n <= 10; ++n) {
            const auto h = hamiltonian_orientation(n);
            if (!sinks(h).empty()) c.fail("sink in hamiltonian_orientation(" + std::to_string(n) + ")");
            const auto r = evolve(h);
            if (r.transient != 0 || r.period != 1) c.fail("not a fixed point at n=" + std::to_string(n));
        }
    }));

    tally(criterion(10, "1000 parallel steps on H_16", 60, [](Check& c) {
        std::mt19937_64 rng(16);
        auto o = random_orientation(16, rng);
        std::uint64_t fired = 0;
        for (int t = 0; t < 1000; ++t) {
            auto step = parallel_step(o);
            fired += step.fired.size();
            o = std::move(step.next);
        }
        if (chips(o).total() != 16ULL * 32768ULL) c.fail("chip total changed");
        if (fired == 0) c.fail("nothing fired");
    }));

    std::printf("%s: %d criterion group(s) failed\n", failures ? "FAILED" : "OK", failures);
    return failures ? 1 : 0;
}
