#include "cubefire/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace cubefire {

namespace {

constexpr int kNoLabel = -1;

class LabelSearch {
public:
    LabelSearch(int n, std::size_t k)
        : n_(n), k_(static_cast<int>(k)), count_(static_cast<std::size_t>(vertex_count(n))),
          label_(count_, kNoLabel), open_(count_, n + 1), class_size_(k, 0) {
        order_.resize(count_);
        for (Vertex v = 0; v < count_; ++v) order_[v] = v;
        std::stable_sort(order_.begin(), order_.end(),
                         [](Vertex a, Vertex b) { return popcount(a) < popcount(b); });
    }

    SearchOutcome run() {
        SearchOutcome out;
        if (assign_from(0)) {
            LeftCyclicPartition p{n_, std::vector<std::vector<Vertex>>(static_cast<std::size_t>(k_))};
            for (Vertex v = 0; v < count_; ++v) p.sets[static_cast<std::size_t>(label_[v])].push_back(v);
            if (!validate(p).valid) throw std::logic_error("search_partition: witness failed validation");
            if (k_ == 3 && !check_lemma23(p)) {
                throw std::logic_error("search_partition: order-3 witness contradicts the two-neighbour property");
            }
            out.found = true;
            out.witness = std::move(p);
        }
        out.nodes_explored = nodes_;
        return out;
    }

private:
    int predecessor(int c) const { return (c + k_ - 1) % k_; }

    bool has_predecessor_neighbour(Vertex v) const {
        const int want = predecessor(label_[v]);
        for (int d = 0; d < n_; ++d) {
            if (label_[v ^ (Vertex{1} << d)] == want) return true;
        }
        return false;
    }

    // Marks v's closed neighbourhood as one label closer to complete and
    // checks every vertex whose neighbourhood just became fully labelled.
    bool close_around(Vertex v) {
        bool ok = true;
        auto touch = [&](Vertex w) {
            if (--open_[w] == 0 && !has_predecessor_neighbour(w)) ok = false;
        };
        touch(v);
        for (int d = 0; d < n_; ++d) touch(v ^ (Vertex{1} << d));
        return ok;
    }

    void reopen_around(Vertex v) {
        ++open_[v];
        for (int d = 0; d < n_; ++d) ++open_[v ^ (Vertex{1} << d)];
    }

    bool assign_from(std::size_t pos) {
        if (pos == count_) {
            return std::all_of(class_size_.begin(), class_size_.end(), [](std::size_t s) { return s > 0; });
        }
        const auto empty_classes = static_cast<std::size_t>(
            std::count(class_size_.begin(), class_size_.end(), std::size_t{0}));
        if (empty_classes > count_ - pos) return false;

        const Vertex v = order_[pos];
        const int last = pos == 0 ? 0 : k_ - 1;
        for (int c = 0; c <= last; ++c) {
            bool clash = false;
            for (int d = 0; d < n_ && !clash; ++d) clash = label_[v ^ (Vertex{1} << d)] == c;
            if (clash) continue;

            ++nodes_;
            label_[v] = c;
            ++class_size_[static_cast<std::size_t>(c)];
            const bool ok = close_around(v);
            if (ok && assign_from(pos + 1)) return true;
            reopen_around(v);
            --class_size_[static_cast<std::size_t>(c)];
            label_[v] = kNoLabel;
        }
        return false;
    }

    int n_;
    int k_;
    std::size_t count_;
    std::vector<Vertex> order_;
    std::vector<int> label_;
    std::vector<int> open_;  // unlabelled vertices in the closed neighbourhood
    std::vector<std::size_t> class_size_;
    std::uint64_t nodes_ = 0;
};

}  // namespace

double search_cost_estimate(int n, std::size_t k) {
    return std::pow(static_cast<double>(k), std::ldexp(1.0, n) - 1.0);
}

SearchOutcome search_partition(int n, std::size_t k) {
    if (n < 0 || n > kMaxSearchDimension || k < 1) {
        std::ostringstream msg;
        msg << "search_partition supports 0 <= n <= " << kMaxSearchDimension << " and k >= 1; (n="
            << n << ", k=" << k << ") would visit up to ~" << search_cost_estimate(n, k)
            << " labellings";
        throw DomainError(msg.str());
    }
    if (k > vertex_count(n)) return {};
    return LabelSearch(n, k).run();
}

PeriodCensus census(int n) {
    if (n < 0 || n > kMaxCensusDimension) {
        std::ostringstream msg;
        msg << "census supports n <= " << kMaxCensusDimension << "; H_" << n << " has 2^"
            << (n < 1 ? 0 : static_cast<std::uint64_t>(n) * vertex_count(n - 1))
            << " orientations";
        throw DomainError(msg.str());
    }
    PeriodCensus c;
    c.n = n;
    const std::uint64_t edges = Orientation(n).edge_count();
    c.total = std::uint64_t{1} << edges;
    std::vector<std::uint8_t> bits(edges);
    for (std::uint64_t code = 0; code < c.total; ++code) {
        for (std::uint64_t e = 0; e < edges; ++e) bits[e] = (code >> e) & 1U;
        const auto r = evolve(Orientation::from_edge_bits(n, bits));
        if (!r.determined()) throw std::logic_error("census: trajectory did not close");
        ++c.entries[{r.period, r.transient}];
    }
    return c;
}

ReferencePeriod reference_period(const Orientation& o, std::uint64_t max_steps) {
    if (max_steps < 1) throw DomainError("reference_period: max_steps must be >= 1");
    const int n = o.dimension();
    const auto count = static_cast<std::size_t>(o.vertex_count());

    std::vector<int> x(count);
    for (Vertex v = 0; v < count; ++v) x[v] = o.in_degree(v);

    std::vector<std::vector<int>> seen;
    for (std::uint64_t t = 0;; ++t) {
        for (std::size_t j = 0; j < seen.size(); ++j) {
            if (seen[j] == x) return {true, j, t - j};
        }
        if (t == max_steps) return {};
        seen.push_back(x);

        std::vector<int> next = x;
        for (Vertex v = 0; v < count; ++v) {
            if (x[v] != n) continue;  // a sink holds one chip per incident edge
            next[v] -= n;
            for (int d = 0; d < n; ++d) next[v ^ (Vertex{1} << d)] += 1;
        }
        x = std::move(next);
    }
}

bool check_lemma23(const LeftCyclicPartition& p) {
    if (p.order() != 3) throw DomainError("check_lemma23: order must be 3");
    if (p.n < 2) throw DomainError("check_lemma23: needs n >= 2");
    if (!validate(p).valid) return false;
    std::vector<std::size_t> cls(static_cast<std::size_t>(vertex_count(p.n)));
    for (std::size_t i = 0; i < 3; ++i) {
        for (Vertex v : p.sets[i]) cls[v] = i;
    }
    for (Vertex v = 0; v < cls.size(); ++v) {
        const std::size_t prev = (cls[v] + 2) % 3;
        int hits = 0;
        for (Vertex w : neighbors(v, p.n)) hits += cls[w] == prev;
        if (hits < 2) return false;
    }
    return true;
}

Orientation random_orientation(int n, std::mt19937_64& rng) {
    Orientation o(n);
    std::vector<std::uint8_t> bits(o.edge_count());
    std::uint64_t word = 0;
    for (std::size_t e = 0; e < bits.size(); ++e) {
        if (e % 64 == 0) word = rng();
        bits[e] = (word >> (e % 64)) & 1U;
    }
    return Orientation::from_edge_bits(n, bits);
}

}  // namespace cubefire
