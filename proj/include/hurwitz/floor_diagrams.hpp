#pragma once

#include <algorithm>
#include <map>
#include <unordered_map>
#include <vector>

#include "hurwitz/numeric.hpp"

namespace hurwitz {

// Connected weighted multigraph on linearly ordered floors 1..d, every edge
// directed from the smaller to the larger floor, with divergence
// div(v) = (outgoing weight) - (incoming weight) <= 1 at every floor.
// Genus is the first Betti number: #edges - d + 1.
struct FloorDiagram {
    struct Edge {
        int u = 0, v = 0, w = 1;  // u < v, w >= 1
        friend auto operator<=>(const Edge&, const Edge&) = default;
    };

    int d = 0;
    std::vector<Edge> edges;  // kept sorted; parallel edges allowed

    int genus() const { return static_cast<int>(edges.size()) - d + 1; }

    int divergence(int vertex) const {
        int div = 0;
        for (const Edge& e : edges) {
            if (e.u == vertex) div += e.w;
            if (e.v == vertex) div -= e.w;
        }
        return div;
    }

    bool connected() const {
        if (d <= 0) return false;
        std::vector<int> parent(static_cast<size_t>(d + 1));
        for (int i = 0; i <= d; ++i) parent[static_cast<size_t>(i)] = i;
        auto find = [&](int x) {
            while (parent[static_cast<size_t>(x)] != x) x = parent[static_cast<size_t>(x)];
            return x;
        };
        for (const Edge& e : edges) parent[static_cast<size_t>(find(e.u))] = find(e.v);
        for (int v = 2; v <= d; ++v)
            if (find(v) != find(1)) return false;
        return true;
    }

    friend auto operator<=>(const FloorDiagram&, const FloorDiagram&) = default;
};

inline int max_genus_for_degree(int d) { return (d - 1) * (d - 2) / 2; }

inline constexpr int kFloorDiagramMaxDegree = 6;

// All connected labeled floor diagrams of degree d and genus g, in a
// deterministic (sorted) order. The sweep over floors keeps, per floor, the
// open edges emitted by earlier floors; identical (source, weight) classes
// are consumed by count, so each weighted multigraph arises exactly once.
inline std::vector<FloorDiagram> enumerate_diagrams(int d, int g) {
    if (d < 1 || d > kFloorDiagramMaxDegree)
        throw size_limit_error("enumerate_diagrams: need 1 <= d <= " +
                               std::to_string(kFloorDiagramMaxDegree));
    if (g < 0 || g > max_genus_for_degree(d))
        throw std::domain_error("enumerate_diagrams: genus out of range for a degree-" +
                                std::to_string(d) + " plane curve");
    int target_edges = d + g - 1;
    std::vector<FloorDiagram> out;

    struct OpenClass {
        int source, weight, count;
    };
    std::vector<OpenClass> open;  // entries may carry count 0 transiently
    int open_total = 0;           // number of open edges
    std::vector<FloorDiagram::Edge> edges;
    // union-find over floors for connectivity, restored on backtrack
    std::vector<int> parent(static_cast<size_t>(d + 1));
    for (int i = 0; i <= d; ++i) parent[static_cast<size_t>(i)] = i;
    auto find = [&](auto&& self, int x) -> int {
        return parent[static_cast<size_t>(x)] == x ? x : self(self, parent[static_cast<size_t>(x)]);
    };

    auto finish = [&]() {
        if (open_total != 0) return;
        if (static_cast<int>(edges.size()) != target_edges) return;
        int root = find(find, 1);
        for (int i = 2; i <= d; ++i)
            if (find(find, i) != root) return;
        FloorDiagram fd;
        fd.d = d;
        fd.edges = edges;
        std::sort(fd.edges.begin(), fd.edges.end());
        out.push_back(std::move(fd));
    };

    // Emit outgoing edges of v as a weakly increasing weight sequence, then
    // hand over to the next floor. Every open edge eventually closes, so
    // closed + open may never exceed the edge target.
    auto emit_new_edges = [&](auto&& self, auto&& next_floor, int v, int budget,
                              int min_weight) -> void {
        next_floor(next_floor, v + 1);
        if (v == d) return;  // the top floor has no later targets
        for (int w = min_weight; w <= budget; ++w) {
            if (static_cast<int>(edges.size()) + open_total + 1 > target_edges) break;
            bool merged = !open.empty() && open.back().source == v && open.back().weight == w;
            if (merged)
                ++open.back().count;
            else
                open.push_back({v, w, 1});
            ++open_total;
            self(self, next_floor, v, budget - w, w);
            --open_total;
            if (merged)
                --open.back().count;
            else
                open.pop_back();
        }
    };

    auto process_vertex = [&](auto&& self, int v) -> void {
        if (v > d) {
            finish();
            return;
        }
        // choose how many edges of each open class terminate at v
        auto choose = [&](auto&& self2, size_t idx, int in_weight) -> void {
            if (idx == open.size()) {
                emit_new_edges(emit_new_edges, self, v, in_weight + 1, 1);
                return;
            }
            // note: recursion below may reallocate `open`, so index, don't bind
            int avail = open[idx].count;
            int src = open[idx].source, wt = open[idx].weight;
            for (int take = 0; take <= avail; ++take) {
                if (take > 0) {
                    open[idx].count -= take;
                    open_total -= take;
                    for (int t = 0; t < take; ++t) edges.push_back({src, v, wt});
                    std::vector<int> saved = parent;
                    int a = find(find, src), b = find(find, v);
                    if (a != b) parent[static_cast<size_t>(a)] = b;
                    self2(self2, idx + 1, in_weight + take * wt);
                    parent = saved;
                    for (int t = 0; t < take; ++t) edges.pop_back();
                    open_total += take;
                    open[idx].count += take;
                } else {
                    self2(self2, idx + 1, in_weight);
                }
            }
        };
        choose(choose, 0, 0);
    };

    process_vertex(process_vertex, 1);
    std::sort(out.begin(), out.end());
    return out;
}

// mu(D) = prod of squared edge weights.
inline Int mu_multiplicity(const FloorDiagram& D) {
    Int m = 1;
    for (const auto& e : D.edges) m *= Int(e.w) * Int(e.w);
    return m;
}

namespace detail {

// Linear extensions of a poset on <= 27 elements given by a successor mask,
// counted by placing minimal elements first; memoized on the placed set.
inline Int count_linear_extensions(const std::vector<uint32_t>& preds, uint32_t full) {
    std::unordered_map<uint32_t, Int> memo;
    auto rec = [&](auto&& self, uint32_t placed) -> Int {
        if (placed == full) return 1;
        auto it = memo.find(placed);
        if (it != memo.end()) return it->second;
        Int total = 0;
        uint32_t remaining = full & ~placed;
        for (uint32_t m = remaining; m;) {
            uint32_t bit = m & (~m + 1);
            m ^= bit;
            size_t i = static_cast<size_t>(__builtin_ctz(bit));
            if ((preds[i] & ~placed) == 0) total += self(self, placed | bit);
        }
        memo.emplace(placed, total);
        return total;
    };
    return rec(rec, 0);
}

}  // namespace detail

// nu(D): markings of the diagram. Augment D so every floor has divergence
// exactly 1 by attaching 1 - div(v) upward rays of weight 1, then count the
// linear orders of {floors} + {edges and rays} that restrict to the floor
// order and put every edge strictly between its endpoints (rays above their
// floor), divided by the swaps of interchangeable rays and of parallel
// equal-weight edges.
inline Int nu_markings(const FloorDiagram& D) {
    int d = D.d;
    std::vector<int> rays(static_cast<size_t>(d + 1), 0);
    for (int v = 1; v <= d; ++v) {
        int def = 1 - D.divergence(v);
        if (def < 0) throw std::domain_error("nu_markings: divergence constraint violated");
        rays[static_cast<size_t>(v)] = def;
    }
    // elements: 0..d-1 floors, then edges, then rays
    int n_edges = static_cast<int>(D.edges.size());
    int n_rays = 0;
    for (int v = 1; v <= d; ++v) n_rays += rays[static_cast<size_t>(v)];
    int total = d + n_edges + n_rays;
    if (total > 27) throw size_limit_error("nu_markings: poset too large");

    std::vector<uint32_t> preds(static_cast<size_t>(total), 0);
    auto floor_bit = [](int v) { return static_cast<uint32_t>(1) << (v - 1); };
    // floors form a chain
    for (int v = 2; v <= d; ++v) preds[static_cast<size_t>(v - 1)] |= floor_bit(v - 1);
    int idx = d;
    for (const auto& e : D.edges) {
        preds[static_cast<size_t>(idx)] |= floor_bit(e.u);              // u < edge
        preds[static_cast<size_t>(e.v - 1)] |= (1u << idx);             // edge < v
        ++idx;
    }
    for (int v = 1; v <= d; ++v)
        for (int r = 0; r < rays[static_cast<size_t>(v)]; ++r) {
            preds[static_cast<size_t>(idx)] |= floor_bit(v);
            ++idx;
        }
    uint32_t full = total == 32 ? ~0u : ((1u << total) - 1);
    Int le = detail::count_linear_extensions(preds, full);

    Int aut = 1;
    for (int v = 1; v <= d; ++v) aut *= factorial(rays[static_cast<size_t>(v)]);
    std::map<FloorDiagram::Edge, int> repeats;
    for (const auto& e : D.edges) ++repeats[e];
    for (const auto& [e, k] : repeats) aut *= factorial(k);
    return exact_div(le, aut);
}

// N_{d,g} = sum over diagrams of mu * nu.
inline Int gw_invariant(int d, int g) {
    Int total = 0;
    for (const FloorDiagram& D : enumerate_diagrams(d, g)) total += mu_multiplicity(D) * nu_markings(D);
    return total;
}

// Genus-0 recursion for plane rational curves; the independent oracle for
// the floor-diagram counts.
inline Int kontsevich_oracle(int d) {
    if (d < 1 || d > 8) throw std::domain_error("kontsevich_oracle: need 1 <= d <= 8");
    std::vector<Int> N(static_cast<size_t>(d + 1), 0);
    N[1] = 1;
    for (int m = 2; m <= d; ++m) {
        Int total = 0;
        for (int d1 = 1; d1 < m; ++d1) {
            int d2 = m - d1;
            total += N[static_cast<size_t>(d1)] * N[static_cast<size_t>(d2)] * Int(d1) * Int(d1) *
                     Int(d2) *
                     (Int(d2) * binomial(3 * m - 4, 3 * d1 - 2) -
                      Int(d1) * binomial(3 * m - 4, 3 * d1 - 1));
        }
        N[static_cast<size_t>(m)] = total;
    }
    return N[static_cast<size_t>(d)];
}

}  // namespace hurwitz
