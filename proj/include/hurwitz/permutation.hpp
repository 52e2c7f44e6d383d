#pragma once

#include <algorithm>
#include <numeric>
#include <vector>

#include "hurwitz/partition.hpp"

namespace hurwitz {

// A permutation of {0,...,d-1} stored as its image vector.
using Perm = std::vector<int>;

inline Perm perm_identity(int d) {
    Perm p(static_cast<size_t>(d));
    std::iota(p.begin(), p.end(), 0);
    return p;
}

// (a * b)(x) = a(b(x))
inline Perm perm_compose(const Perm& a, const Perm& b) {
    Perm c(b.size());
    for (size_t x = 0; x < b.size(); ++x) c[x] = a[static_cast<size_t>(b[x])];
    return c;
}

inline Perm perm_inverse(const Perm& a) {
    Perm inv(a.size());
    for (size_t x = 0; x < a.size(); ++x) inv[static_cast<size_t>(a[x])] = static_cast<int>(x);
    return inv;
}

inline Partition cycle_type(const Perm& p) {
    std::vector<char> seen(p.size(), 0);
    std::vector<int> lens;
    for (size_t i = 0; i < p.size(); ++i) {
        if (seen[i]) continue;
        int len = 0;
        for (size_t j = i; !seen[j]; j = static_cast<size_t>(p[j])) {
            seen[j] = 1;
            ++len;
        }
        lens.push_back(len);
    }
    return Partition(std::move(lens));
}

// Visits every permutation of S_d with cycle type lambda exactly once.
// The cycle containing the smallest unplaced point is chosen first, which
// makes the enumeration canonical and duplicate-free.
template <typename F>
void for_each_permutation_of_type(int d, const Partition& lambda, F&& visit) {
    if (lambda.weight() != d) throw std::domain_error("cycle type must be a partition of d");
    auto mult = lambda.multiplicities();
    std::vector<std::pair<int, int>> remaining(mult.begin(), mult.end());
    Perm img(static_cast<size_t>(d), -1);
    std::vector<int> free_pts(static_cast<size_t>(d));
    std::iota(free_pts.begin(), free_pts.end(), 0);

    auto rec = [&](auto&& self) -> void {
        if (free_pts.empty()) {
            visit(const_cast<const Perm&>(img));
            return;
        }
        int anchor = free_pts[0];
        for (auto& [len, count] : remaining) {
            if (count == 0) continue;
            --count;
            // choose an ordered (len-1)-arrangement of companions for the
            // cycle (anchor, c1, ..., c_{len-1})
            std::vector<int> pool(free_pts.begin() + 1, free_pts.end());
            std::vector<int> cycle{anchor};
            auto choose = [&](auto&& self2, int need) -> void {
                if (need == 0) {
                    for (size_t i = 0; i < cycle.size(); ++i)
                        img[static_cast<size_t>(cycle[i])] = cycle[(i + 1) % cycle.size()];
                    std::vector<int> saved = free_pts;
                    std::vector<int> next_free;
                    for (int x : free_pts)
                        if (std::find(cycle.begin(), cycle.end(), x) == cycle.end())
                            next_free.push_back(x);
                    free_pts.swap(next_free);
                    self(self);
                    free_pts.swap(saved);
                    for (int x : cycle) img[static_cast<size_t>(x)] = -1;
                    return;
                }
                for (size_t i = 0; i < pool.size(); ++i) {
                    int x = pool[i];
                    if (std::find(cycle.begin(), cycle.end(), x) != cycle.end()) continue;
                    cycle.push_back(x);
                    self2(self2, need - 1);
                    cycle.pop_back();
                }
            };
            choose(choose, len - 1);
            ++count;
        }
    };
    rec(rec);
}

// Orbit structure of the group generated by perms: transitive iff the union
// of the functional graphs is connected.
inline bool generates_transitive_group(const std::vector<Perm>& perms, int d) {
    if (d <= 1) return true;
    std::vector<int> parent(static_cast<size_t>(d));
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
        while (parent[static_cast<size_t>(x)] != x) {
            parent[static_cast<size_t>(x)] = parent[static_cast<size_t>(parent[static_cast<size_t>(x)])];
            x = parent[static_cast<size_t>(x)];
        }
        return x;
    };
    for (const Perm& p : perms)
        for (int x = 0; x < d; ++x) {
            int a = find(x), b = find(p[static_cast<size_t>(x)]);
            if (a != b) parent[static_cast<size_t>(a)] = b;
        }
    int root = find(0);
    for (int x = 1; x < d; ++x)
        if (find(x) != root) return false;
    return true;
}

// A canonical representative of the class: cycles of the given lengths laid
// out consecutively on 0..d-1.
inline Perm representative_of_type(const Partition& lambda) {
    int d = lambda.weight();
    Perm p = perm_identity(d);
    int base = 0;
    for (int len : lambda.parts()) {
        for (int i = 0; i < len; ++i) p[static_cast<size_t>(base + i)] = base + (i + 1) % len;
        base += len;
    }
    return p;
}

}  // namespace hurwitz
