#pragma once

#include <map>
#include <mutex>
#include <utility>
#include <vector>

#include "hurwitz/partition.hpp"

namespace hurwitz {

namespace detail {

// First-column hook lengths ("beta numbers") of lambda, strictly decreasing.
inline std::vector<int> beta_numbers(const Partition& lambda) {
    int m = lambda.length();
    std::vector<int> beta(static_cast<size_t>(m));
    for (int i = 0; i < m; ++i) beta[static_cast<size_t>(i)] = lambda[i] + (m - 1 - i);
    return beta;
}

inline Partition partition_from_betas(std::vector<int> beta) {
    std::sort(beta.rbegin(), beta.rend());
    int m = static_cast<int>(beta.size());
    std::vector<int> parts;
    for (int i = 0; i < m; ++i) {
        int p = beta[static_cast<size_t>(i)] - (m - 1 - i);
        if (p > 0) parts.push_back(p);
    }
    return Partition(std::move(parts));
}

}  // namespace detail

// chi^lambda(mu) by recursive border-strip removal. Removing a strip of
// length k subtracts k from one beta number; the sign is the parity of the
// beta numbers jumped over. Parts of mu are consumed largest first, so memo
// keys are pairs of honest partitions.
inline Int character_value(const Partition& lambda, const Partition& mu) {
    if (lambda.weight() != mu.weight())
        throw std::domain_error("character_value: |lambda| != |mu|");

    static std::map<std::pair<Partition, Partition>, Int> cache;
    static std::mutex cache_mutex;

    auto rec = [](auto&& self, const Partition& lam, const Partition& rest) -> Int {
        if (lam.weight() == 0) return 1;
        {
            std::lock_guard<std::mutex> lock(cache_mutex);
            auto it = cache.find({lam, rest});
            if (it != cache.end()) return it->second;
        }
        int k = rest[0];
        Partition tail = Partition(std::vector<int>(rest.parts().begin() + 1, rest.parts().end()));
        std::vector<int> beta = detail::beta_numbers(lam);
        Int total = 0;
        for (size_t i = 0; i < beta.size(); ++i) {
            int b = beta[i];
            if (b < k) continue;
            int target = b - k;
            bool occupied = false;
            int jumped = 0;
            for (size_t j = 0; j < beta.size(); ++j) {
                if (j == i) continue;
                if (beta[j] == target) occupied = true;
                if (beta[j] > target && beta[j] < b) ++jumped;
            }
            if (occupied) continue;
            std::vector<int> nb = beta;
            nb[i] = target;
            Int sub = self(self, detail::partition_from_betas(std::move(nb)), tail);
            total += (jumped % 2 == 0) ? sub : -sub;
        }
        {
            std::lock_guard<std::mutex> lock(cache_mutex);
            cache.emplace(std::make_pair(lam, rest), total);
        }
        return total;
    };
    return rec(rec, lambda, mu);
}

// dim lambda = d!/prod(hooks); equals chi^lambda(1^d).
inline Int dimension(const Partition& lambda) {
    int d = lambda.weight();
    if (d == 0) return 1;
    std::vector<int> conj(static_cast<size_t>(lambda[0]), 0);
    for (int i = 0; i < lambda.length(); ++i)
        for (int j = 0; j < lambda[i]; ++j) ++conj[static_cast<size_t>(j)];
    Int hooks = 1;
    for (int i = 0; i < lambda.length(); ++i)
        for (int j = 0; j < lambda[i]; ++j)
            hooks *= (lambda[i] - j) + (conj[static_cast<size_t>(j)] - i) - 1;
    return exact_div(factorial(d), hooks);
}

// A filling of the skew shape outer\inner; entries keyed by (row, column).
struct SkewFilling {
    Partition outer;
    Partition inner;
    std::map<std::pair<int, int>, int> entries;

    SkewFilling(Partition out, Partition in) : outer(std::move(out)), inner(std::move(in)) {
        if (!outer.contains(inner))
            throw std::domain_error("SkewFilling: inner shape not contained in outer");
    }
};

namespace detail {

// Walks every filling of eta\lambda with content mu satisfying the LR rule:
// rows weakly increasing, columns strictly increasing, and the reverse
// reading word (right-to-left, top-to-bottom) a lattice word.
template <typename Visit>
void for_each_lr_filling(const Partition& lambda, const Partition& mu, const Partition& eta,
                         Visit&& visit) {
    SkewFilling filling(eta, lambda);
    if (mu.empty()) {
        visit(filling);
        return;
    }
    int rows = eta.length();
    auto inner = [&](int r) { return r < lambda.length() ? lambda[r] : 0; };
    // cells in reverse reading order: top row first, right to left
    std::vector<std::pair<int, int>> cells;
    for (int r = 0; r < rows; ++r)
        for (int c = eta[r] - 1; c >= inner(r); --c) cells.emplace_back(r, c);

    int nvals = mu.length();
    std::vector<int> quota(static_cast<size_t>(nvals));
    for (int i = 0; i < nvals; ++i) quota[static_cast<size_t>(i)] = mu[i];
    std::vector<int> used(static_cast<size_t>(nvals), 0);
    auto& fill = filling.entries;

    auto rec = [&](auto&& self, size_t idx) -> void {
        if (idx == cells.size()) {
            visit(const_cast<const SkewFilling&>(filling));
            return;
        }
        auto [r, c] = cells[idx];
        for (int v = 1; v <= nvals; ++v) {
            if (used[static_cast<size_t>(v - 1)] >= quota[static_cast<size_t>(v - 1)]) continue;
            // lattice: after placing, #v <= #(v-1) over the prefix read so far
            if (v > 1 && used[static_cast<size_t>(v - 1)] + 1 > used[static_cast<size_t>(v - 2)]) continue;
            // row weakly increasing: right neighbour (already placed) must be >= v
            if (c + 1 < eta[r]) {
                auto it = fill.find({r, c + 1});
                if (it != fill.end() && it->second < v) continue;
            }
            // column strictly increasing: cell above (in the skew part) must be < v
            if (r > 0 && c >= inner(r - 1)) {
                auto it = fill.find({r - 1, c});
                if (it != fill.end() && it->second >= v) continue;
            }
            fill[{r, c}] = v;
            ++used[static_cast<size_t>(v - 1)];
            self(self, idx + 1);
            --used[static_cast<size_t>(v - 1)];
            fill.erase({r, c});
        }
    };
    rec(rec, 0);
}

}  // namespace detail

// The witnesses behind a Littlewood-Richardson coefficient.
inline std::vector<SkewFilling> lr_fillings(const Partition& lambda, const Partition& mu,
                                            const Partition& eta) {
    std::vector<SkewFilling> out;
    if (lambda.weight() + mu.weight() != eta.weight()) return out;
    if (!eta.contains(lambda)) return out;
    detail::for_each_lr_filling(lambda, mu, eta, [&](const SkewFilling& f) { out.push_back(f); });
    return out;
}

// Littlewood-Richardson coefficient c^eta_{lambda,mu}. Out-of-range inputs
// give 0.
inline Int lr_coefficient(const Partition& lambda, const Partition& mu, const Partition& eta) {
    if (lambda.weight() + mu.weight() != eta.weight()) return 0;
    if (!eta.contains(lambda)) return 0;
    Int count = 0;
    detail::for_each_lr_filling(lambda, mu, eta, [&](const SkewFilling&) { ++count; });
    return count;
}

// g(lambda,mu,nu) = (1/d!) sum_rho |C_rho| chi^lambda chi^mu chi^nu.
inline Int kronecker_coefficient(const Partition& lambda, const Partition& mu,
                                 const Partition& nu) {
    int d = lambda.weight();
    if (mu.weight() != d || nu.weight() != d)
        throw std::domain_error("kronecker_coefficient: weight mismatch");
    Int sum = 0;
    for (const Partition& rho : generate_partitions(d))
        sum += class_size(rho) * character_value(lambda, rho) * character_value(mu, rho) *
               character_value(nu, rho);
    return exact_div(sum, factorial(d));
}

// Full character table of S_d; rows and columns in reverse-lex order.
struct CharacterTable {
    int d = 0;
    std::vector<Partition> irreps;
    std::vector<Partition> classes;
    std::vector<std::vector<Int>> values;  // values[i][j] = chi^{irreps[i]}(classes[j])
};

inline CharacterTable build_character_table(int d) {
    CharacterTable t;
    t.d = d;
    t.irreps = generate_partitions(d);
    t.classes = t.irreps;
    t.values.resize(t.irreps.size());
    for (size_t i = 0; i < t.irreps.size(); ++i) {
        t.values[i].reserve(t.classes.size());
        for (const Partition& mu : t.classes)
            t.values[i].push_back(character_value(t.irreps[i], mu));
    }
    return t;
}

}  // namespace hurwitz
