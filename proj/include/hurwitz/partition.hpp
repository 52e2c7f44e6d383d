#pragma once

#include <algorithm>
#include <compare>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "hurwitz/numeric.hpp"

namespace hurwitz {

// Weakly decreasing sequence of positive integers. Doubles as a cycle type
// of a permutation and as a ramification profile of a covering. The empty
// partition is the unique partition of 0 and is legal everywhere it makes
// sense. Inputs are order-normalized on construction.
class Partition {
  public:
    Partition() = default;

    explicit Partition(std::vector<int> parts) : parts_(std::move(parts)) {
        std::sort(parts_.rbegin(), parts_.rend());
        for (int p : parts_)
            if (p <= 0) throw std::domain_error("Partition: parts must be positive");
        weight_ = std::accumulate(parts_.begin(), parts_.end(), 0);
    }

    Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

    const std::vector<int>& parts() const { return parts_; }
    int weight() const { return weight_; }
    int length() const { return static_cast<int>(parts_.size()); }
    bool empty() const { return parts_.empty(); }
    int operator[](int i) const { return parts_[static_cast<size_t>(i)]; }

    // gamma_k = number of parts equal to k
    std::map<int, int> multiplicities() const {
        std::map<int, int> m;
        for (int p : parts_) ++m[p];
        return m;
    }

    // cellwise containment (Young-diagram inclusion), used for skew shapes
    bool contains(const Partition& inner) const {
        if (inner.length() > length()) return false;
        for (int i = 0; i < inner.length(); ++i)
            if (inner[i] > parts_[static_cast<size_t>(i)]) return false;
        return true;
    }

    bool is_sub_multiset_of(const Partition& outer) const {
        auto mo = outer.multiplicities();
        for (auto [k, g] : multiplicities())
            if (mo[k] < g) return false;
        return true;
    }

    std::string to_string() const {
        std::ostringstream os;
        for (size_t i = 0; i < parts_.size(); ++i) {
            if (i) os << ',';
            os << parts_[i];
        }
        return os.str();
    }

    static Partition parse(const std::string& s) {
        std::vector<int> parts;
        std::istringstream is(s);
        std::string tok;
        while (std::getline(is, tok, ','))
            if (!tok.empty()) parts.push_back(std::stoi(tok));
        return Partition(std::move(parts));
    }

    friend auto operator<=>(const Partition& a, const Partition& b) {
        return a.parts_ <=> b.parts_;
    }
    friend bool operator==(const Partition& a, const Partition& b) = default;

  private:
    std::vector<int> parts_;
    int weight_ = 0;
};

inline constexpr int kDefaultMaxPartitionWeight = 40;

// All partitions of d in reverse-lexicographic order, (d) first, (1^d) last.
inline std::vector<Partition> generate_partitions(int d,
                                                  int max_weight = kDefaultMaxPartitionWeight) {
    if (d < 0) throw std::domain_error("generate_partitions: negative weight");
    if (d > max_weight)
        throw size_limit_error("generate_partitions: d = " + std::to_string(d) +
                               " exceeds bound " + std::to_string(max_weight));
    std::vector<Partition> out;
    std::vector<int> cur;
    auto rec = [&](auto&& self, int remaining, int max_part) -> void {
        if (remaining == 0) {
            out.emplace_back(Partition(cur));
            return;
        }
        for (int p = std::min(remaining, max_part); p >= 1; --p) {
            cur.push_back(p);
            self(self, remaining - p, p);
            cur.pop_back();
        }
    };
    rec(rec, d, d == 0 ? 1 : d);
    return out;
}

// z_lambda = prod_k k^{gamma_k} gamma_k!, the centralizer order of a
// permutation of cycle type lambda.
inline Int centralizer_order(const Partition& lambda) {
    Int z = 1;
    for (auto [k, g] : lambda.multiplicities()) z *= int_pow(k, static_cast<unsigned>(g)) * factorial(g);
    return z;
}

// Number of permutations in S_d with cycle type lambda: d!/z_lambda.
inline Int class_size(const Partition& lambda) {
    if (lambda.empty()) throw std::domain_error("class_size: empty partition");
    return exact_div(factorial(lambda.weight()), centralizer_order(lambda));
}

// #Aut(alpha) = prod_k gamma_k!, permutations of equal parts.
inline Int automorphism_count(const Partition& alpha) {
    Int a = 1;
    for (auto [k, g] : alpha.multiplicities()) a *= factorial(g);
    return a;
}

// Ways to pick which labelled copies of each part of alpha form beta:
// prod_k C(gamma_k(alpha), gamma_k(beta)).
inline Int labelled_split_count(const Partition& alpha, const Partition& beta) {
    if (!beta.is_sub_multiset_of(alpha))
        throw std::domain_error("labelled_split_count: beta is not a sub-multiset of alpha");
    auto ma = alpha.multiplicities();
    Int c = 1;
    for (auto [k, g] : beta.multiplicities()) c *= binomial(ma[k], g);
    return c;
}

// Multiset difference alpha \ beta; beta must be a sub-multiset.
inline Partition multiset_difference(const Partition& alpha, const Partition& beta) {
    if (!beta.is_sub_multiset_of(alpha))
        throw std::domain_error("multiset_difference: beta is not a sub-multiset of alpha");
    auto mb = beta.multiplicities();
    std::vector<int> parts;
    for (int p : alpha.parts()) {
        auto it = mb.find(p);
        if (it != mb.end() && it->second > 0)
            --it->second;
        else
            parts.push_back(p);
    }
    return Partition(std::move(parts));
}

// All sub-multisets of alpha of total weight k, each exactly once.
inline std::vector<Partition> sub_partitions_of_weight(const Partition& alpha, int k) {
    auto alpha_mult = alpha.multiplicities();
    std::vector<std::pair<int, int>> mult(alpha_mult.begin(), alpha_mult.end());
    std::vector<Partition> out;
    std::vector<int> cur;
    auto rec = [&](auto&& self, size_t idx, int remaining) -> void {
        if (remaining == 0) {
            // remaining classes contribute nothing
            out.emplace_back(Partition(cur));
            return;
        }
        if (idx == mult.size()) return;
        auto [part, avail] = mult[idx];
        int take_max = std::min(avail, remaining / part);
        for (int t = 0; t <= take_max; ++t) {
            for (int i = 0; i < t; ++i) cur.push_back(part);
            self(self, idx + 1, remaining - t * part);
            for (int i = 0; i < t; ++i) cur.pop_back();
        }
    };
    rec(rec, 0, k);
    return out;
}

}  // namespace hurwitz
