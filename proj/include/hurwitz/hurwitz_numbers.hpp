#pragma once

#include <algorithm>
#include <map>
#include <mutex>
#include <vector>

#include "hurwitz/class_algebra.hpp"
#include "hurwitz/partition.hpp"
#include "hurwitz/permutation.hpp"

namespace hurwitz {

// Degree-d covering of P^1 with one ramification profile per branch point.
struct CoveringProblem {
    int d = 0;
    std::vector<Partition> profiles;

    CoveringProblem(int degree, std::vector<Partition> profs)
        : d(degree), profiles(std::move(profs)) {
        if (d < 1) throw std::domain_error("CoveringProblem: degree must be >= 1");
        for (const Partition& p : profiles)
            if (p.weight() != d) throw std::domain_error("CoveringProblem: profile weight != d");
    }

    // Riemann-Hurwitz: 2 - 2g = 2d - sum_i (d - l(eta^i)).
    // Half-integral when the total ramification is odd (no covering exists).
    Rat genus() const {
        int ram = 0;
        for (const Partition& p : profiles) ram += d - p.length();
        return Rat(ram, 2) - d + 1;
    }

    bool genus_is_integer() const {
        Rat g = genus();
        return denominator(g) == 1;
    }
};

namespace detail {

// Trivial profiles (1^d) impose no constraint; drop them and sort for
// canonical memo keys.
inline std::vector<Partition> stripped_profiles(int d, const std::vector<Partition>& profiles) {
    std::vector<Partition> out;
    for (const Partition& p : profiles)
        if (p.length() != d) out.push_back(p);
    std::sort(out.begin(), out.end());
    return out;
}

inline constexpr int kConvolutionMaxDegree = 9;

// #{(s_1,...,s_r) : type(s_i) = eta^i, s_1...s_r = 1} = d! * H_disc.
// Class-sum convolution up to degree 9, Frobenius character sum beyond.
inline Int disconnected_tuple_count(int d, const std::vector<Partition>& profiles) {
    if (d == 0) return 1;
    std::vector<Partition> ps = stripped_profiles(d, profiles);
    if (ps.empty()) return 1;  // empty product: only the all-identity tuple
    if (d <= kConvolutionMaxDegree) {
        ClassAlgebraElement prod = class_sum(ps[0]);
        for (size_t i = 1; i < ps.size(); ++i) prod = multiply(prod, class_sum(ps[i]));
        Rat c = identity_coefficient(prod);
        if (denominator(c) != 1) throw std::logic_error("tuple count must be integral");
        return numerator(c);
    }
    Rat h = frobenius_product_coefficient(ps) * Rat(factorial(d));
    if (denominator(h) != 1) throw std::logic_error("tuple count must be integral");
    return numerator(h);
}

// Transitive tuple count d! * H_conn, by inclusion-exclusion on the orbit of
// sheet 1: every tuple splits as a transitive tuple on the k sheets of that
// orbit (chosen among d-1 others) times an unrestricted tuple on the rest,
// the profiles splitting into sub-multisets of weights k and d-k.
inline Int connected_tuple_count(int d, const std::vector<Partition>& profiles);

inline Int connected_tuple_count_impl(int d, const std::vector<Partition>& ps) {
    if (d == 1) return 1;
    Int total = disconnected_tuple_count(d, ps);
    size_t r = ps.size();
    for (int k = 1; k < d; ++k) {
        std::vector<std::vector<Partition>> choices(r);
        bool possible = true;
        for (size_t i = 0; i < r && possible; ++i) {
            choices[i] = sub_partitions_of_weight(ps[i], k);
            possible = !choices[i].empty();
        }
        if (!possible) continue;
        Int binom = binomial(d - 1, k - 1);
        std::vector<Partition> orbit_profiles(r), rest_profiles(r);
        auto rec = [&](auto&& self, size_t i) -> void {
            if (i == r) {
                Int conn = connected_tuple_count(k, orbit_profiles);
                if (conn == 0) return;
                total -= binom * conn * disconnected_tuple_count(d - k, rest_profiles);
                return;
            }
            for (const Partition& mu : choices[i]) {
                orbit_profiles[i] = mu;
                rest_profiles[i] = multiset_difference(ps[i], mu);
                self(self, i + 1);
            }
        };
        rec(rec, 0);
    }
    return total;
}

inline Int connected_tuple_count(int d, const std::vector<Partition>& profiles) {
    static std::map<std::pair<int, std::vector<Partition>>, Int> cache;
    static std::mutex cache_mutex;
    std::vector<Partition> key_profiles = stripped_profiles(d, profiles);
    std::pair<int, std::vector<Partition>> key{d, std::move(key_profiles)};
    {
        std::lock_guard<std::mutex> lock(cache_mutex);
        auto it = cache.find(key);
        if (it != cache.end()) return it->second;
    }
    Int value = connected_tuple_count_impl(d, key.second);
    std::lock_guard<std::mutex> lock(cache_mutex);
    return cache.emplace(std::move(key), std::move(value)).first->second;
}

}  // namespace detail

// Automorphism-weighted count of possibly disconnected coverings:
// (1/d!)[C_{(1^d)}] prod C_{eta^i}.
inline Rat disconnected_hurwitz(const CoveringProblem& p) {
    return Rat(detail::disconnected_tuple_count(p.d, p.profiles), factorial(p.d));
}

// Same count restricted to transitive monodromy (connected covers).
inline Rat connected_hurwitz(const CoveringProblem& p) {
    return Rat(detail::connected_tuple_count(p.d, p.profiles), factorial(p.d));
}

inline constexpr int kMonodromyOracleMaxDegree = 5;

// Exhaustive enumeration of monodromy tuples; the independent ground truth
// for both counts at small degree.
inline Rat monodromy_oracle(const CoveringProblem& p, bool connected_only) {
    if (p.d > kMonodromyOracleMaxDegree)
        throw size_limit_error("monodromy_oracle: d > " +
                               std::to_string(kMonodromyOracleMaxDegree));
    std::vector<Partition> ps = detail::stripped_profiles(p.d, p.profiles);
    if (ps.empty()) {
        bool ok = !connected_only || p.d == 1;
        return ok ? Rat(1, factorial(p.d)) : Rat(0);
    }
    Int budget = 1;
    for (size_t i = 0; i + 1 < ps.size(); ++i) {
        budget *= class_size(ps[i]);
        if (budget > 200'000'000) throw size_limit_error("monodromy_oracle: tuple space too large");
    }

    size_t r = ps.size();
    std::vector<Perm> tuple(r);
    Int count = 0;
    Perm acc = perm_identity(p.d);
    auto rec = [&](auto&& self, size_t i, const Perm& prefix) -> void {
        if (i + 1 == r) {
            // last permutation is forced: s_r = prefix^{-1}
            Perm last = perm_inverse(prefix);
            if (cycle_type(last) != ps[r - 1]) return;
            tuple[i] = std::move(last);
            if (connected_only && !generates_transitive_group(tuple, p.d)) return;
            ++count;
            return;
        }
        for_each_permutation_of_type(p.d, ps[i], [&](const Perm& s) {
            tuple[i] = s;
            self(self, i + 1, perm_compose(prefix, s));
        });
    };
    if (r == 1) {
        // single branch point: s_1 = 1, possible only for the trivial profile
        // (already stripped), so the count is 0
        return Rat(0);
    }
    rec(rec, 0, acc);
    return Rat(count, factorial(p.d));
}

// r = d + m + 2(g-1) simple branch points accompany a profile with m parts
// over infinity on a genus-g degree-d cover. Negative means no such cover.
inline int simple_branch_count(int d, int m, int g) {
    if (d < 1 || m < 1 || m > d || g < 0)
        throw std::domain_error("simple_branch_count: need d >= 1, 1 <= m <= d, g >= 0");
    return d + m + 2 * (g - 1);
}

// H^0_d = (2d-2)!/d! * d^(d-3); fractional for d <= 2.
inline Rat genus0_closed_form(int d) {
    if (d < 1) throw std::domain_error("genus0_closed_form: d >= 1 required");
    return Rat(factorial(2 * d - 2), factorial(d)) * rat_pow(Rat(d), d - 3);
}

}  // namespace hurwitz
