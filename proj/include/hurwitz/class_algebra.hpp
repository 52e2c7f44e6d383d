#pragma once

#include <map>
#include <mutex>
#include <utility>
#include <vector>

#include "hurwitz/characters.hpp"
#include "hurwitz/partition.hpp"
#include "hurwitz/permutation.hpp"

namespace hurwitz {

// Element of Z_d, the center of QS_d, in the class-sum basis. Keys are cycle
// types; zero coefficients are never stored.
struct ClassAlgebraElement {
    int d = 0;
    std::map<Partition, Rat> coeffs;

    Rat coefficient(const Partition& eta) const {
        auto it = coeffs.find(eta);
        return it == coeffs.end() ? Rat(0) : it->second;
    }

    void add(const Partition& eta, const Rat& c) {
        if (c == 0) return;
        auto [it, inserted] = coeffs.emplace(eta, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0) coeffs.erase(it);
        }
    }

    friend bool operator==(const ClassAlgebraElement& a, const ClassAlgebraElement& b) = default;
};

// C_eta, the sum of all permutations of cycle type eta, as a basis element.
inline ClassAlgebraElement class_sum(const Partition& eta) {
    if (eta.empty()) throw std::domain_error("class_sum: empty cycle type");
    ClassAlgebraElement e;
    e.d = eta.weight();
    e.coeffs.emplace(eta, Rat(1));
    return e;
}

inline ClassAlgebraElement algebra_identity(int d) {
    return class_sum(Partition(std::vector<int>(static_cast<size_t>(d), 1)));
}

namespace detail {

// Structure constants of C_{eta1} C_{eta2} by the representative method: fix
// one permutation of type eta1, multiply by every permutation of type eta2,
// histogram the resulting cycle types. coeff(rho) = |C_eta1| * count(rho) /
// |C_rho|, always a nonnegative integer. Memoized on the unordered pair.
inline const std::map<Partition, Int>& class_product_coefficients(const Partition& eta1,
                                                                  const Partition& eta2) {
    static std::map<std::pair<Partition, Partition>, std::map<Partition, Int>> cache;
    static std::mutex cache_mutex;

    std::pair<Partition, Partition> key =
        eta1 <= eta2 ? std::make_pair(eta1, eta2) : std::make_pair(eta2, eta1);
    {
        std::lock_guard<std::mutex> lock(cache_mutex);
        auto it = cache.find(key);
        if (it != cache.end()) return it->second;
    }

    int d = eta1.weight();
    Perm sigma = representative_of_type(key.first);
    std::map<Partition, Int> histogram;
    for_each_permutation_of_type(d, key.second, [&](const Perm& tau) {
        ++histogram[cycle_type(perm_compose(sigma, tau))];
    });
    std::map<Partition, Int> coeffs;
    Int c1 = class_size(key.first);
    for (auto& [rho, count] : histogram) coeffs.emplace(rho, exact_div(c1 * count, class_size(rho)));

    std::lock_guard<std::mutex> lock(cache_mutex);
    return cache.emplace(std::move(key), std::move(coeffs)).first->second;
}

}  // namespace detail

inline ClassAlgebraElement multiply(const ClassAlgebraElement& a, const ClassAlgebraElement& b) {
    if (a.d != b.d) throw std::domain_error("class algebra multiply: degree mismatch");
    ClassAlgebraElement out;
    out.d = a.d;
    for (const auto& [eta1, c1] : a.coeffs)
        for (const auto& [eta2, c2] : b.coeffs)
            for (const auto& [rho, k] : detail::class_product_coefficients(eta1, eta2))
                out.add(rho, c1 * c2 * Rat(k));
    return out;
}

// Coefficient of the identity class (1^d).
inline Rat identity_coefficient(const ClassAlgebraElement& a) {
    return a.coefficient(Partition(std::vector<int>(static_cast<size_t>(a.d), 1)));
}

// (1/d!)[C_{(1^d)}] prod_i C_{eta^i} evaluated through characters:
//   sum_{lambda |- d} (dim/d!)^2 prod_i |C_{eta^i}| chi^lambda(eta^i) / dim.
// Independent of the convolution route above.
inline Rat frobenius_product_coefficient(const std::vector<Partition>& profiles) {
    if (profiles.empty()) throw std::domain_error("frobenius_product_coefficient: no profiles");
    int d = profiles.front().weight();
    for (const Partition& p : profiles)
        if (p.weight() != d)
            throw std::domain_error("frobenius_product_coefficient: mixed degrees");
    Int dfact = factorial(d);
    Rat total = 0;
    for (const Partition& lambda : generate_partitions(d)) {
        Int dim = dimension(lambda);
        Rat term(dim * dim, dfact * dfact);
        for (const Partition& eta : profiles) {
            term *= Rat(class_size(eta) * character_value(lambda, eta), dim);
            if (term == 0) break;
        }
        total += term;
    }
    return total;
}

}  // namespace hurwitz
