#pragma once

#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "hurwitz/finite_field.hpp"
#include "hurwitz/partition.hpp"

namespace hurwitz {

// Cyclic cover y^d = prod (x - a_i)^{m_i}. Only the multiplicities matter
// for ramification and genus; they are reduced mod d on construction and a
// zero residue is rejected (not a branch point).
struct CyclicCoverSpec {
    int d = 0;
    std::vector<int> multiplicities;
    int n = 0;  // sum of reduced multiplicities

    CyclicCoverSpec(int degree, std::vector<int> mults) : d(degree) {
        if (d < 2) throw std::domain_error("CyclicCoverSpec: degree must be >= 2");
        if (mults.empty()) throw std::domain_error("CyclicCoverSpec: need at least one branch point");
        for (int m : mults) {
            int r = ((m % d) + d) % d;
            if (r == 0)
                throw std::domain_error("CyclicCoverSpec: multiplicity = 0 mod d is not a branch point");
            multiplicities.push_back(r);
        }
        n = std::accumulate(multiplicities.begin(), multiplicities.end(), 0);
    }

    int branch_point_count() const { return static_cast<int>(multiplicities.size()); }

    bool is_irreducible() const {
        int g = d;
        for (int m : multiplicities) g = std::gcd(g, m);
        return std::gcd(g, n) == 1;
    }
};

struct RamificationData {
    std::vector<int> finite;          // e_i = d/gcd(d, m_i)
    std::optional<int> at_infinity;   // e_inf = d/gcd(d, n) when d does not divide n
};

inline RamificationData ramification_indices(const CyclicCoverSpec& c) {
    RamificationData r;
    for (int m : c.multiplicities) r.finite.push_back(c.d / std::gcd(c.d, m));
    if (c.n % c.d != 0) r.at_infinity = c.d / std::gcd(c.d, c.n);
    return r;
}

// Riemann-Hurwitz: 2g - 2 = -2d + sum_i (d - gcd(d, m_i)) + [d !| n](d - gcd(d, n)).
inline int genus(const CyclicCoverSpec& c) {
    if (!c.is_irreducible())
        throw std::domain_error("genus: cover is reducible (gcd(d, m_i, n) > 1)");
    int ram = 0;
    for (int m : c.multiplicities) ram += c.d - std::gcd(c.d, m);
    if (c.n % c.d != 0) ram += c.d - std::gcd(c.d, c.n);
    int twog_minus_2 = -2 * c.d + ram;
    if (twog_minus_2 % 2 != 0) throw std::logic_error("genus: Riemann-Hurwitz parity violated");
    int g = (twog_minus_2 + 2) / 2;
    if (g < 0) throw std::logic_error("genus: negative genus from Riemann-Hurwitz");
    return g;
}

// Rectangular partition with gcd(d,n) cycles of length d/gcd(d,n);
// (1^d) exactly when d | n.
inline Partition profile_at_infinity(const CyclicCoverSpec& c) {
    int parts = std::gcd(c.d, c.n);
    return Partition(std::vector<int>(static_cast<size_t>(parts), c.d / parts));
}

// Number of distinct orderings of the branch multiplicities: m!/prod gamma_k!.
inline Int monodromy_type_count(const Partition& mu) {
    if (mu.empty()) throw std::domain_error("monodromy_type_count: empty partition");
    return exact_div(factorial(mu.length()), automorphism_count(mu));
}

struct OrbifoldSignature {
    int p = 2, q = 2, r = 2;
    OrbifoldSignature(int pp, int qq, int rr) : p(pp), q(qq), r(rr) {
        if (p < 2 || q < 2 || r < 2)
            throw std::domain_error("OrbifoldSignature: orders must be >= 2");
    }
};

enum class TriangleGeometry { spherical, euclidean, hyperbolic };

struct TriangleClass {
    TriangleGeometry geometry;
    std::string group;  // "none" for non-spherical signatures
    long long order;    // 0 when no finite group
};

// Geometry by the sign of 1/p + 1/q + 1/r - 1; the spherical signatures give
// the finite subgroups of PGL_2: (2,2,2) the Klein group, (2,2,n) dihedral,
// (2,3,3) A4, (2,3,4) S4, (2,3,5) A5.
inline TriangleClass triangle_classify(const OrbifoldSignature& sig) {
    int v[3] = {sig.p, sig.q, sig.r};
    std::sort(v, v + 3);
    Rat sum = Rat(1, v[0]) + Rat(1, v[1]) + Rat(1, v[2]);
    if (sum == 1) return {TriangleGeometry::euclidean, "none", 0};
    if (sum < 1) return {TriangleGeometry::hyperbolic, "none", 0};
    if (v[0] == 2 && v[1] == 2) {
        if (v[2] == 2) return {TriangleGeometry::spherical, "Z2xZ2", 4};
        return {TriangleGeometry::spherical, "D" + std::to_string(v[2]), 2LL * v[2]};
    }
    if (v[0] == 2 && v[1] == 3 && v[2] == 3) return {TriangleGeometry::spherical, "A4", 12};
    if (v[0] == 2 && v[1] == 3 && v[2] == 4) return {TriangleGeometry::spherical, "S4", 24};
    if (v[0] == 2 && v[1] == 3 && v[2] == 5) return {TriangleGeometry::spherical, "A5", 60};
    throw std::logic_error("triangle_classify: unreachable spherical signature");
}

// (p)_{m+1} / (p^2 - p): configurations of m+1 distinct points of P^1(F_p)
// with one at infinity, modulo the affine group of A^1. Zero when m >= p.
inline Rat count_configurations_mod_affine(long long p, int m) {
    if (!is_prime(p)) throw std::domain_error("count_configurations_mod_affine: p must be prime");
    if (m < 1) throw std::domain_error("count_configurations_mod_affine: m must be >= 1");
    Int falling = 1;
    for (int j = 0; j <= m; ++j) falling *= Int(p - j);
    return Rat(falling, Int(p) * Int(p - 1));
}

// Affine F_q-points of y^m + x^n = 1 by exhaustive evaluation, with value
// histograms so the pair count is linear in q.
inline long long fermat_point_count(int n, int m, long long q) {
    if (n < 2 || m < 2) throw std::domain_error("fermat_point_count: n, m >= 2 required");
    if (q > 10'000) throw size_limit_error("fermat_point_count: q exceeds brute-force budget");
    FiniteField F(q);
    std::vector<long long> xn_count(static_cast<size_t>(q), 0), ym_count(static_cast<size_t>(q), 0);
    for (long long i = 0; i < q; ++i) {
        auto e = F.from_index(i);
        ++xn_count[static_cast<size_t>(F.to_index(F.pow(e, n)))];
        ++ym_count[static_cast<size_t>(F.to_index(F.pow(e, m)))];
    }
    long long total = 0;
    for (long long a = 0; a < q; ++a) {
        // pairs with x^n = a, y^m = 1 - a
        long long b = F.to_index(F.sub(F.one(), F.from_index(a)));
        total += xn_count[static_cast<size_t>(a)] * ym_count[static_cast<size_t>(b)];
    }
    return total;
}

}  // namespace hurwitz
