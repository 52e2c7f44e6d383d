// Acceptance suite: one pass/fail line per criterion, nonzero exit when any
// criterion fails. Every tolerance is exact equality of rationals/integers;
// runtime budgets are enforced with wall clocks.

#include <chrono>
#include <iostream>
#include <random>
#include <vector>

#include "hurwitz/characters.hpp"
#include "hurwitz/class_algebra.hpp"
#include "hurwitz/cyclic_covers.hpp"
#include "hurwitz/floor_diagrams.hpp"
#include "hurwitz/hurwitz_numbers.hpp"
#include "hurwitz/invariants.hpp"
#include "oracles.hpp"

using namespace hurwitz;
using Clock = std::chrono::steady_clock;

namespace {

int failures = 0;

void report(int number, const std::string& name, bool ok, const std::string& detail = "") {
    std::cout << (ok ? "[PASS] " : "[FAIL] ") << "criterion " << number << ": " << name;
    if (!detail.empty()) std::cout << " (" << detail << ")";
    std::cout << std::endl;
    if (!ok) ++failures;
}

Partition simple_transposition(int d) {
    std::vector<int> parts{2};
    for (int i = 0; i < d - 2; ++i) parts.push_back(1);
    return Partition(parts);
}

double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

// 1. genus-0 closed form, d = 1..6, via the connected count with 2d-2
//    simple branch points; < 60 s at d = 6, where the Frobenius character
//    sum must agree with the convolution bracket
void criterion1() {
    const std::vector<Rat> expected{Rat(1), Rat(1, 2), Rat(4), Rat(120), Rat(8400), Rat(1088640)};
    bool ok = true;
    std::string detail;
    auto t0 = Clock::now();
    for (int d = 1; d <= 6; ++d) {
        std::vector<Partition> profiles;
        if (d >= 2)
            profiles.assign(static_cast<size_t>(2 * d - 2), simple_transposition(d));
        Rat h = connected_hurwitz(CoveringProblem(d, profiles));
        if (h != expected[static_cast<size_t>(d - 1)] || h != genus0_closed_form(d)) {
            ok = false;
            detail = "mismatch at d=" + std::to_string(d);
        }
        if (d >= 2 &&
            frobenius_product_coefficient(profiles) !=
                disconnected_hurwitz(CoveringProblem(d, profiles))) {
            ok = false;
            detail = "Frobenius path disagrees at d=" + std::to_string(d);
        }
    }
    double elapsed = seconds_since(t0);
    if (elapsed >= 60.0) {
        ok = false;
        detail = "too slow";
    }
    report(1, "genus-0 closed form 1, 1/2, 4, 120, 8400, 1088640",
           ok, detail.empty() ? std::to_string(elapsed) + "s" : detail);
}

// 2. dual-path identity on 200 random profile lists (r <= 5) for every
//    d <= 5; < 5 min
void criterion2() {
    std::mt19937 rng(20250810);
    bool ok = true;
    std::string detail;
    auto t0 = Clock::now();
    for (int d = 1; d <= 5; ++d) {
        auto parts = generate_partitions(d);
        for (int trial = 0; trial < 200 && ok; ++trial) {
            int r = std::uniform_int_distribution<int>(1, 5)(rng);
            std::vector<Partition> profiles;
            for (int i = 0; i < r; ++i)
                profiles.push_back(parts[static_cast<size_t>(
                    std::uniform_int_distribution<size_t>(0, parts.size() - 1)(rng))]);
            CoveringProblem p(d, profiles);
            Rat bracket = disconnected_hurwitz(p);
            Rat frob = frobenius_product_coefficient(profiles);
            Rat oracle = monodromy_oracle(p, false);
            Rat conn = connected_hurwitz(p);
            Rat conn_oracle = monodromy_oracle(p, true);
            if (bracket != frob || bracket != oracle || conn != conn_oracle) {
                ok = false;
                detail = "mismatch at d=" + std::to_string(d) + " trial " + std::to_string(trial);
            }
        }
    }
    double elapsed = seconds_since(t0);
    if (elapsed >= 300.0) {
        ok = false;
        detail = "too slow";
    }
    report(2, "class-algebra bracket = Frobenius sum = monodromy oracle on 200 random lists per degree",
           ok, detail.empty() ? std::to_string(elapsed) + "s" : detail);
}

// 3. Murnaghan-Nakayama vs explicit representation traces (d <= 5),
//    sum dim^2 = d! (d <= 8), full orthogonality (d <= 7)
void criterion3() {
    bool ok = true;
    std::string detail;
    for (int d = 1; d <= 5 && ok; ++d)
        for (const auto& lambda : generate_partitions(d)) {
            auto rep = oracles::build_seminormal_rep(lambda);
            for (const auto& mu : generate_partitions(d)) {
                Rat tr = oracles::seminormal_trace(rep, representative_of_type(mu));
                if (denominator(tr) != 1 || Int(numerator(tr)) != character_value(lambda, mu)) {
                    ok = false;
                    detail = "MN mismatch";
                }
            }
        }
    for (int d = 1; d <= 8 && ok; ++d) {
        Int sum = 0;
        for (const auto& lam : generate_partitions(d)) sum += dimension(lam) * dimension(lam);
        if (sum != factorial(d)) {
            ok = false;
            detail = "dim^2 sum";
        }
    }
    for (int d = 1; d <= 7 && ok; ++d) {
        CharacterTable t = build_character_table(d);
        size_t n = t.irreps.size();
        std::vector<Int> sizes;
        for (const auto& mu : t.classes) sizes.push_back(class_size(mu));
        for (size_t i = 0; i < n && ok; ++i)
            for (size_t j = i; j < n && ok; ++j) {
                Int row = 0;
                for (size_t k = 0; k < n; ++k) row += sizes[k] * t.values[i][k] * t.values[j][k];
                if (row != (i == j ? factorial(d) : Int(0))) {
                    ok = false;
                    detail = "row orthogonality";
                }
            }
        for (size_t k = 0; k < n && ok; ++k)
            for (size_t l = k; l < n && ok; ++l) {
                Int col = 0;
                for (size_t i = 0; i < n; ++i) col += t.values[i][k] * t.values[i][l];
                if (col != (k == l ? centralizer_order(t.classes[k]) : Int(0))) {
                    ok = false;
                    detail = "column orthogonality";
                }
            }
    }
    report(3, "character suite: MN vs brute-force traces, dim^2 sums, orthogonality", ok, detail);
}

// 4. LR vs brute-force Schur expansion (d <= 5) and the classical value;
//    Kronecker S_3 symmetry on all triples with d <= 5
void criterion4() {
    bool ok = true;
    std::string detail;
    if (lr_coefficient(Partition{2, 1}, Partition{2, 1}, Partition{3, 2, 1}) != 2) {
        ok = false;
        detail = "classical LR value";
    }
    for (int dl = 0; dl <= 4 && ok; ++dl)
        for (int dm = 1; dm + dl <= 5 && ok; ++dm)
            for (const auto& lambda : generate_partitions(dl))
                for (const auto& mu : generate_partitions(dm)) {
                    int dh = dl + dm;
                    auto prod = oracles::poly_product(oracles::schur_polynomial(lambda, dh),
                                                      oracles::schur_polynomial(mu, dh));
                    auto expansion = oracles::schur_expand(std::move(prod), dh);
                    for (const auto& eta : generate_partitions(dh)) {
                        Int expect = 0;
                        auto it = expansion.find(eta);
                        if (it != expansion.end()) expect = it->second;
                        if (lr_coefficient(lambda, mu, eta) != expect) {
                            ok = false;
                            detail = "LR vs Schur expansion";
                        }
                    }
                }
    for (int d = 1; d <= 5 && ok; ++d) {
        auto parts = generate_partitions(d);
        for (const auto& a : parts)
            for (const auto& b : parts)
                for (const auto& c : parts) {
                    Int g = kronecker_coefficient(a, b, c);
                    if (g != kronecker_coefficient(a, c, b) || g != kronecker_coefficient(b, a, c) ||
                        g != kronecker_coefficient(c, b, a) || g != kronecker_coefficient(b, c, a) ||
                        g != kronecker_coefficient(c, a, b)) {
                        ok = false;
                        detail = "Kronecker symmetry";
                    }
                }
    }
    report(4, "LR vs Schur-polynomial expansion; Kronecker S3-symmetry", ok, detail);
}

// 5. Molien = Reynolds dimension for cyclic, dihedral and symmetric actions
//    to degree 8; S_n series = prod 1/(1-t^k) to degree 20
void criterion5() {
    bool ok = true;
    std::string detail;
    std::vector<MonomialAction> actions;
    for (int s = 2; s <= 6; ++s) actions.push_back(make_cyclic_action(2, s));
    for (int s = 3; s <= 6; ++s) actions.push_back(make_dihedral_action(s));
    for (int n = 2; n <= 4; ++n) actions.push_back(make_symmetric_action(n));
    for (const auto& a : actions) {
        auto dims = molien_series(a, 8);
        for (int j = 0; j <= 8; ++j)
            if (dims[static_cast<size_t>(j)] != invariant_dimension_bruteforce(a, j)) {
                ok = false;
                detail = "molien vs Reynolds";
            }
    }
    for (int n = 2; n <= 4 && ok; ++n) {
        auto dims = molien_series(make_symmetric_action(n), 20);
        std::vector<Int> series(21, 0);
        series[0] = 1;
        for (int k = 1; k <= n; ++k)
            for (int j = k; j <= 20; ++j)
                series[static_cast<size_t>(j)] += series[static_cast<size_t>(j - k)];
        if (dims != series) {
            ok = false;
            detail = "S_n product form";
        }
    }
    report(5, "Molien series vs Reynolds-rank oracle; Theorem-1 product form", ok, detail);
}

// 6. Riemann-Hurwitz genus vs the closed form (n-1)(s-2)/2 on the fully
//    ramified family, d <= 6, s <= 8; hyperelliptic sanity
void criterion6() {
    bool ok = true;
    std::string detail;
    if (genus(CyclicCoverSpec(2, std::vector<int>(6, 1))) != 2) {
        ok = false;
        detail = "hyperelliptic g != 2";
    }
    for (int d = 2; d <= 6 && ok; ++d) {
        std::vector<int> coprime;
        for (int m = 1; m < d; ++m)
            if (std::gcd(m, d) == 1) coprime.push_back(m);
        for (int s = 2; s <= 8 && ok; ++s) {
            std::vector<int> mults(static_cast<size_t>(s));
            auto rec = [&](auto&& self, int idx, int start) -> void {
                if (!ok) return;
                if (idx == s) {
                    int n = 0;
                    for (int m : mults) n += m;
                    if (n % d != 0) return;
                    if (genus(CyclicCoverSpec(d, mults)) != (d - 1) * (s - 2) / 2) {
                        ok = false;
                        detail = "family mismatch d=" + std::to_string(d) + " s=" + std::to_string(s);
                    }
                    return;
                }
                for (int i = start; i < static_cast<int>(coprime.size()); ++i) {
                    mults[static_cast<size_t>(idx)] = coprime[static_cast<size_t>(i)];
                    self(self, idx + 1, i);
                }
            };
            rec(rec, 0, 0);
        }
    }
    report(6, "cyclic cover genus: Riemann-Hurwitz vs (n-1)(s-2)/2 family", ok, detail);
}

// 7. floor diagrams: gw(d,0) = Kontsevich recursion for d <= 5, < 2 min at
//    d = 5; genus range enforcement
void criterion7() {
    bool ok = true;
    std::string detail;
    const std::vector<Int> expected{1, 1, 12, 620, 87304};
    auto t0 = Clock::now();
    for (int d = 1; d <= 5; ++d) {
        Int gw = gw_invariant(d, 0);
        if (gw != expected[static_cast<size_t>(d - 1)] || gw != kontsevich_oracle(d)) {
            ok = false;
            detail = "value mismatch at d=" + std::to_string(d);
        }
    }
    double elapsed = seconds_since(t0);
    if (elapsed >= 120.0) {
        ok = false;
        detail = "too slow";
    }
    bool threw = false;
    try {
        gw_invariant(4, 4);  // above (d-1)(d-2)/2 = 3
    } catch (const std::domain_error&) {
        threw = true;
    }
    if (!threw) {
        ok = false;
        detail = "genus bound not enforced";
    }
    report(7, "floor diagrams: N_{d,0} = 1, 1, 12, 620, 87304 and genus bound",
           ok, detail.empty() ? std::to_string(elapsed) + "s" : detail);
}

// 8. finite-field counts against exhaustive oracles
void criterion8() {
    bool ok = true;
    std::string detail;
    for (long long p : {3, 5, 7, 11})
        for (int m = 1; m <= 3 && m <= p - 1; ++m)
            if (count_configurations_mod_affine(p, m) != Rat(oracles::affine_orbit_count(p, m + 1))) {
                ok = false;
                detail = "affine configurations p=" + std::to_string(p);
            }
    for (long long q : {2, 3, 4, 5, 7, 8, 9, 11, 13, 16, 17, 19, 23, 25, 27, 29, 31, 32, 37, 41, 43, 47, 49})
        for (int n = 2; n <= 3 && ok; ++n)
            for (int m = 2; m <= 3 && ok; ++m) {
                FiniteField F(q, false);  // independently chosen modulus
                long long naive = 0;
                for (long long i = 0; i < q; ++i)
                    for (long long j = 0; j < q; ++j)
                        if (F.add(F.pow(F.from_index(j), m), F.pow(F.from_index(i), n)) == F.one())
                            ++naive;
                if (fermat_point_count(n, m, q) != naive) {
                    ok = false;
                    detail = "fermat count q=" + std::to_string(q);
                }
            }
    report(8, "finite-field counts vs exhaustive orbit/point scans", ok, detail);
}

// 9. out-of-scope items: general ELSV/Hodge integrals, Witten intersections
//    and decorated counts N_{d,g}(lambda,rho) are intentionally absent; the
//    genus-0 specialization is the only ELSV-derived quantity computed.
void criterion9() {
    bool ok = genus0_closed_form(3) == 4;  // the in-scope specialization works
    report(9, "Hodge integrals, Witten intersections and decorated counts out of scope "
              "(documented in README; only the genus-0 ELSV specialization ships)", ok);
}

}  // namespace

int main() {
    auto t0 = Clock::now();
    criterion1();
    criterion2();
    criterion3();
    criterion4();
    criterion5();
    criterion6();
    criterion7();
    criterion8();
    criterion9();
    std::cout << (failures == 0 ? "ALL CRITERIA PASSED" : std::to_string(failures) + " CRITERIA FAILED")
              << " in " << seconds_since(t0) << "s" << std::endl;
    return failures == 0 ? 0 : 1;
}
