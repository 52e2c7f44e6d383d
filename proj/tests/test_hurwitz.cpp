#include <catch2/catch_amalgamated.hpp>

#include "hurwitz/hurwitz_numbers.hpp"

using namespace hurwitz;

namespace {

Partition simple_transposition(int d) {
    std::vector<int> parts{2};
    for (int i = 0; i < d - 2; ++i) parts.push_back(1);
    return Partition(parts);
}

}  // namespace

TEST_CASE("disconnected Hurwitz examples") {
    REQUIRE(disconnected_hurwitz(CoveringProblem(2, {Partition{2}, Partition{2}})) == Rat(1, 2));
    REQUIRE(disconnected_hurwitz(CoveringProblem(3, std::vector<Partition>(4, Partition{2, 1}))) ==
            Rat(9, 2));
    REQUIRE(disconnected_hurwitz(CoveringProblem(1, std::vector<Partition>(3, Partition{1}))) == 1);
}

TEST_CASE("connected Hurwitz examples") {
    REQUIRE(connected_hurwitz(CoveringProblem(3, std::vector<Partition>(4, Partition{2, 1}))) == 4);
    REQUIRE(connected_hurwitz(CoveringProblem(2, {Partition{2}, Partition{2}})) == Rat(1, 2));
    REQUIRE(connected_hurwitz(CoveringProblem(4, std::vector<Partition>(6, Partition{2, 1, 1}))) ==
            120);
}

TEST_CASE("monodromy oracle examples") {
    REQUIRE(monodromy_oracle(CoveringProblem(2, {Partition{2}, Partition{2}}), true) == Rat(1, 2));
    REQUIRE(monodromy_oracle(CoveringProblem(3, std::vector<Partition>(4, Partition{2, 1})), false) ==
            Rat(9, 2));
    // exhaustive enumeration of 3-cycle triples with identity product: 2 of
    // them, both transitive
    REQUIRE(monodromy_oracle(CoveringProblem(3, std::vector<Partition>(3, Partition{3})), true) ==
            Rat(1, 3));
    REQUIRE_THROWS_AS(
        monodromy_oracle(CoveringProblem(6, {Partition{2, 1, 1, 1, 1}}), false),
        size_limit_error);
}

TEST_CASE("dual-path identity on every profile list, d <= 4, r <= 3") {
    for (int d = 1; d <= 4; ++d) {
        auto parts = generate_partitions(d);
        std::vector<std::vector<Partition>> lists;
        for (const auto& a : parts) {
            lists.push_back({a});
            for (const auto& b : parts) {
                lists.push_back({a, b});
                for (const auto& c : parts) lists.push_back({a, b, c});
            }
        }
        for (const auto& profiles : lists) {
            CoveringProblem p(d, profiles);
            Rat disc = disconnected_hurwitz(p);
            Rat conn = connected_hurwitz(p);
            REQUIRE(disc == monodromy_oracle(p, false));
            REQUIRE(conn == monodromy_oracle(p, true));
            REQUIRE(disc == frobenius_product_coefficient(profiles));
            REQUIRE(disc >= conn);
        }
    }
}

TEST_CASE("profile order does not matter") {
    std::vector<Partition> profs{Partition{3, 1}, Partition{2, 2}, Partition{2, 1, 1}};
    Rat disc = disconnected_hurwitz(CoveringProblem(4, profs));
    Rat conn = connected_hurwitz(CoveringProblem(4, profs));
    std::sort(profs.begin(), profs.end());
    do {
        REQUIRE(disconnected_hurwitz(CoveringProblem(4, profs)) == disc);
        REQUIRE(connected_hurwitz(CoveringProblem(4, profs)) == conn);
    } while (std::next_permutation(profs.begin(), profs.end()));
}

TEST_CASE("trivial profiles are no-ops") {
    std::vector<Partition> base(4, Partition{2, 1});
    std::vector<Partition> padded = base;
    padded.push_back(Partition{1, 1, 1});
    padded.insert(padded.begin(), Partition{1, 1, 1});
    REQUIRE(connected_hurwitz(CoveringProblem(3, base)) ==
            connected_hurwitz(CoveringProblem(3, padded)));
    REQUIRE(disconnected_hurwitz(CoveringProblem(3, base)) ==
            disconnected_hurwitz(CoveringProblem(3, padded)));
}

TEST_CASE("covering problem genus") {
    CoveringProblem p(3, std::vector<Partition>(4, Partition{2, 1}));
    REQUIRE(p.genus() == 0);
    REQUIRE(p.genus_is_integer());
    // odd total ramification: half-integral genus, zero count
    CoveringProblem odd(2, {Partition{2}});
    REQUIRE(!odd.genus_is_integer());
    REQUIRE(disconnected_hurwitz(odd) == 0);
    REQUIRE(connected_hurwitz(odd) == 0);
    // unbranched degree-2 cover cannot be connected
    CoveringProblem unbranched(2, {});
    REQUIRE(disconnected_hurwitz(unbranched) == Rat(1, 2));
    REQUIRE(connected_hurwitz(unbranched) == 0);
    REQUIRE_THROWS_AS(CoveringProblem(3, {Partition{2}}), std::domain_error);
}

TEST_CASE("simple_branch_count") {
    REQUIRE(simple_branch_count(3, 1, 0) == 2);
    REQUIRE(simple_branch_count(2, 2, 0) == 2);
    REQUIRE(simple_branch_count(1, 1, 0) == 0);
    REQUIRE(simple_branch_count(2, 1, 0) == 1);
    REQUIRE_THROWS_AS(simple_branch_count(0, 1, 0), std::domain_error);
    REQUIRE_THROWS_AS(simple_branch_count(2, 3, 0), std::domain_error);
    REQUIRE_THROWS_AS(simple_branch_count(2, 1, -1), std::domain_error);
}

TEST_CASE("genus-0 closed form") {
    REQUIRE(genus0_closed_form(1) == 1);
    REQUIRE(genus0_closed_form(2) == Rat(1, 2));
    REQUIRE(genus0_closed_form(3) == 4);
    REQUIRE(genus0_closed_form(4) == 120);
    REQUIRE(genus0_closed_form(5) == 8400);
    REQUIRE_THROWS_AS(genus0_closed_form(0), std::domain_error);
}

TEST_CASE("the character path takes over beyond the convolution degree bound") {
    // two transpositions composing to the identity: one choice of pair, so
    // d! H = |C| = C(10,2) = 45
    std::vector<int> t{2, 1, 1, 1, 1, 1, 1, 1, 1};
    CoveringProblem p(10, {Partition(t), Partition(t)});
    REQUIRE(disconnected_hurwitz(p) == Rat(45, factorial(10)));
}

TEST_CASE("connected count with simple branch points matches the closed form, d <= 5") {
    for (int d = 2; d <= 5; ++d) {
        int r = simple_branch_count(d, d, 0);
        REQUIRE(r == 2 * d - 2);
        std::vector<Partition> profs(static_cast<size_t>(r), simple_transposition(d));
        REQUIRE(connected_hurwitz(CoveringProblem(d, profs)) == genus0_closed_form(d));
    }
}

TEST_CASE("classical genus-0 single Hurwitz numbers") {
    // H^0_alpha = r! d^{m-3} prod(a_i^{a_i}/a_i!) / #Aut(alpha) with
    // r = d + m - 2 simple branch points next to the profile alpha
    for (int d = 1; d <= 5; ++d)
        for (const auto& alpha : generate_partitions(d)) {
            int m = alpha.length();
            int r = simple_branch_count(d, m, 0);
            std::vector<Partition> profs{alpha};
            profs.insert(profs.end(), static_cast<size_t>(r), simple_transposition(d));
            Rat formula = Rat(factorial(r)) * rat_pow(Rat(d), m - 3) / Rat(automorphism_count(alpha));
            for (int i = 0; i < m; ++i)
                formula *= Rat(int_pow(alpha[i], static_cast<unsigned>(alpha[i])), factorial(alpha[i]));
            REQUIRE(connected_hurwitz(CoveringProblem(d, profs)) == formula);
        }
}
