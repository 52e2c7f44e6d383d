#pragma once

#include <deque>
#include <map>
#include <numeric>
#include <set>
#include <vector>

#include "hurwitz/cyclotomic.hpp"
#include "hurwitz/partition.hpp"

namespace hurwitz {

// One monomial matrix: the substitution x_j -> zeta^{exps[j]} * x_{perm[j]}.
// Composition follows substitution order, so (a*b) means "apply b, then a".
struct MonomialElement {
    std::vector<int> perm;
    std::vector<int> exps;  // exponents of zeta, mod s

    friend auto operator<=>(const MonomialElement&, const MonomialElement&) = default;
};

struct MonomialAction {
    int n = 0;  // number of variables
    int s = 1;  // order of the root of unity generating all scalar entries
    std::vector<MonomialElement> generators;
    int max_group_order = 100'000;
};

inline MonomialElement monomial_identity(int n) {
    MonomialElement e;
    e.perm.resize(static_cast<size_t>(n));
    std::iota(e.perm.begin(), e.perm.end(), 0);
    e.exps.assign(static_cast<size_t>(n), 0);
    return e;
}

inline MonomialElement monomial_compose(const MonomialElement& a, const MonomialElement& b,
                                        int s) {
    // (a*b): x_j -> zeta^{b.exps[j] + a.exps[b.perm[j]]} x_{a.perm[b.perm[j]]}
    size_t n = a.perm.size();
    MonomialElement c;
    c.perm.resize(n);
    c.exps.resize(n);
    for (size_t j = 0; j < n; ++j) {
        int mid = b.perm[j];
        c.perm[j] = a.perm[static_cast<size_t>(mid)];
        c.exps[j] = (b.exps[j] + a.exps[static_cast<size_t>(mid)]) % s;
    }
    return c;
}

// Breadth-first closure of the generators; deterministic discovery order.
inline std::vector<MonomialElement> generate_group(const MonomialAction& a) {
    std::vector<MonomialElement> elements;
    std::set<MonomialElement> seen;
    std::deque<MonomialElement> queue;
    MonomialElement id = monomial_identity(a.n);
    seen.insert(id);
    queue.push_back(id);
    elements.push_back(id);
    while (!queue.empty()) {
        MonomialElement cur = queue.front();
        queue.pop_front();
        for (const MonomialElement& g : a.generators) {
            MonomialElement next = monomial_compose(g, cur, a.s);
            if (seen.insert(next).second) {
                if (static_cast<int>(elements.size()) >= a.max_group_order)
                    throw size_limit_error("generate_group: closure exceeds bound");
                elements.push_back(next);
                queue.push_back(next);
            }
        }
    }
    return elements;
}

// Molien/Poincare series of the invariant ring, truncated at degree N:
// (1/|G|) sum_g 1/det(I - t g). For a monomial matrix the determinant
// factors over the cycles of the permutation as (1 - zeta^{E_c} t^{len_c}).
inline std::vector<Int> molien_series(const MonomialAction& a, int N) {
    if (N < 0 || N > 64) throw std::domain_error("molien_series: need 0 <= N <= 64");
    std::vector<MonomialElement> group = generate_group(a);
    size_t len = static_cast<size_t>(N) + 1;
    CycSeries total(len, Cyclotomic(a.s));
    for (const MonomialElement& g : group) {
        // det(I - t M_g) as a dense polynomial in t
        CycSeries det(len, Cyclotomic(a.s));
        det[0] = Cyclotomic(a.s, Rat(1));
        std::vector<char> done(static_cast<size_t>(a.n), 0);
        std::vector<std::pair<int, int>> cycles;  // (length, zeta exponent sum)
        for (int v = 0; v < a.n; ++v) {
            if (done[static_cast<size_t>(v)]) continue;
            int length = 0, esum = 0;
            for (int w = v; !done[static_cast<size_t>(w)]; w = g.perm[static_cast<size_t>(w)]) {
                done[static_cast<size_t>(w)] = 1;
                esum = (esum + g.exps[static_cast<size_t>(w)]) % a.s;
                ++length;
            }
            cycles.emplace_back(length, esum);
        }
        for (auto [length, esum] : cycles) {
            CycSeries factor(len, Cyclotomic(a.s));
            factor[0] = Cyclotomic(a.s, Rat(1));
            if (static_cast<size_t>(length) < len)
                factor[static_cast<size_t>(length)] =
                    Cyclotomic(a.s) - Cyclotomic::zeta_power(a.s, esum);
            det = series_mul(det, factor, a.s);
        }
        CycSeries inv = series_inverse(det, a.s);
        for (size_t k = 0; k < len; ++k) total[k] += inv[k];
    }
    // The group average is rational in Q(zeta_s); read it off the canonical
    // representatives by reducing mod Phi_s.
    CyclotomicField F(a.s);
    Rat order(static_cast<long long>(group.size()));
    std::vector<Int> dims;
    dims.reserve(len);
    for (size_t k = 0; k < len; ++k) {
        Rat v = rational_value_in_field(total[k] * (Rat(1) / order), F);
        if (denominator(v) != 1 || v < 0)
            throw std::logic_error("molien_series: coefficient not a nonnegative integer");
        dims.push_back(numerator(v));
    }
    return dims;
}

// Sparse polynomial in n variables with coefficients in Q[zeta_s]; s = 1
// means plain rational coefficients.
struct SparsePoly {
    int n = 0;
    int s = 1;
    std::map<std::vector<int>, Cyclotomic> terms;

    void add_term(std::vector<int> exps, const Cyclotomic& c) {
        if (c.is_zero()) return;
        auto it = terms.find(exps);
        if (it == terms.end()) {
            terms.emplace(std::move(exps), c);
        } else {
            it->second += c;
            if (it->second.is_zero()) terms.erase(it);
        }
    }

    SparsePoly lifted(int new_s) const {
        SparsePoly out;
        out.n = n;
        out.s = new_s;
        for (const auto& [e, c] : terms) out.terms.emplace(e, c.lift(new_s));
        return out;
    }

    friend bool operator==(const SparsePoly&, const SparsePoly&) = default;
};

// g acting on x^a: substitution multiplies by zeta^{<exps,a>} and pushes the
// exponent vector through the permutation.
inline SparsePoly apply_element(const MonomialElement& g, const SparsePoly& f, int s) {
    SparsePoly out;
    out.n = f.n;
    out.s = s;
    for (const auto& [a, c] : f.terms) {
        long long phase = 0;
        std::vector<int> b(a.size(), 0);
        for (size_t j = 0; j < a.size(); ++j) {
            phase += static_cast<long long>(g.exps[j]) * a[j];
            b[static_cast<size_t>(g.perm[j])] = a[j];
        }
        out.add_term(std::move(b), c * Cyclotomic::zeta_power(s, phase));
    }
    return out;
}

namespace detail {

// Coefficients canonicalized in Q(zeta_s): reduce mod Phi_s, drop terms that
// vanish there. Equality of these forms is equality of polynomials.
inline SparsePoly field_canonical(const SparsePoly& f, const CyclotomicField& F, int s) {
    SparsePoly out;
    out.n = f.n;
    out.s = s;
    for (const auto& [e, c] : f.terms) {
        CyclotomicField::Elem r = F.from_quotient_ring(c);
        if (F.is_zero(r)) continue;
        Cyclotomic canon(s);
        for (size_t i = 0; i < r.size(); ++i)
            canon += Cyclotomic::zeta_power(s, static_cast<long long>(i)) * r[i];
        out.terms.emplace(e, std::move(canon));
    }
    return out;
}

}  // namespace detail

// Invariance under every generator implies invariance under the group.
inline bool is_invariant(const SparsePoly& f, const MonomialAction& a) {
    if (f.n > a.n) throw std::domain_error("is_invariant: polynomial has too many variables");
    SparsePoly lifted = f;
    if (f.s != a.s) {
        if (a.s % f.s != 0)
            throw std::domain_error("is_invariant: incompatible cyclotomic orders");
        lifted = f.lifted(a.s);
    }
    if (lifted.n < a.n) {
        SparsePoly padded;
        padded.n = a.n;
        padded.s = lifted.s;
        for (const auto& [e, c] : lifted.terms) {
            std::vector<int> ee = e;
            ee.resize(static_cast<size_t>(a.n), 0);
            padded.terms.emplace(std::move(ee), c);
        }
        lifted = std::move(padded);
    }
    CyclotomicField F(a.s);
    lifted = detail::field_canonical(lifted, F, a.s);
    for (const MonomialElement& g : a.generators)
        if (!(detail::field_canonical(apply_element(g, lifted, a.s), F, a.s) == lifted))
            return false;
    return true;
}

// e_i(x_1..x_n): all squarefree monomials of degree i, coefficient 1.
inline SparsePoly elementary_symmetric(int i, int n) {
    if (i < 1 || i > n) throw std::domain_error("elementary_symmetric: need 1 <= i <= n");
    SparsePoly f;
    f.n = n;
    f.s = 1;
    std::vector<int> choose(static_cast<size_t>(i));
    auto rec = [&](auto&& self, int start, int depth) -> void {
        if (depth == i) {
            std::vector<int> exps(static_cast<size_t>(n), 0);
            for (int v : choose) exps[static_cast<size_t>(v)] = 1;
            f.terms.emplace(std::move(exps), Cyclotomic(1, Rat(1)));
            return;
        }
        for (int v = start; v < n; ++v) {
            choose[static_cast<size_t>(depth)] = v;
            self(self, v + 1, depth + 1);
        }
    };
    rec(rec, 0, 0);
    return f;
}

namespace detail {

inline std::vector<std::vector<int>> monomials_of_degree(int n, int j) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur(static_cast<size_t>(n), 0);
    auto rec = [&](auto&& self, int var, int left) -> void {
        if (var == n - 1) {
            cur[static_cast<size_t>(var)] = left;
            out.push_back(cur);
            return;
        }
        for (int e = left; e >= 0; --e) {
            cur[static_cast<size_t>(var)] = e;
            self(self, var + 1, left - e);
        }
    };
    if (n == 0) {
        if (j == 0) out.push_back({});
        return out;
    }
    rec(rec, 0, j);
    return out;
}

}  // namespace detail

// Independent oracle for the Molien coefficients: Reynolds-average every
// degree-j monomial over the group and compute the rank of the span. Vectors
// live over Q(zeta_s), where rank is meaningful; the Reynolds sums are formed
// in the quotient ring and reduced mod Phi_s afterwards.
inline int invariant_dimension_bruteforce(const MonomialAction& a, int j) {
    std::vector<std::vector<int>> monomials = detail::monomials_of_degree(a.n, j);
    if (monomials.size() > 10'000)
        throw size_limit_error("invariant_dimension_bruteforce: too many monomials");
    std::vector<MonomialElement> group = generate_group(a);
    CyclotomicField F(a.s);

    std::map<std::vector<int>, size_t> index;
    for (size_t i = 0; i < monomials.size(); ++i) index.emplace(monomials[i], i);

    // sparse row: monomial index -> field element
    using Row = std::map<size_t, CyclotomicField::Elem>;
    std::vector<Row> rows;
    std::set<std::vector<int>> covered;  // skip monomials in an already-averaged orbit
    for (const auto& mono : monomials) {
        if (covered.count(mono)) continue;
        std::map<size_t, Cyclotomic> acc;
        for (const MonomialElement& g : group) {
            long long phase = 0;
            std::vector<int> b(mono.size(), 0);
            for (size_t v = 0; v < mono.size(); ++v) {
                phase += static_cast<long long>(g.exps[v]) * mono[v];
                b[static_cast<size_t>(g.perm[v])] = mono[v];
            }
            covered.insert(b);
            auto it = acc.emplace(index.at(b), Cyclotomic(a.s)).first;
            it->second += Cyclotomic::zeta_power(a.s, phase);
        }
        Row row;
        for (auto& [i, c] : acc) {
            CyclotomicField::Elem e = F.from_quotient_ring(c);
            if (!F.is_zero(e)) row.emplace(i, std::move(e));
        }
        if (!row.empty()) rows.push_back(std::move(row));
    }

    // Gaussian elimination over Q(zeta_s) on sparse rows
    std::map<size_t, Row> pivots;  // leading index -> normalized row
    int rank = 0;
    for (Row row : rows) {
        while (!row.empty()) {
            size_t lead = row.begin()->first;
            auto p = pivots.find(lead);
            if (p == pivots.end()) break;
            CyclotomicField::Elem factor = row.begin()->second;
            for (const auto& [i, c] : p->second) {
                auto it = row.emplace(i, F.zero()).first;
                it->second = F.sub(it->second, F.mul(factor, c));
                if (F.is_zero(it->second)) row.erase(it);
            }
        }
        if (row.empty()) continue;
        CyclotomicField::Elem inv = F.inverse(row.begin()->second);
        for (auto& [i, c] : row) c = F.mul(c, inv);
        pivots.emplace(row.begin()->first, std::move(row));
        ++rank;
    }
    return rank;
}

// --- named actions ---------------------------------------------------------

// Z_s acting diagonally by diag(zeta, zeta^2, ..., zeta^n).
inline MonomialAction make_cyclic_action(int n, int s) {
    MonomialAction a;
    a.n = n;
    a.s = s;
    MonomialElement g = monomial_identity(n);
    for (int j = 0; j < n; ++j) g.exps[static_cast<size_t>(j)] = (j + 1) % s;
    a.generators.push_back(std::move(g));
    return a;
}

// The dihedral action on s variables: the rotation tau: x_j -> eps^j x_j and
// the reflection sigma: x_i -> x_{s-i} (indices mod s, x_s fixed). tau has
// order s, sigma order 2, sigma tau sigma = tau^{-1}.
inline MonomialAction make_dihedral_action(int s) {
    MonomialAction a;
    a.n = s;
    a.s = s;
    MonomialElement tau = monomial_identity(s);
    for (int j = 0; j < s; ++j) tau.exps[static_cast<size_t>(j)] = (j + 1) % s;  // x_{j+1} -> eps^{j+1} x_{j+1}
    MonomialElement sigma = monomial_identity(s);
    for (int j = 0; j < s; ++j) {
        int var = j + 1;                    // 1-based variable index
        int image = (s - var) % s == 0 ? s : s - var;  // x_i -> x_{s-i}, x_s -> x_s
        sigma.perm[static_cast<size_t>(j)] = image - 1;
    }
    a.generators.push_back(std::move(tau));
    a.generators.push_back(std::move(sigma));
    return a;
}

// S_n by permutation matrices, generated by (1 2) and the n-cycle.
inline MonomialAction make_symmetric_action(int n) {
    MonomialAction a;
    a.n = n;
    a.s = 1;
    if (n >= 2) {
        MonomialElement t = monomial_identity(n);
        std::swap(t.perm[0], t.perm[1]);
        a.generators.push_back(std::move(t));
        MonomialElement c = monomial_identity(n);
        for (int j = 0; j < n; ++j) c.perm[static_cast<size_t>(j)] = (j + 1) % n;
        a.generators.push_back(std::move(c));
    }
    return a;
}

}  // namespace hurwitz
