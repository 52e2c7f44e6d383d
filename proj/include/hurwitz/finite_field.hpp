#pragma once

#include <stdexcept>
#include <vector>

#include "hurwitz/numeric.hpp"

namespace hurwitz {

inline bool is_prime(long long n) {
    if (n < 2) return false;
    for (long long i = 2; i * i <= n; ++i)
        if (n % i == 0) return false;
    return true;
}

// F_q for q = p^k, built as F_p[t]/(f) with f the lexicographically smallest
// monic irreducible of degree k (coefficients compared from t^0 upward).
// Elements are indexed 0..q-1 via base-p digit vectors, so tables over the
// whole field are plain arrays.
class FiniteField {
  public:
    explicit FiniteField(long long q, bool smallest_irreducible = true) : q_(q) {
        if (q < 2) throw std::domain_error("FiniteField: q must be >= 2");
        long long m = q;
        for (long long f = 2; f * f <= m; ++f)
            if (m % f == 0) {
                p_ = f;
                break;
            }
        if (p_ == 0) p_ = m;  // q itself prime
        k_ = 0;
        while (m > 1) {
            if (m % p_ != 0) throw std::domain_error("FiniteField: q is not a prime power");
            m /= p_;
            ++k_;
        }
        if (k_ == 1) {
            modulus_ = {0, 1};  // t - 0; unused for prime fields
        } else {
            modulus_ = find_irreducible(smallest_irreducible);
        }
    }

    long long order() const { return q_; }
    long long characteristic() const { return p_; }
    int extension_degree() const { return k_; }
    const std::vector<long long>& modulus() const { return modulus_; }

    using Elem = std::vector<long long>;  // coefficients, length k

    Elem from_index(long long i) const {
        Elem e(static_cast<size_t>(k_));
        for (int j = 0; j < k_; ++j) {
            e[static_cast<size_t>(j)] = i % p_;
            i /= p_;
        }
        return e;
    }

    long long to_index(const Elem& e) const {
        long long i = 0;
        for (int j = k_ - 1; j >= 0; --j) i = i * p_ + e[static_cast<size_t>(j)];
        return i;
    }

    Elem zero() const { return Elem(static_cast<size_t>(k_), 0); }
    Elem one() const {
        Elem e = zero();
        e[0] = 1;
        return e;
    }

    Elem add(const Elem& a, const Elem& b) const {
        Elem c(static_cast<size_t>(k_));
        for (int j = 0; j < k_; ++j)
            c[static_cast<size_t>(j)] = (a[static_cast<size_t>(j)] + b[static_cast<size_t>(j)]) % p_;
        return c;
    }

    Elem sub(const Elem& a, const Elem& b) const {
        Elem c(static_cast<size_t>(k_));
        for (int j = 0; j < k_; ++j)
            c[static_cast<size_t>(j)] =
                (a[static_cast<size_t>(j)] - b[static_cast<size_t>(j)] + p_) % p_;
        return c;
    }

    Elem mul(const Elem& a, const Elem& b) const {
        std::vector<long long> prod(static_cast<size_t>(2 * k_ - 1), 0);
        for (int i = 0; i < k_; ++i) {
            if (a[static_cast<size_t>(i)] == 0) continue;
            for (int j = 0; j < k_; ++j)
                prod[static_cast<size_t>(i + j)] =
                    (prod[static_cast<size_t>(i + j)] +
                     a[static_cast<size_t>(i)] * b[static_cast<size_t>(j)]) % p_;
        }
        // reduce mod the monic modulus
        for (int deg = 2 * k_ - 2; deg >= k_; --deg) {
            long long c = prod[static_cast<size_t>(deg)];
            if (c == 0) continue;
            prod[static_cast<size_t>(deg)] = 0;
            for (int j = 0; j < k_; ++j)
                prod[static_cast<size_t>(deg - k_ + j)] =
                    (prod[static_cast<size_t>(deg - k_ + j)] +
                     (p_ - modulus_[static_cast<size_t>(j)]) % p_ * c) % p_;
        }
        prod.resize(static_cast<size_t>(k_));
        return prod;
    }

    Elem pow(Elem base, long long e) const {
        Elem r = one();
        while (e > 0) {
            if (e & 1) r = mul(r, base);
            base = mul(base, base);
            e >>= 1;
        }
        return r;
    }

  private:
    // Monic degree-k polynomials over F_p as coefficient vectors c_0..c_k,
    // c_k = 1; irreducibility by trial division by every monic polynomial of
    // degree 1..k/2. Iteration order on (c_0, c_1, ...) is lexicographic.
    std::vector<long long> find_irreducible(bool smallest) const {
        long long total = 1;
        for (int i = 0; i < k_; ++i) total *= p_;
        std::vector<long long> best;
        for (long long code = 0; code < total; ++code) {
            std::vector<long long> f(static_cast<size_t>(k_ + 1));
            long long c = code;
            // lexicographic from the top coefficient down so that the first
            // hit is lex-smallest in (c_0,...,c_{k-1})
            for (int j = k_ - 1; j >= 0; --j) {
                f[static_cast<size_t>(j)] = c % p_;
                c /= p_;
            }
            f[static_cast<size_t>(k_)] = 1;
            if (poly_irreducible(f)) {
                best = f;
                if (smallest) return best;
            }
        }
        if (best.empty()) throw std::logic_error("no irreducible polynomial found");
        return best;  // lex-largest when smallest == false (used by tests)
    }

    bool poly_irreducible(const std::vector<long long>& f) const {
        int deg = static_cast<int>(f.size()) - 1;
        for (int dd = 1; dd <= deg / 2; ++dd) {
            long long total = 1;
            for (int i = 0; i < dd; ++i) total *= p_;
            for (long long code = 0; code < total; ++code) {
                std::vector<long long> g(static_cast<size_t>(dd + 1));
                long long c = code;
                for (int j = 0; j < dd; ++j) {
                    g[static_cast<size_t>(j)] = c % p_;
                    c /= p_;
                }
                g[static_cast<size_t>(dd)] = 1;
                if (poly_divides(g, f)) return false;
            }
        }
        return true;
    }

    bool poly_divides(const std::vector<long long>& g, std::vector<long long> f) const {
        int dg = static_cast<int>(g.size()) - 1;
        for (int df = static_cast<int>(f.size()) - 1; df >= dg; --df) {
            long long c = f[static_cast<size_t>(df)] % p_;
            if (c == 0) continue;
            for (int j = 0; j <= dg; ++j)
                f[static_cast<size_t>(df - dg + j)] =
                    (f[static_cast<size_t>(df - dg + j)] + (p_ - g[static_cast<size_t>(j)]) * c) % p_;
        }
        for (long long c : f)
            if (c % p_ != 0) return false;
        return true;
    }

    long long q_ = 0;
    long long p_ = 0;
    int k_ = 0;
    std::vector<long long> modulus_;
};

}  // namespace hurwitz
