#pragma once

#include <stdexcept>
#include <vector>

#include "hurwitz/numeric.hpp"

namespace hurwitz {

// Element of Q[z]/(z^s - 1), the quotient ring rather than the cyclotomic
// field: canonical representatives of degree < s make equality and
// rationality tests trivial, and group-averaged quantities land in Q without
// ever factoring z^s - 1.
class Cyclotomic {
  public:
    Cyclotomic() : s_(1), c_(1, Rat(0)) {}
    explicit Cyclotomic(int s, Rat constant = Rat(0)) : s_(s), c_(static_cast<size_t>(s), Rat(0)) {
        if (s < 1) throw std::domain_error("Cyclotomic: order must be >= 1");
        c_[0] = std::move(constant);
    }

    static Cyclotomic zeta_power(int s, long long e) {
        Cyclotomic z(s);
        z.c_[static_cast<size_t>(((e % s) + s) % s)] = 1;
        return z;
    }

    int order() const { return s_; }
    const std::vector<Rat>& coeffs() const { return c_; }

    bool is_zero() const {
        for (const Rat& x : c_)
            if (x != 0) return false;
        return true;
    }

    bool is_rational() const {
        for (size_t i = 1; i < c_.size(); ++i)
            if (c_[i] != 0) return false;
        return true;
    }

    Rat rational_part() const { return c_[0]; }

    // embed into Q[z]/(z^t - 1) for s | t (zeta_s = zeta_t^{t/s})
    Cyclotomic lift(int t) const {
        if (t == s_) return *this;
        if (t % s_ != 0) throw std::domain_error("Cyclotomic::lift: order must be a multiple");
        Cyclotomic out(t);
        int step = t / s_;
        for (int i = 0; i < s_; ++i) out.c_[static_cast<size_t>(i * step)] = c_[static_cast<size_t>(i)];
        return out;
    }

    Cyclotomic& operator+=(const Cyclotomic& o) {
        check(o);
        for (int i = 0; i < s_; ++i) c_[static_cast<size_t>(i)] += o.c_[static_cast<size_t>(i)];
        return *this;
    }
    Cyclotomic& operator-=(const Cyclotomic& o) {
        check(o);
        for (int i = 0; i < s_; ++i) c_[static_cast<size_t>(i)] -= o.c_[static_cast<size_t>(i)];
        return *this;
    }
    Cyclotomic& operator*=(const Rat& r) {
        for (Rat& x : c_) x *= r;
        return *this;
    }

    friend Cyclotomic operator+(Cyclotomic a, const Cyclotomic& b) { return a += b; }
    friend Cyclotomic operator-(Cyclotomic a, const Cyclotomic& b) { return a -= b; }
    friend Cyclotomic operator*(const Cyclotomic& a, const Cyclotomic& b) {
        a.check(b);
        Cyclotomic out(a.s_);
        for (int i = 0; i < a.s_; ++i) {
            if (a.c_[static_cast<size_t>(i)] == 0) continue;
            for (int j = 0; j < a.s_; ++j) {
                if (b.c_[static_cast<size_t>(j)] == 0) continue;
                out.c_[static_cast<size_t>((i + j) % a.s_)] +=
                    a.c_[static_cast<size_t>(i)] * b.c_[static_cast<size_t>(j)];
            }
        }
        return out;
    }
    friend Cyclotomic operator*(Cyclotomic a, const Rat& r) { return a *= r; }

    friend bool operator==(const Cyclotomic& a, const Cyclotomic& b) = default;

  private:
    void check(const Cyclotomic& o) const {
        if (s_ != o.s_) throw std::domain_error("Cyclotomic: mixed orders");
    }
    int s_;
    std::vector<Rat> c_;
};

// --- dense polynomials over Q, little-endian coefficients -----------------

inline std::vector<Rat> poly_trim(std::vector<Rat> a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
    return a;
}

inline std::vector<Rat> poly_mul(const std::vector<Rat>& a, const std::vector<Rat>& b) {
    if (a.empty() || b.empty()) return {};
    std::vector<Rat> c(a.size() + b.size() - 1, Rat(0));
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j) c[i + j] += a[i] * b[j];
    return c;
}

// quotient of an exact division (throws if a remainder survives)
inline std::vector<Rat> poly_exact_div(std::vector<Rat> num, const std::vector<Rat>& den) {
    num = poly_trim(std::move(num));
    std::vector<Rat> d = poly_trim(den);
    if (d.empty()) throw std::domain_error("poly_exact_div: division by zero");
    if (num.empty()) return {};
    if (num.size() < d.size()) throw std::domain_error("poly_exact_div: inexact");
    std::vector<Rat> q(num.size() - d.size() + 1, Rat(0));
    for (size_t i = q.size(); i-- > 0;) {
        Rat c = num[i + d.size() - 1] / d.back();
        q[i] = c;
        if (c == 0) continue;
        for (size_t j = 0; j < d.size(); ++j) num[i + j] -= c * d[j];
    }
    for (const Rat& c : num)
        if (c != 0) throw std::domain_error("poly_exact_div: inexact");
    return q;
}

// s-th cyclotomic polynomial: (z^s - 1) / prod_{d|s, d<s} Phi_d(z).
inline std::vector<Rat> cyclotomic_polynomial(int s) {
    std::vector<Rat> num(static_cast<size_t>(s + 1), Rat(0));
    num[0] = -1;
    num[static_cast<size_t>(s)] = 1;
    for (int d = 1; d < s; ++d) {
        if (s % d != 0) continue;
        num = poly_exact_div(std::move(num), cyclotomic_polynomial(d));
    }
    return num;
}

// Q(zeta_s) = Q[z]/Phi_s(z): the honest field, needed where ranks and
// inverses are required. Elements are reduced mod Phi_s.
class CyclotomicField {
  public:
    explicit CyclotomicField(int s) : s_(s), phi_(cyclotomic_polynomial(s)) {}

    int order() const { return s_; }
    int degree() const { return static_cast<int>(phi_.size()) - 1; }

    using Elem = std::vector<Rat>;  // length degree()

    Elem reduce(std::vector<Rat> a) const {
        size_t deg = phi_.size() - 1;
        while (a.size() > deg) {
            Rat c = a.back();
            a.pop_back();
            if (c == 0) continue;
            for (size_t j = 0; j < deg; ++j) a[a.size() - deg + j] -= c * phi_[j];
        }
        a.resize(deg, Rat(0));
        return a;
    }

    Elem from_quotient_ring(const Cyclotomic& c) const {
        if (c.order() != s_) throw std::domain_error("CyclotomicField: order mismatch");
        return reduce(c.coeffs());
    }

    Elem zero() const { return Elem(static_cast<size_t>(degree()), Rat(0)); }

    bool is_zero(const Elem& a) const {
        for (const Rat& x : a)
            if (x != 0) return false;
        return true;
    }

    Elem add(Elem a, const Elem& b) const {
        for (size_t i = 0; i < a.size(); ++i) a[i] += b[i];
        return a;
    }
    Elem sub(Elem a, const Elem& b) const {
        for (size_t i = 0; i < a.size(); ++i) a[i] -= b[i];
        return a;
    }
    Elem mul(const Elem& a, const Elem& b) const {
        std::vector<Rat> prod(2 * a.size(), Rat(0));
        for (size_t i = 0; i < a.size(); ++i) {
            if (a[i] == 0) continue;
            for (size_t j = 0; j < b.size(); ++j) prod[i + j] += a[i] * b[j];
        }
        return reduce(std::move(prod));
    }

    // extended Euclid in Q[z] against Phi_s
    Elem inverse(const Elem& a) const {
        if (is_zero(a)) throw std::domain_error("CyclotomicField: inverse of zero");
        std::vector<Rat> r0 = phi_, r1 = poly_trim(a);
        std::vector<Rat> t0 = {}, t1 = {Rat(1)};
        while (!r1.empty()) {
            // r0 = q*r1 + r2
            std::vector<Rat> q(std::max<size_t>(r0.size(), r1.size()), Rat(0));
            std::vector<Rat> rem = r0;
            if (rem.size() >= r1.size()) {
                q.assign(rem.size() - r1.size() + 1, Rat(0));
                for (size_t i = q.size(); i-- > 0;) {
                    if (i + r1.size() - 1 >= rem.size()) continue;
                    Rat c = rem[i + r1.size() - 1] / r1.back();
                    q[i] = c;
                    if (c == 0) continue;
                    for (size_t j = 0; j < r1.size(); ++j) rem[i + j] -= c * r1[j];
                }
            } else {
                q = {};
            }
            rem = poly_trim(std::move(rem));
            std::vector<Rat> t2 = t0;  // t2 = t0 - q*t1
            std::vector<Rat> qt = poly_mul(q, t1);
            if (t2.size() < qt.size()) t2.resize(qt.size(), Rat(0));
            for (size_t i = 0; i < qt.size(); ++i) t2[i] -= qt[i];
            r0 = std::move(r1);
            r1 = std::move(rem);
            t0 = std::move(t1);
            t1 = poly_trim(std::move(t2));
        }
        // r0 = gcd, a nonzero constant since Phi_s is irreducible
        if (r0.size() != 1) throw std::logic_error("CyclotomicField: gcd not constant");
        Rat inv_c = Rat(1) / r0[0];
        std::vector<Rat> res(t0.size());
        for (size_t i = 0; i < t0.size(); ++i) res[i] = t0[i] * inv_c;
        return reduce(std::move(res));
    }

  private:
    int s_;
    std::vector<Rat> phi_;
};

// Value of a quotient-ring element in the field component z = zeta_s,
// required to be rational there (group-averaged quantities are).
inline Rat rational_value_in_field(const Cyclotomic& c, const CyclotomicField& F) {
    CyclotomicField::Elem e = F.from_quotient_ring(c);
    for (size_t i = 1; i < e.size(); ++i)
        if (e[i] != 0) throw std::logic_error("rational_value_in_field: not rational");
    return e.empty() ? Rat(0) : e[0];
}

// --- truncated power series over the quotient ring ------------------------

using CycSeries = std::vector<Cyclotomic>;  // coefficients of t^0..t^N

inline CycSeries series_mul(const CycSeries& a, const CycSeries& b, int s) {
    size_t n = a.size();
    CycSeries c(n, Cyclotomic(s));
    for (size_t i = 0; i < n; ++i) {
        if (a[i].is_zero()) continue;
        for (size_t j = 0; i + j < n; ++j) {
            if (b[j].is_zero()) continue;
            c[i + j] += a[i] * b[j];
        }
    }
    return c;
}

// 1/a for a series with constant term 1 (the det(I - tM) case).
inline CycSeries series_inverse(const CycSeries& a, int s) {
    size_t n = a.size();
    if (a.empty() || !(a[0] == Cyclotomic(s, Rat(1))))
        throw std::domain_error("series_inverse: constant term must be 1");
    CycSeries b(n, Cyclotomic(s));
    b[0] = Cyclotomic(s, Rat(1));
    for (size_t k = 1; k < n; ++k) {
        Cyclotomic acc(s);
        for (size_t j = 1; j <= k; ++j) {
            if (a[j].is_zero()) continue;
            acc += a[j] * b[k - j];
        }
        b[k] = Cyclotomic(s) - acc;
    }
    return b;
}

}  // namespace hurwitz
