#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "morcount/numeric.hpp"

namespace morcount {

// Exact Laurent polynomial in one symbol (written "L" by default) over Q.
// This is the computational shadow of the localized Grothendieck ring that
// every closed formula in scope lives in.
class LPoly {
public:
    LPoly() = default;
    LPoly(int c) { set(0, Rat(c)); }
    LPoly(const Int& c) { set(0, Rat(c)); }
    LPoly(const Rat& c) { set(0, c); }

    static LPoly monomial(long e, const Rat& c = Rat(1)) {
        LPoly p;
        p.set(e, c);
        return p;
    }
    static LPoly var() { return monomial(1); }  // the class L

    bool is_zero() const { return c_.empty(); }
    bool is_integral() const;

    // Largest exponent with nonzero coefficient; kNegInf for 0.  With the
    // dim(L^n) = n normalization this doubles as the virtual dimension.
    long degree() const { return c_.empty() ? kNegInf : c_.rbegin()->first; }
    long low_degree() const { return c_.empty() ? kNegInf : c_.begin()->first; }
    Rat leading_coeff() const { return c_.empty() ? Rat(0) : c_.rbegin()->second; }
    Rat coeff(long e) const {
        auto it = c_.find(e);
        return it == c_.end() ? Rat(0) : it->second;
    }
    const std::map<long, Rat>& coeffs() const { return c_; }

    void set(long e, const Rat& v) {
        if (v == 0)
            c_.erase(e);
        else
            c_[e] = v;
    }
    void add_to(long e, const Rat& v) { set(e, coeff(e) + v); }

    LPoly operator-() const;
    LPoly operator+(const LPoly& o) const;
    LPoly operator-(const LPoly& o) const;
    LPoly operator*(const LPoly& o) const;
    LPoly& operator+=(const LPoly& o) { return *this = *this + o; }
    LPoly& operator-=(const LPoly& o) { return *this = *this - o; }
    LPoly& operator*=(const LPoly& o) { return *this = *this * o; }
    bool operator==(const LPoly& o) const { return c_ == o.c_; }
    bool operator!=(const LPoly& o) const { return c_ != o.c_; }

    LPoly pow(unsigned long e) const;

    // Substitution L -> L^n (n >= 1), the Adams-type operation on Z[L].
    LPoly subst_power(long n) const;

    // Multiply by the monomial c*L^e.
    LPoly shifted(long e, const Rat& c = Rat(1)) const;

    Rat eval(const Rat& q) const;

    // Exact division; nullopt when the remainder is nonzero.
    std::optional<LPoly> divided_exactly_by(const LPoly& den) const;

    // Quotient/remainder with both operands shifted to ordinary polynomials.
    static void divmod(const LPoly& a, const LPoly& b, LPoly& q, LPoly& r);
    static LPoly gcd(LPoly a, LPoly b);

    // Sparse rendering, descending exponents: "L^2 - 2 + L^-2".
    std::string str(const std::string& symbol = "L") const;

private:
    std::map<long, Rat> c_;
};

// Truncated descending series in L^-1: coefficients are exact for every
// exponent strictly above `precision`, the tail O(L^precision) is unknown.
// A series with precision kNegInf is exact.
class TailSeries {
public:
    TailSeries() : prec_(kNegInf) {}
    explicit TailSeries(const LPoly& p, long precision = kNegInf) : prec_(precision) {
        for (const auto& [e, c] : p.coeffs())
            if (e > prec_) c_[e] = c;
    }

    long precision() const { return prec_; }
    bool is_exact() const { return prec_ == kNegInf; }
    Rat coeff(long e) const {
        if (e <= prec_) throw std::runtime_error("TailSeries: coefficient below precision");
        auto it = c_.find(e);
        return it == c_.end() ? Rat(0) : it->second;
    }
    const std::map<long, Rat>& coeffs() const { return c_; }

    // Largest exponent with nonzero coefficient.  Throws when every known
    // coefficient vanishes but an unknown tail remains.
    long virtual_dim() const;

    TailSeries operator+(const TailSeries& o) const;
    TailSeries operator-(const TailSeries& o) const;
    TailSeries operator*(const TailSeries& o) const;

    TailSeries truncated(long precision) const;

    // As an exact Laurent polynomial; requires an exact series.
    LPoly to_lpoly() const;

    std::string str(const std::string& symbol = "L") const;

    static TailSeries geom_inverse(long k, long precision);

private:
    void set(long e, const Rat& v) {
        if (v == 0)
            c_.erase(e);
        else
            c_[e] = v;
    }
    // Upper bound for the top exponent, counting the unknown tail.
    long top_bound() const;

    std::map<long, Rat> c_;
    long prec_;
};

// Quotient of Laurent polynomials, reduced, denominator an ordinary
// polynomial with nonzero constant term and leading coefficient 1.
class RatFuncL {
public:
    RatFuncL() : num_(0), den_(1) {}
    RatFuncL(const LPoly& n) : num_(n), den_(1) {}
    RatFuncL(const LPoly& n, const LPoly& d);

    const LPoly& num() const { return num_; }
    const LPoly& den() const { return den_; }

    RatFuncL operator+(const RatFuncL& o) const { return {num_ * o.den_ + o.num_ * den_, den_ * o.den_}; }
    RatFuncL operator-(const RatFuncL& o) const { return {num_ * o.den_ - o.num_ * den_, den_ * o.den_}; }
    RatFuncL operator*(const RatFuncL& o) const { return {num_ * o.num_, den_ * o.den_}; }
    RatFuncL operator/(const RatFuncL& o) const;
    bool operator==(const RatFuncL& o) const { return num_ * o.den_ == o.num_ * den_; }
    bool operator!=(const RatFuncL& o) const { return !(*this == o); }

    Rat eval(const Rat& q) const;

    // Ascending power-series coefficients c_0..c_k of num/den (den(0) != 0).
    std::vector<Rat> expand_ascending(long k) const;

    // Descending expansion in L down to (exclusive) the given precision.
    TailSeries expand_descending(long precision) const;

    std::string str(const std::string& symbol = "L") const;

private:
    void normalize();
    LPoly num_, den_;
};

// virtual_dim as a free function mirroring the filtration of the completed
// ring; kNegInf encodes "dimension -infinity".
inline long virtual_dim(const LPoly& p) { return p.degree(); }
inline long virtual_dim(const TailSeries& s) { return s.virtual_dim(); }

}  // namespace morcount
