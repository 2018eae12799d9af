#include "morcount/lpoly.hpp"

#include <algorithm>
#include <sstream>

namespace morcount {

bool LPoly::is_integral() const {
    for (const auto& [e, c] : c_)
        if (!is_integer(c)) return false;
    return true;
}

LPoly LPoly::operator-() const {
    LPoly r;
    for (const auto& [e, c] : c_) r.c_[e] = -c;
    return r;
}

LPoly LPoly::operator+(const LPoly& o) const {
    LPoly r = *this;
    for (const auto& [e, c] : o.c_) r.add_to(e, c);
    return r;
}

LPoly LPoly::operator-(const LPoly& o) const {
    LPoly r = *this;
    for (const auto& [e, c] : o.c_) r.add_to(e, -c);
    return r;
}

LPoly LPoly::operator*(const LPoly& o) const {
    LPoly r;
    for (const auto& [e1, c1] : c_)
        for (const auto& [e2, c2] : o.c_) r.add_to(e1 + e2, c1 * c2);
    return r;
}

LPoly LPoly::pow(unsigned long e) const {
    LPoly r(1), b = *this;
    while (e) {
        if (e & 1) r *= b;
        b *= b;
        e >>= 1;
    }
    return r;
}

LPoly LPoly::subst_power(long n) const {
    LPoly r;
    for (const auto& [e, c] : c_) r.c_[e * n] = c;
    return r;
}

LPoly LPoly::shifted(long e, const Rat& c) const {
    LPoly r;
    if (c == 0) return r;
    for (const auto& [e1, c1] : c_) r.c_[e1 + e] = c1 * c;
    return r;
}

Rat LPoly::eval(const Rat& q) const {
    Rat r = 0;
    for (const auto& [e, c] : c_) {
        if (q == 0 && e < 0) throw std::runtime_error("LPoly::eval: pole at 0");
        r += c * rpow(q, e);
    }
    return r;
}

void LPoly::divmod(const LPoly& a, const LPoly& b, LPoly& q, LPoly& r) {
    if (b.is_zero()) throw std::runtime_error("LPoly::divmod: division by zero");
    if ((!a.is_zero() && a.low_degree() < 0) || b.low_degree() < 0)
        throw std::runtime_error("LPoly::divmod: operands must be ordinary polynomials");
    q = LPoly();
    r = a;
    long db = b.degree();
    Rat lb = b.leading_coeff();
    while (!r.is_zero() && r.degree() >= db) {
        long dr = r.degree();
        Rat f = r.leading_coeff() / lb;
        q.add_to(dr - db, f);
        r -= b.shifted(dr - db, f);
    }
}

LPoly LPoly::gcd(LPoly a, LPoly b) {
    if (a.is_zero() && b.is_zero()) return LPoly(1);
    if (!a.is_zero()) a = a.shifted(-a.low_degree());
    if (!b.is_zero()) b = b.shifted(-b.low_degree());
    while (!b.is_zero()) {
        LPoly q, r;
        divmod(a, b, q, r);
        a = b;
        b = r.is_zero() ? r : r.shifted(-r.low_degree());
    }
    return a.shifted(0, Rat(1) / a.leading_coeff());
}

std::optional<LPoly> LPoly::divided_exactly_by(const LPoly& den) const {
    if (den.is_zero()) throw std::runtime_error("LPoly: division by zero");
    if (is_zero()) return LPoly();
    // a = L^sa A, den = L^sd B with A, B ordinary; a/den = L^(sa-sd) A/B.
    long sa = low_degree(), sd = den.low_degree();
    LPoly A = shifted(-sa), B = den.shifted(-sd);
    LPoly q, r;
    divmod(A, B, q, r);
    if (!r.is_zero()) return std::nullopt;
    return q.shifted(sa - sd);
}

std::string LPoly::str(const std::string& symbol) const {
    if (c_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
        Rat c = it->second;
        long e = it->first;
        if (first) {
            if (c < 0) os << "-";
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        Rat a = rabs(c);
        bool unit = (a == 1);
        if (e == 0) {
            os << a.str();
        } else {
            if (!unit) os << a.str() << "*";
            os << symbol;
            if (e != 1) os << "^" << e;
        }
        first = false;
    }
    return os.str();
}

long TailSeries::top_bound() const {
    long t = prec_;
    if (!c_.empty()) t = std::max(t, c_.rbegin()->first);
    return t;
}

long TailSeries::virtual_dim() const {
    for (auto it = c_.rbegin(); it != c_.rend(); ++it)
        if (it->second != 0) return it->first;
    if (is_exact()) return kNegInf;
    throw std::runtime_error("TailSeries::virtual_dim: all known coefficients vanish");
}

TailSeries TailSeries::operator+(const TailSeries& o) const {
    TailSeries r;
    r.prec_ = std::max(prec_, o.prec_);
    for (const auto& [e, c] : c_)
        if (e > r.prec_) r.c_[e] = c;
    for (const auto& [e, c] : o.c_)
        if (e > r.prec_) {
            auto v = (r.c_.count(e) ? r.c_[e] : Rat(0)) + c;
            if (v == 0)
                r.c_.erase(e);
            else
                r.c_[e] = v;
        }
    return r;
}

TailSeries TailSeries::operator-(const TailSeries& o) const {
    TailSeries neg = o;
    for (auto& [e, c] : neg.c_) c = -c;
    return *this + neg;
}

TailSeries TailSeries::operator*(const TailSeries& o) const {
    TailSeries r;
    if (is_exact() && o.is_exact())
        r.prec_ = kNegInf;
    else {
        // Unknown tails meet the other factor's top terms.
        long p1 = prec_ == kNegInf ? kNegInf : prec_ + o.top_bound();
        long p2 = o.prec_ == kNegInf ? kNegInf : o.prec_ + top_bound();
        r.prec_ = std::max(p1, p2);
    }
    for (const auto& [e1, c1] : c_)
        for (const auto& [e2, c2] : o.c_) {
            long e = e1 + e2;
            if (e <= r.prec_) continue;
            auto v = (r.c_.count(e) ? r.c_[e] : Rat(0)) + c1 * c2;
            if (v == 0)
                r.c_.erase(e);
            else
                r.c_[e] = v;
        }
    return r;
}

TailSeries TailSeries::truncated(long precision) const {
    if (precision < prec_)
        throw std::runtime_error("TailSeries::truncated: cannot refine precision");
    TailSeries r;
    r.prec_ = precision;
    for (const auto& [e, c] : c_)
        if (e > precision) r.c_[e] = c;
    return r;
}

LPoly TailSeries::to_lpoly() const {
    if (!is_exact()) throw std::runtime_error("TailSeries::to_lpoly: inexact series");
    LPoly p;
    for (const auto& [e, c] : c_) p.set(e, c);
    return p;
}

std::string TailSeries::str(const std::string& symbol) const {
    std::ostringstream os;
    LPoly known;
    for (const auto& [e, c] : c_) known.set(e, c);
    os << known.str(symbol);
    if (!is_exact()) os << " + O(" << symbol << "^" << prec_ << ")";
    return os.str();
}

TailSeries TailSeries::geom_inverse(long k, long precision) {
    if (k < 1) throw std::invalid_argument("geom_inverse: k must be >= 1");
    TailSeries r;
    r.prec_ = precision;
    for (long e = 0; e > precision; e -= k) r.c_[e] = 1;
    return r;
}

RatFuncL::RatFuncL(const LPoly& n, const LPoly& d) : num_(n), den_(d) {
    if (den_.is_zero()) throw std::runtime_error("RatFuncL: zero denominator");
    normalize();
}

void RatFuncL::normalize() {
    if (num_.is_zero()) {
        den_ = LPoly(1);
        return;
    }
    LPoly g = LPoly::gcd(num_, den_);
    num_ = *num_.divided_exactly_by(g);
    den_ = *den_.divided_exactly_by(g);
    long s = den_.low_degree();
    num_ = num_.shifted(-s);
    den_ = den_.shifted(-s);
    Rat lead = den_.leading_coeff();
    num_ = num_.shifted(0, Rat(1) / lead);
    den_ = den_.shifted(0, Rat(1) / lead);
}

RatFuncL RatFuncL::operator/(const RatFuncL& o) const {
    if (o.num_.is_zero()) throw std::runtime_error("RatFuncL: division by zero");
    return {num_ * o.den_, den_ * o.num_};
}

Rat RatFuncL::eval(const Rat& q) const {
    Rat d = den_.eval(q);
    if (d == 0) throw std::runtime_error("RatFuncL::eval: pole at " + q.str());
    return num_.eval(q) / d;
}

std::vector<Rat> RatFuncL::expand_ascending(long k) const {
    if (den_.coeff(0) == 0 || den_.low_degree() < 0)
        throw std::runtime_error("RatFuncL::expand_ascending: denominator not a unit at 0");
    if (!num_.is_zero() && num_.low_degree() < 0)
        throw std::runtime_error("RatFuncL::expand_ascending: Laurent numerator");
    std::vector<Rat> c(static_cast<size_t>(k) + 1, Rat(0));
    Rat d0 = den_.coeff(0);
    for (long m = 0; m <= k; ++m) {
        Rat acc = num_.coeff(m);
        for (long j = 1; j <= m; ++j) {
            Rat dj = den_.coeff(j);
            if (dj != 0) acc -= dj * c[static_cast<size_t>(m - j)];
        }
        c[static_cast<size_t>(m)] = acc / d0;
    }
    return c;
}

TailSeries RatFuncL::expand_descending(long precision) const {
    if (num_.is_zero()) return TailSeries(LPoly(), precision);
    // Substitute L = 1/w: the quotient becomes w^alpha * N(w)/D(w) with
    // N(0), D(0) != 0, and the coefficient of w^m is that of L^-m.
    LPoly nw, dw;
    for (const auto& [e, c] : num_.coeffs()) nw.set(-e, c);
    for (const auto& [e, c] : den_.coeffs()) dw.set(-e, c);
    long alpha = nw.low_degree() - dw.low_degree();
    LPoly N = nw.shifted(-nw.low_degree());
    LPoly D = dw.shifted(-dw.low_degree());
    long depth = -precision - alpha;  // need w-exponents alpha..(-precision-1)
    LPoly known;
    if (depth > 0) {
        std::vector<Rat> c = RatFuncL(N, D).expand_ascending(depth - 1);
        for (long j = 0; j < depth; ++j)
            if (c[static_cast<size_t>(j)] != 0) known.set(-(alpha + j), c[static_cast<size_t>(j)]);
    }
    return TailSeries(known, precision);
}

std::string RatFuncL::str(const std::string& symbol) const {
    if (den_ == LPoly(1)) return num_.str(symbol);
    return "(" + num_.str(symbol) + ") / (" + den_.str(symbol) + ")";
}

}  // namespace morcount
