#include "morcount/linalg.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace morcount {

Int dot(const IVec& a, const IVec& b) {
    if (a.size() != b.size()) throw std::invalid_argument("dot: length mismatch");
    Int s = 0;
    for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

IVec ivec_add(const IVec& a, const IVec& b) {
    IVec r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

IVec ivec_scale(const IVec& a, const Int& s) {
    IVec r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] * s;
    return r;
}

bool is_zero_vec(const IVec& a) {
    for (const auto& x : a)
        if (x != 0) return false;
    return true;
}

IVec primitive(IVec v) {
    Int g = 0;
    for (const auto& x : v) g = igcd(g, x);
    if (g > 1)
        for (auto& x : v) x /= g;
    return v;
}

long rank_of(const IMat& rows) {
    IMat m = rows;
    size_t nr = m.size();
    if (nr == 0) return 0;
    size_t nc = m[0].size();
    long rank = 0;
    size_t row = 0;
    for (size_t col = 0; col < nc && row < nr; ++col) {
        size_t piv = row;
        while (piv < nr && m[piv][col] == 0) ++piv;
        if (piv == nr) continue;
        std::swap(m[piv], m[row]);
        for (size_t i = row + 1; i < nr; ++i) {
            if (m[i][col] == 0) continue;
            Int f1 = m[row][col], f2 = m[i][col];
            for (size_t j = col; j < nc; ++j) m[i][j] = m[i][j] * f1 - m[row][j] * f2;
        }
        ++row;
        ++rank;
    }
    return rank;
}

Int det_of(IMat m) {
    size_t n = m.size();
    for (const auto& r : m)
        if (r.size() != n) throw std::invalid_argument("det_of: not square");
    if (n == 0) return 1;
    Int prev = 1;
    int sign = 1;
    for (size_t k = 0; k + 1 < n; ++k) {
        if (m[k][k] == 0) {
            size_t piv = k + 1;
            while (piv < n && m[piv][k] == 0) ++piv;
            if (piv == n) return 0;
            std::swap(m[piv], m[k]);
            sign = -sign;
        }
        for (size_t i = k + 1; i < n; ++i)
            for (size_t j = k + 1; j < n; ++j) {
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
            }
        prev = m[k][k];
    }
    return sign > 0 ? m[n - 1][n - 1] : -m[n - 1][n - 1];
}

std::optional<std::vector<Rat>> solve_columns(const IMat& cols, const IVec& b) {
    size_t d = cols.size();
    size_t n = b.size();
    // Augmented system over Q, rows indexed by ambient coordinate.
    std::vector<std::vector<Rat>> m(n, std::vector<Rat>(d + 1));
    for (size_t i = 0; i < n; ++i) {
        for (size_t j = 0; j < d; ++j) m[i][j] = Rat(cols[j][i]);
        m[i][d] = Rat(b[i]);
    }
    size_t row = 0;
    std::vector<size_t> pivot_col;
    for (size_t col = 0; col < d && row < n; ++col) {
        size_t piv = row;
        while (piv < n && m[piv][col] == 0) ++piv;
        if (piv == n) throw std::invalid_argument("solve_columns: columns not independent");
        std::swap(m[piv], m[row]);
        Rat p = m[row][col];
        for (size_t j = col; j <= d; ++j) m[row][j] /= p;
        for (size_t i = 0; i < n; ++i) {
            if (i == row || m[i][col] == 0) continue;
            Rat f = m[i][col];
            for (size_t j = col; j <= d; ++j) m[i][j] -= f * m[row][j];
        }
        pivot_col.push_back(col);
        ++row;
    }
    for (size_t i = row; i < n; ++i)
        if (m[i][d] != 0) return std::nullopt;  // inconsistent: b outside span
    std::vector<Rat> x(d);
    for (size_t r = 0; r < pivot_col.size(); ++r) x[pivot_col[r]] = m[r][d];
    return x;
}

namespace {

struct DDRay {
    IVec v;
    uint64_t zero = 0;  // bit j: tight on constraint j
};

uint64_t zero_mask(const IVec& v, const std::vector<IVec>& cons, size_t upto) {
    uint64_t z = 0;
    for (size_t j = 0; j < upto; ++j)
        if (dot(v, cons[j]) == 0) z |= (uint64_t{1} << j);
    return z;
}

}  // namespace

DDCone dual_description(int n, const std::vector<IVec>& inequalities) {
    std::vector<IVec> cons;
    std::set<IVec> seen;
    for (const auto& a : inequalities) {
        IVec p = primitive(a);
        if (is_zero_vec(p)) continue;
        if (seen.insert(p).second) cons.push_back(p);
    }
    if (cons.size() > 60) throw std::runtime_error("dual_description: too many constraints");

    std::vector<IVec> lin;
    for (int i = 0; i < n; ++i) {
        IVec e(n, 0);
        e[i] = 1;
        lin.push_back(e);
    }
    std::vector<DDRay> rays;

    for (size_t k = 0; k < cons.size(); ++k) {
        const IVec& a = cons[k];
        int pivot = -1;
        for (size_t i = 0; i < lin.size(); ++i)
            if (dot(lin[i], a) != 0) {
                pivot = static_cast<int>(i);
                break;
            }
        if (pivot >= 0) {
            IVec b0 = lin[static_cast<size_t>(pivot)];
            Int d0 = dot(b0, a);
            if (d0 < 0) {
                for (auto& x : b0) x = -x;
                d0 = -d0;
            }
            std::vector<IVec> newlin;
            for (size_t i = 0; i < lin.size(); ++i) {
                if (static_cast<int>(i) == pivot) continue;
                Int di = dot(lin[i], a);
                IVec b(lin[i].size());
                for (size_t j = 0; j < b.size(); ++j) b[j] = d0 * lin[i][j] - di * b0[j];
                newlin.push_back(primitive(b));
            }
            lin = newlin;
            for (auto& r : rays) {
                Int dr = dot(r.v, a);
                if (dr != 0) {
                    IVec w(r.v.size());
                    for (size_t j = 0; j < w.size(); ++j) w[j] = d0 * r.v[j] - dr * b0[j];
                    r.v = primitive(w);
                }
            }
            rays.push_back(DDRay{primitive(b0), 0});
            for (auto& r : rays) r.zero = zero_mask(r.v, cons, k + 1);
        } else {
            std::vector<DDRay> plus, zero, minus;
            for (auto& r : rays) {
                Int d = dot(r.v, a);
                if (d > 0)
                    plus.push_back(r);
                else if (d == 0)
                    zero.push_back(r);
                else
                    minus.push_back(r);
            }
            std::vector<DDRay> next;
            std::set<IVec> dedup;
            auto push = [&](DDRay r) {
                if (dedup.insert(r.v).second) next.push_back(std::move(r));
            };
            for (auto& r : plus) push(r);
            for (auto& r : zero) push(r);
            for (const auto& rp : plus)
                for (const auto& rm : minus) {
                    uint64_t z = rp.zero & rm.zero;
                    bool adjacent = true;
                    for (const auto& r3 : rays) {
                        if (r3.v == rp.v || r3.v == rm.v) continue;
                        if ((z & r3.zero) == z) {
                            adjacent = false;
                            break;
                        }
                    }
                    if (!adjacent) continue;
                    Int dp = dot(rp.v, a), dm = dot(rm.v, a);
                    IVec w(rp.v.size());
                    for (size_t j = 0; j < w.size(); ++j) w[j] = dp * rm.v[j] - dm * rp.v[j];
                    push(DDRay{primitive(w), 0});
                }
            rays = std::move(next);
            for (auto& r : rays) r.zero = zero_mask(r.v, cons, k + 1);
        }
    }

    DDCone out;
    out.n = n;
    out.lineality = lin;
    for (auto& r : rays) out.rays.push_back(r.v);
    std::sort(out.rays.begin(), out.rays.end());
    std::sort(out.lineality.begin(), out.lineality.end());
    return out;
}

}  // namespace morcount
