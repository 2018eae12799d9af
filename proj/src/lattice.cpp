#include "morcount/lattice.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace morcount {

Cone Cone::from_generators(int n, std::vector<IVec> gens) {
    Cone c;
    c.n_ = n;
    for (auto& g : gens) {
        if (static_cast<int>(g.size()) != n) throw std::invalid_argument("Cone: bad generator length");
        g = primitive(g);
    }
    gens.erase(std::remove_if(gens.begin(), gens.end(), [](const IVec& v) { return is_zero_vec(v); }),
               gens.end());
    if (gens.empty()) {
        c.dim_ = 0;
        IVec e(n, 0);
        for (int i = 0; i < n; ++i) {
            IVec u(n, 0);
            u[i] = 1;
            c.spans_.push_back(u);
        }
        return c;
    }
    // Dual side: facets and span equations in one double description run.
    DDCone dual = dual_description(n, gens);
    c.spans_ = dual.lineality;
    c.facets_ = dual.rays;
    c.dim_ = n - rank_of(c.spans_);
    // Pointed iff the dual cone is full-dimensional.
    IMat dual_all = dual.rays;
    for (const auto& l : dual.lineality) dual_all.push_back(l);
    c.pointed_ = (rank_of(dual_all) == n);
    // Extreme rays among the given generators: g is extreme iff the facets
    // tight at g cut a one-dimensional face.
    std::set<IVec> ext;
    for (const auto& g : gens) {
        IMat tight = c.spans_;
        for (const auto& f : c.facets_)
            if (dot(g, f) == 0) tight.push_back(f);
        if (rank_of(tight) == n - 1) ext.insert(g);
    }
    c.gens_.assign(ext.begin(), ext.end());
    if (c.pointed_ && c.gens_.empty()) throw std::runtime_error("Cone: no extreme rays found");
    return c;
}

Cone Cone::from_inequalities(int n, const std::vector<IVec>& ineqs) {
    DDCone dd = dual_description(n, ineqs);
    if (!dd.lineality.empty()) {
        // Not strictly convex; callers in scope require pointed cones.
        Cone c;
        c.n_ = n;
        c.pointed_ = false;
        c.gens_ = dd.rays;
        for (const auto& l : dd.lineality) c.gens_.push_back(l);
        c.dim_ = rank_of(c.gens_);
        return c;
    }
    return from_generators(n, dd.rays);
}

bool Cone::contains(const IVec& y) const {
    for (const auto& s : spans_)
        if (dot(y, s) != 0) return false;
    for (const auto& f : facets_)
        if (dot(y, f) < 0) return false;
    return true;
}

bool Cone::contains_strictly(const IVec& y) const {
    for (const auto& s : spans_)
        if (dot(y, s) != 0) return false;
    for (const auto& f : facets_)
        if (dot(y, f) <= 0) return false;
    return true;
}

bool Cone::dual_interior(const IVec& x) const {
    for (const auto& g : gens_)
        if (dot(g, x) <= 0) return false;
    return true;
}

namespace {

// Facet normals of a simplicial cone, within its span, indexed so that
// normal j vanishes on every generator but the j-th (and pairs > 0 with it).
std::vector<IVec> simplicial_facet_normals(const std::vector<IVec>& gens, int n) {
    size_t d = gens.size();
    std::vector<IVec> normals(d);
    for (size_t j = 0; j < d; ++j) {
        // Solve for h with <g_i, h> = delta_ij; h in span coordinates via a
        // least-structure route: take h = sum c_k g_k and solve the Gram system.
        IMat gram(d, IVec(d));
        for (size_t a = 0; a < d; ++a)
            for (size_t b = 0; b < d; ++b) gram[a][b] = dot(gens[a], gens[b]);
        IVec rhs(d, 0);
        rhs[j] = 1;
        IMat cols(d);
        for (size_t a = 0; a < d; ++a) {
            cols[a] = IVec(d);
            for (size_t b = 0; b < d; ++b) cols[a][b] = gram[b][a];
        }
        auto sol = solve_columns(cols, rhs);
        if (!sol) throw std::runtime_error("simplicial_facet_normals: singular Gram matrix");
        // h = sum sol_k g_k, cleared to an integer vector.
        Int lcm = 1;
        for (const auto& r : *sol) lcm = lcm / igcd(lcm, Int(boost::multiprecision::denominator(r))) *
                                          Int(boost::multiprecision::denominator(r));
        IVec h(static_cast<size_t>(n), 0);
        for (size_t k = 0; k < d; ++k) {
            Rat c = (*sol)[k] * Rat(lcm);
            Int ci = to_int(c);
            for (size_t t = 0; t < h.size(); ++t) h[t] += ci * gens[k][t];
        }
        normals[j] = primitive(h);
    }
    return normals;
}

void triangulate_rec(int n, const std::vector<IVec>& gens, std::vector<std::vector<IVec>>& out) {
    long d = rank_of(gens);
    if (d == 0) return;
    if (static_cast<long>(gens.size()) == d) {
        out.push_back(gens);
        return;
    }
    Cone c = Cone::from_generators(n, gens);
    const auto& ext = c.generators();
    if (static_cast<long>(ext.size()) == d) {
        out.push_back(ext);
        return;
    }
    const IVec& apex = ext.front();
    for (const auto& f : c.facets()) {
        if (dot(apex, f) == 0) continue;  // apex on the facet
        std::vector<IVec> on_facet;
        for (const auto& g : ext)
            if (dot(g, f) == 0) on_facet.push_back(g);
        std::vector<std::vector<IVec>> sub;
        triangulate_rec(n, on_facet, sub);
        for (auto& s : sub) {
            s.push_back(apex);
            out.push_back(s);
        }
    }
}

}  // namespace

std::vector<HalfOpenSimplicialCone> triangulate(const Cone& cone) {
    std::vector<HalfOpenSimplicialCone> pieces;
    if (cone.is_zero()) return pieces;
    if (!cone.is_pointed()) throw std::invalid_argument("triangulate: cone not strictly convex");
    std::vector<std::vector<IVec>> simplices;
    triangulate_rec(cone.ambient_rank(), cone.generators(), simplices);

    // Per-piece inward facet normals.
    std::vector<std::vector<IVec>> normals;
    normals.reserve(simplices.size());
    for (const auto& s : simplices) normals.push_back(simplicial_facet_normals(s, cone.ambient_rank()));

    // Deterministic generic point in the relative interior: w = sum M^i g_i
    // with the smallest M >= 1 avoiding every piece's facet hyperplanes.
    const auto& ext = cone.generators();
    IVec w;
    for (Int M = 1;; ++M) {
        IVec cand(static_cast<size_t>(cone.ambient_rank()), 0);
        Int coef = 1;
        for (const auto& g : ext) {
            for (size_t t = 0; t < cand.size(); ++t) cand[t] += coef * g[t];
            coef *= M;
        }
        bool generic = true;
        for (const auto& ns : normals)
            for (const auto& h : ns)
                if (dot(cand, h) == 0) generic = false;
        if (generic) {
            w = cand;
            break;
        }
    }

    for (size_t i = 0; i < simplices.size(); ++i) {
        HalfOpenSimplicialCone p;
        p.gens = simplices[i];
        p.open.resize(p.gens.size());
        for (size_t j = 0; j < p.gens.size(); ++j) p.open[j] = (dot(w, normals[i][j]) < 0);
        pieces.push_back(std::move(p));
    }
    return pieces;
}

std::vector<IVec> parallelepiped_points(const HalfOpenSimplicialCone& piece) {
    size_t d = piece.gens.size();
    size_t n = piece.gens.empty() ? 0 : piece.gens[0].size();
    // Bounding box of the closed parallelepiped.
    IVec lo(n, 0), hi(n, 0);
    for (size_t t = 0; t < n; ++t)
        for (size_t j = 0; j < d; ++j) {
            if (piece.gens[j][t] < 0)
                lo[t] += piece.gens[j][t];
            else
                hi[t] += piece.gens[j][t];
        }
    std::vector<IVec> pts;
    IVec y = lo;
    while (true) {
        auto lam = solve_columns(piece.gens, y);
        if (lam) {
            bool ok = true;
            for (size_t j = 0; j < d; ++j) {
                const Rat& l = (*lam)[j];
                if (piece.open[j] ? !(l > 0 && l <= 1) : !(l >= 0 && l < 1)) {
                    ok = false;
                    break;
                }
            }
            if (ok) pts.push_back(y);
        }
        size_t t = 0;
        while (t < n && y[t] == hi[t]) {
            y[t] = lo[t];
            ++t;
        }
        if (t == n) break;
        y[t] += 1;
    }
    std::sort(pts.begin(), pts.end());
    return pts;
}

ConeZeta cone_zeta(const Cone& cone) {
    ConeZeta z;
    z.n = cone.ambient_rank();
    if (cone.is_zero()) {
        ConeZeta::Term t;
        t.numer.push_back(IVec(static_cast<size_t>(z.n), 0));
        z.terms.push_back(t);
        return z;
    }
    for (const auto& piece : triangulate(cone)) {
        ConeZeta::Term t;
        t.denom = piece.gens;
        t.numer = parallelepiped_points(piece);
        z.terms.push_back(std::move(t));
    }
    return z;
}

RatFuncL specialize_zeta(const ConeZeta& z, const Cone& cone, const IVec& x) {
    if (!cone.dual_interior(x) && !cone.is_zero())
        throw std::invalid_argument("specialize_zeta: x not in the interior of the dual cone");
    // Common denominator: per exponent k, the maximal multiplicity of the
    // factor (1 - t^k) across terms.
    std::map<Int, size_t> common;
    std::vector<std::map<Int, size_t>> per_term;
    for (const auto& t : z.terms) {
        std::map<Int, size_t> m;
        for (const auto& v : t.denom) ++m[dot(v, x)];
        for (const auto& [k, mult] : m) common[k] = std::max(common[k], mult);
        per_term.push_back(std::move(m));
    }
    LPoly num;
    LPoly den(1);
    for (const auto& [k, mult] : common) {
        LPoly f = LPoly(1) - LPoly::monomial(static_cast<long>(k.convert_to<long>()));
        for (size_t i = 0; i < mult; ++i) den *= f;
    }
    for (size_t i = 0; i < z.terms.size(); ++i) {
        LPoly t_num;
        for (const auto& p : z.terms[i].numer)
            t_num.add_to(static_cast<long>(dot(p, x).convert_to<long>()), 1);
        for (const auto& [k, mult] : common) {
            size_t have = per_term[i].count(k) ? per_term[i][k] : 0;
            LPoly f = LPoly(1) - LPoly::monomial(static_cast<long>(k.convert_to<long>()));
            for (size_t j = have; j < mult; ++j) t_num *= f;
        }
        num += t_num;
    }
    return RatFuncL(num, den);
}

Int level_count(const Cone& cone, const IVec& x, long d) {
    if (cone.is_zero()) return d == 0 ? 1 : 0;
    if (!cone.dual_interior(x)) throw std::invalid_argument("level_count: x not interior");
    size_t n = x.size();
    // Bounding box of the level polytope from its vertices d * g/<g,x>.
    std::vector<Rat> lo(n, Rat(0)), hi(n, Rat(0));
    bool first = true;
    for (const auto& g : cone.generators()) {
        Rat s = Rat(Int(d)) / Rat(dot(g, x));
        for (size_t t = 0; t < n; ++t) {
            Rat v = s * Rat(g[t]);
            if (first || v < lo[t]) lo[t] = v;
            if (first || v > hi[t]) hi[t] = v;
        }
        first = false;
    }
    // Last coordinate with x_t != 0 is solved from the level equation.
    size_t solve_t = n;
    for (size_t t = n; t-- > 0;)
        if (x[t] != 0) {
            solve_t = t;
            break;
        }
    if (solve_t == n) throw std::invalid_argument("level_count: x = 0");
    IVec y(n, 0);
    std::vector<long> ilo(n), ihi(n);
    for (size_t t = 0; t < n; ++t) {
        Rat l = lo[t], h = hi[t];
        ilo[t] = static_cast<long>(boost::multiprecision::numerator(l).convert_to<double>() /
                                   boost::multiprecision::denominator(l).convert_to<double>() - 2);
        ihi[t] = static_cast<long>(boost::multiprecision::numerator(h).convert_to<double>() /
                                   boost::multiprecision::denominator(h).convert_to<double>() + 2);
        while (Rat(Int(ilo[t])) < l) ++ilo[t];
        --ilo[t];
        while (Rat(Int(ihi[t])) > h) --ihi[t];
        ++ihi[t];
    }
    Int count = 0;
    for (size_t t = 0; t < n; ++t) y[t] = ilo[t];
    y[solve_t] = 0;
    while (true) {
        // Solve x . y = d for coordinate solve_t.
        Int rest = 0;
        for (size_t t = 0; t < n; ++t)
            if (t != solve_t) rest += x[t] * y[t];
        Int want = Int(d) - rest;
        if (want % x[solve_t] == 0) {
            y[solve_t] = want / x[solve_t];
            if (cone.contains(y)) ++count;
        }
        size_t t = 0;
        while (t < n && (t == solve_t || y[t] == ihi[t])) {
            if (t != solve_t) y[t] = ilo[t];
            ++t;
        }
        if (t == n) break;
        y[t] += 1;
    }
    return count;
}

Int index_of(const IVec& x) {
    if (is_zero_vec(x)) throw std::invalid_argument("index_of: zero vector");
    Int g = 0;
    for (const auto& c : x) g = igcd(g, c);
    return g;
}

Rat leading_alpha(const ConeZeta& z, const Cone& cone, const IVec& x) {
    if (cone.is_zero()) return Rat(1);
    if (!cone.dual_interior(x)) throw std::invalid_argument("leading_alpha: x not interior");
    // A = lim (1-t)^dim sp_x Z = sum over pieces of #Pi / prod <v,x>.
    Rat A = 0;
    for (const auto& t : z.terms) {
        Rat denom = 1;
        for (const auto& v : t.denom) denom *= Rat(dot(v, x));
        A += Rat(Int(t.numer.size())) / denom;
    }
    // Counts along multiples of ind grow like A*ind/(dim-1)! * (ind d)^(dim-1).
    Int ind = index_of(x);
    Rat fact = 1;
    for (long i = 2; i <= cone.dim() - 1; ++i) fact *= i;
    return A * Rat(ind) / fact;
}

WeightedConeZeta weighted_cone_zeta(const Cone& cone, const IVec& x0) {
    WeightedConeZeta w;
    w.n = cone.ambient_rank();
    if (cone.is_zero()) {
        WeightedConeZeta::Term t;
        t.numer.push_back({IVec(static_cast<size_t>(w.n), 0), Int(0)});
        w.terms.push_back(t);
        return w;
    }
    for (const auto& piece : triangulate(cone)) {
        WeightedConeZeta::Term t;
        for (const auto& v : piece.gens) t.denom.push_back({v, dot(v, x0)});
        for (const auto& p : parallelepiped_points(piece)) t.numer.push_back({p, dot(p, x0)});
        w.terms.push_back(std::move(t));
    }
    return w;
}

std::pair<Rat, long> a_b_invariants(const Cone& eff, const IVec& L_class, const IVec& omega_class) {
    if (!eff.contains_strictly(L_class))
        throw std::invalid_argument("a_b_invariants: L not big (not interior to Eff)");
    if (!eff.contains_strictly(omega_class))
        throw std::invalid_argument("a_b_invariants: omega not interior to Eff");
    Rat a = 0;
    for (const auto& f : eff.facets()) {
        Rat r = Rat(dot(omega_class, f)) / Rat(dot(L_class, f));
        if (r > a) a = r;
    }
    // Tight facets at a*L - omega, scaled integral.
    Int den = Int(boost::multiprecision::denominator(a));
    Int num = Int(boost::multiprecision::numerator(a));
    IVec zpt(L_class.size());
    for (size_t i = 0; i < zpt.size(); ++i) zpt[i] = num * L_class[i] - den * omega_class[i];
    IMat tight;
    for (const auto& f : eff.facets()) {
        Int v = dot(zpt, f);
        if (v < 0) throw std::runtime_error("a_b_invariants: point escaped the effective cone");
        if (v == 0) tight.push_back(f);
    }
    return {a, rank_of(tight)};
}

}  // namespace morcount
