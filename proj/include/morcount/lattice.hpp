#pragma once

#include <string>
#include <vector>

#include "morcount/linalg.hpp"
#include "morcount/lpoly.hpp"

namespace morcount {

// Rational polyhedral strictly convex cone in a rank-n lattice, carried
// both by primitive extreme rays and by a facet/equation description.
class Cone {
public:
    Cone() = default;
    static Cone from_generators(int n, std::vector<IVec> gens);
    static Cone from_inequalities(int n, const std::vector<IVec>& ineqs);

    int ambient_rank() const { return n_; }
    long dim() const { return dim_; }
    bool is_zero() const { return dim_ == 0; }
    bool is_simplicial() const { return static_cast<long>(gens_.size()) == dim_; }
    bool is_pointed() const { return pointed_; }

    const std::vector<IVec>& generators() const { return gens_; }    // extreme rays, primitive, sorted
    const std::vector<IVec>& facets() const { return facets_; }      // inward facet normals
    const std::vector<IVec>& equations() const { return spans_; }    // vanish on span(C)

    bool contains(const IVec& y) const;
    bool contains_strictly(const IVec& y) const;  // relative interior

    // x with <y,x> > 0 for every nonzero y in C.
    bool dual_interior(const IVec& x) const;

private:
    int n_ = 0;
    long dim_ = 0;
    bool pointed_ = true;
    std::vector<IVec> gens_, facets_, spans_;
};

struct Fan {
    std::string name;
    std::vector<IVec> rays;
    std::vector<std::vector<int>> max_cones;  // 0-based ray index sets
};

// Simplicial piece of a half-open decomposition: independent generators
// plus per-generator openness flags (open = lattice points with vanishing
// coordinate on that generator are excluded).
struct HalfOpenSimplicialCone {
    std::vector<IVec> gens;
    std::vector<bool> open;
};

// Interior-disjoint simplicial decomposition; every lattice point of the
// cone lies in exactly one half-open piece.  Zero cone gives no pieces.
std::vector<HalfOpenSimplicialCone> triangulate(const Cone& cone);

// Lattice points of the half-open fundamental parallelepiped.
std::vector<IVec> parallelepiped_points(const HalfOpenSimplicialCone& piece);

// Rational form of Z(N, C, t): sum of monomial-numerator terms over
// products of (1 - t^{v_j}).
struct ConeZeta {
    int n = 0;
    struct Term {
        std::vector<IVec> numer;  // lattice points of the parallelepiped
        std::vector<IVec> denom;  // generators of the simplicial piece
    };
    std::vector<Term> terms;
};

ConeZeta cone_zeta(const Cone& cone);

// sp_x Z: univariate rational function in t whose ascending coefficients
// count {y in C : <y,x> = d}.  Requires x in the interior of the dual.
RatFuncL specialize_zeta(const ConeZeta& z, const Cone& cone, const IVec& x);

// Count of {y in C cap N : <y,x> = d} by direct enumeration.
Int level_count(const Cone& cone, const IVec& x, long d);

Int index_of(const IVec& x);

// Constant alpha with #{y : <y,x> = ind*d} ~ alpha * (ind*d)^(dim C - 1).
Rat leading_alpha(const ConeZeta& z, const Cone& cone, const IVec& x);

// Rational form of the rho-weighted zeta (1.6.6): terms carry the
// rho-exponent <p, x0> on numerator points and <v, x0> on generators.
struct WeightedConeZeta {
    int n = 0;
    struct Term {
        std::vector<std::pair<IVec, Int>> numer;
        std::vector<std::pair<IVec, Int>> denom;
    };
    std::vector<Term> terms;
};

WeightedConeZeta weighted_cone_zeta(const Cone& cone, const IVec& x0);

// a(L) = Inf{a : a*L - omega in Eff} and b = codimension of the minimal
// face of Eff containing a*L - omega.  L and omega interior (big).
std::pair<Rat, long> a_b_invariants(const Cone& eff, const IVec& L_class, const IVec& omega_class);

}  // namespace morcount
