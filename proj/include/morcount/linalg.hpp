#pragma once

#include <optional>
#include <vector>

#include "morcount/numeric.hpp"

namespace morcount {

using IVec = std::vector<Int>;
using IMat = std::vector<IVec>;

Int dot(const IVec& a, const IVec& b);
IVec ivec_add(const IVec& a, const IVec& b);
IVec ivec_scale(const IVec& a, const Int& s);
bool is_zero_vec(const IVec& a);

// Divide by the gcd of the entries, keeping orientation; 0 stays 0.
IVec primitive(IVec v);

long rank_of(const IMat& rows);
Int det_of(IMat m);  // square, Bareiss fraction-free

// Solve A x = b where the columns of A are linearly independent.
// Returns nullopt when b is outside the column span.
std::optional<std::vector<Rat>> solve_columns(const IMat& cols, const IVec& b);

// Generators-and-lineality view of {x : <a,x> >= 0 for all rows a}.
struct DDCone {
    int n = 0;
    std::vector<IVec> rays;       // extreme rays, primitive
    std::vector<IVec> lineality;  // basis of the lineality space
};

// Double description method, exact arithmetic.  Intended for the small
// instances appearing here (rank <= 8, a few dozen constraints).
DDCone dual_description(int n, const std::vector<IVec>& inequalities);

}  // namespace morcount
