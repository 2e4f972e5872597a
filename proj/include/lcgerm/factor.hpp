#pragma once

#include <vector>

#include "lcgerm/upoly.hpp"

namespace lcgerm {

// Distinct monic irreducible factors of f over its coefficient field, in the
// deterministic order of compare(UPoly). Multiplicities are discarded.
// Over Q this is Zassenhaus (Cantor-Zassenhaus mod p, Hensel lifting,
// subset recombination); over an extension it is Trager's norm method,
// recursing down the tower.
std::vector<UPoly> factor(const UPoly& f);

// Norm of f over the base of f's field: Res_a(minpoly(a), f(a, t)).
UPoly norm_to_base(const UPoly& f);

}  // namespace lcgerm
