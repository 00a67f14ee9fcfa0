#pragma once

#include <string_view>

#include "hassett/divisor_class.hpp"
#include "hassett/space.hpp"

namespace hassett {

/// Parses a signed sum of terms "coefficient*atom", "atom" or "0" into a
/// class on the given space. Atoms: kappa, lambda, psi, psi(i), Dirr, Dnod,
/// Dsec, Dsec(i,j), D(j;{...}). psi, Dnod and Dsec without arguments expand
/// to the matching aggregate. Boundary indices are normalized; an index pair
/// naming a conventional zero contributes nothing, a nonexistent stratum or
/// section pair is an error. Example: "13*lambda - 2*Dnod + psi".
DivisorClass parse_class_expression(const ModuliSpace& space, std::string_view text);

}  // namespace hassett
