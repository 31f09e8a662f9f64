#pragma once

#include <cstddef>
#include <functional>
#include <vector>

#include "ptreg/projective.hpp"

namespace ptreg {

// Number of degree-k monomials in n+1 variables: C(n+k, k).
std::size_t monomial_count(std::size_t n, unsigned k);

// Exponent vectors of total degree k in x_0..x_n, in graded-lexicographic
// order with x_0 > x_1 > ... > x_n (descending lex on exponents). This order
// is the file-format contract for hypersurface coefficient vectors.
void for_each_exponent(std::size_t n, unsigned k,
                       const std::function<void(const std::vector<unsigned>&)>& fn);

// Values of all degree-k monomials at the point, in the fixed order.
std::vector<Int> monomial_values(const ProjPoint& p, unsigned k);

}  // namespace ptreg
