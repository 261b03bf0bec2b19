#pragma once

#include "qschur/laurent.hpp"

namespace qschur {

/// [n]_d = (v^{dn} - v^{-dn}) / (v^d - v^{-d}); odd in n, [0] = 0.
LaurentPoly quantum_integer(int n, int d = 1);

/// [n]_d^! = [1]_d [2]_d ... [n]_d, with [0]^! = 1. Throws
/// std::invalid_argument for n < 0.
LaurentPoly quantum_factorial(int n, int d = 1);

/// Quantum binomial [a choose t]_d for any integer a and t >= 0, via the
/// product formula; every partial product is Laurent-integral so each step
/// divides exactly. Throws std::invalid_argument for t < 0.
LaurentPoly quantum_binomial(int a, int t, int d = 1);

}  // namespace qschur
