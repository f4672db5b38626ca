#pragma once

#include <cmath>

namespace ness {

/// log(n!) with table-backed exact-ish values for the sizes this code uses.
double log_factorial(int n);

/// log of the binomial coefficient C(n, k). Requires 0 <= k <= n.
double log_binomial(int n, int k);

/// log(exp(a) + exp(b)) without overflow; handles -inf operands.
double log_add_exp(double a, double b);

/// Worker cap for OpenMP regions: NESS_THREADS if set to a positive
/// integer, otherwise the machine parallelism.
int worker_count();

} // namespace ness
