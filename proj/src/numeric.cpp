#include "ness/numeric.hpp"

#include "ness/errors.hpp"

#include <omp.h>

#include <array>
#include <cstdlib>
#include <string>

namespace ness {

namespace {

constexpr int kTableSize = 2049;

const double* log_factorial_table() {
    static const auto table = [] {
        auto t = new std::array<double, kTableSize>();
        for (int n = 0; n < kTableSize; ++n) {
            (*t)[n] = std::lgamma(static_cast<double>(n) + 1.0);
        }
        return t;
    }();
    return table->data();
}

} // namespace

double log_factorial(int n) {
    if (n < 0) {
        throw domain_error("log_factorial: negative argument n=" + std::to_string(n));
    }
    if (n < kTableSize) {
        return log_factorial_table()[n];
    }
    return std::lgamma(static_cast<double>(n) + 1.0);
}

double log_binomial(int n, int k) {
    if (k < 0 || k > n) {
        throw domain_error("log_binomial: k=" + std::to_string(k) + " outside [0, " +
                           std::to_string(n) + "]");
    }
    return log_factorial(n) - log_factorial(k) - log_factorial(n - k);
}

double log_add_exp(double a, double b) {
    if (std::isinf(a) && a < 0.0) return b;
    if (std::isinf(b) && b < 0.0) return a;
    const double hi = a > b ? a : b;
    const double lo = a > b ? b : a;
    return hi + std::log1p(std::exp(lo - hi));
}

int worker_count() {
    if (const char* env = std::getenv("NESS_THREADS")) {
        char* end = nullptr;
        const long v = std::strtol(env, &end, 10);
        if (end != env && *end == '\0' && v > 0) {
            return static_cast<int>(v);
        }
    }
    return omp_get_max_threads();
}

} // namespace ness
