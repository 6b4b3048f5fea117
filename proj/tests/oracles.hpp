#pragma once

// Test-only reference implementations. They share no code with the library.

#include <cmath>
#include <numbers>

namespace oracle {

/// Maclaurin series in long double: (2/sqrt pi) sum (-1)^k x^(2k+1) / (k! (2k+1)).
inline long double erf_maclaurin(long double x) {
    long double term = x;  // (-1)^k x^(2k+1) / k!
    long double sum = x;
    for (int k = 1; k < 400; ++k) {
        term *= -x * x / k;
        const long double add = term / (2 * k + 1);
        sum += add;
        if (std::fabs(add) < 1e-22L) break;
    }
    return 2.0L / std::sqrt(std::numbers::pi_v<long double>) * sum;
}

/// erfc(x) = (2/sqrt pi) exp(-x^2) integral_0^inf exp(-2xs - s^2) ds for x >= 0,
/// by composite Simpson in long double. The step shrinks as 1/(2x + 1) so the
/// relative error stays near 1e-15, and the range stops once exp(-2xs) < e^-40.
inline long double erfc_quadrature(long double x) {
    const long double h_target = 1e-3L / (2.0L * x + 1.0L);
    const long double L = x > 20.0L / 6.0L ? 20.0L / x : 6.0L;
    int panels = static_cast<int>(std::ceil(L / h_target));
    panels += panels % 2;
    const long double h = L / panels;
    auto f = [x](long double s) { return std::exp(-2.0L * x * s - s * s); };
    long double sum = f(0.0L) + f(L);
    for (int i = 1; i < panels; ++i) sum += (i % 2 ? 4.0L : 2.0L) * f(i * h);
    return 2.0L / std::sqrt(std::numbers::pi_v<long double>) * std::exp(-x * x) * sum * h / 3.0L;
}

inline long double erf(double x) {
    if (std::fabs(x) <= 3.0) return erf_maclaurin(x);
    const long double tail = erfc_quadrature(std::fabs(x));
    return x > 0 ? 1.0L - tail : tail - 1.0L;
}

inline long double erfc(double x) {
    if (x >= 0.5) return erfc_quadrature(x);
    return 1.0L - erf_maclaurin(x);
}

}  // namespace oracle
