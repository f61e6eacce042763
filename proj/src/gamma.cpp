#include "entrokit/gamma.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace entrokit {
namespace {

constexpr int kMaxIterations = 500;
constexpr double kTolerance = 1e-14;

// Lower incomplete gamma via its power series, valid and fast for x < s + 1.
double gamma_series(double s, double x) {
    double term = 1.0 / s;
    double sum = term;
    double a = s;
    for (int i = 0; i < kMaxIterations; ++i) {
        a += 1.0;
        term *= x / a;
        sum += term;
        if (std::abs(term) < std::abs(sum) * kTolerance) break;
    }
    return sum * std::exp(-x + s * std::log(x) - std::lgamma(s));
}

// Upper incomplete gamma Q(s, x) via the modified Lentz continued fraction,
// valid for x >= s + 1.
double gamma_continued_fraction(double s, double x) {
    const double tiny = std::numeric_limits<double>::min() / kTolerance;
    double b = x + 1.0 - s;
    double c = 1.0 / tiny;
    double d = 1.0 / b;
    double h = d;
    for (int i = 1; i <= kMaxIterations; ++i) {
        const double an = -static_cast<double>(i) * (static_cast<double>(i) - s);
        b += 2.0;
        d = an * d + b;
        if (std::abs(d) < tiny) d = tiny;
        c = b + an / c;
        if (std::abs(c) < tiny) c = tiny;
        d = 1.0 / d;
        const double delta = d * c;
        h *= delta;
        if (std::abs(delta - 1.0) < kTolerance) break;
    }
    return h * std::exp(-x + s * std::log(x) - std::lgamma(s));
}

}  // namespace

double regularized_lower_incomplete_gamma(double s, double x) {
    if (!(s > 0.0)) throw std::domain_error("shape parameter must be > 0");
    if (!(x >= 0.0)) throw std::domain_error("x must be >= 0");
    if (x == 0.0) return 0.0;
    double p;
    if (x < s + 1.0) {
        p = gamma_series(s, x);
    } else {
        p = 1.0 - gamma_continued_fraction(s, x);
    }
    if (p < 0.0) p = 0.0;
    if (p > 1.0) p = 1.0;
    return p;
}

double chi_squared_p_value(double statistic, int dof) {
    if (!(statistic >= 0.0)) throw std::domain_error("statistic must be >= 0");
    if (dof < 1) throw std::domain_error("dof must be >= 1");
    if (statistic == 0.0) return 1.0;
    const double s = 0.5 * static_cast<double>(dof);
    const double x = 0.5 * statistic;
    if (x < s + 1.0) return 1.0 - gamma_series(s, x);
    return gamma_continued_fraction(s, x);
}

}  // namespace entrokit
