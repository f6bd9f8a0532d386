#include "regretforge/minimize.hpp"

#include <cmath>
#include <stdexcept>

namespace regretforge {

namespace {

double checked(const std::function<double(double)>& f, double x) {
    double v = f(x);
    if (std::isnan(v)) {
        throw std::domain_error("objective returned NaN at x = " + std::to_string(x));
    }
    return v;
}

}  // namespace

ScalarMinimum minimize_1d(const std::function<double(double)>& f, double lo, double hi,
                          double tol, std::span<const double> candidates) {
    if (!(lo <= hi)) throw std::invalid_argument("minimize_1d needs lo <= hi");
    if (!(tol > 0.0)) throw std::invalid_argument("minimize_1d needs tol > 0");

    ScalarMinimum best{lo, checked(f, lo)};
    auto consider = [&](double x) {
        double v = checked(f, x);
        if (v < best.value) best = {x, v};
    };
    consider(hi);

    if (hi - lo > tol) {
        constexpr double inv_phi = 0.6180339887498949;
        double a = lo, b = hi;
        double x1 = b - inv_phi * (b - a);
        double x2 = a + inv_phi * (b - a);
        double f1 = checked(f, x1);
        double f2 = checked(f, x2);
        while (b - a > tol) {
            if (f1 <= f2) {
                b = x2;
                x2 = x1;
                f2 = f1;
                x1 = b - inv_phi * (b - a);
                f1 = checked(f, x1);
            } else {
                a = x1;
                x1 = x2;
                f1 = f2;
                x2 = a + inv_phi * (b - a);
                f2 = checked(f, x2);
            }
        }
        consider(0.5 * (a + b));
    }

    for (double cand : candidates) {
        if (cand >= lo && cand <= hi) consider(cand);
    }
    return best;
}

}  // namespace regretforge
