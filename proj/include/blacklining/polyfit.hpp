#pragma once

#include <span>
#include <vector>

namespace blacklining {

// Dense polynomial, coefficients in ascending degree (coeffs[j] * x^j).
// Canonical form: trailing zeros trimmed, the zero polynomial is {0}.
// Interior zero coefficients are preserved.
class Polynomial {
public:
    Polynomial() : c_{0.0} {}
    explicit Polynomial(std::vector<double> coeffs_ascending);

    const std::vector<double>& coeffs() const { return c_; }
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    double eval(double x) const;  // Horner

    bool operator==(const Polynomial&) const = default;

private:
    std::vector<double> c_;
};

struct FitResult {
    Polynomial poly;
    double residual_norm = 0.0;  // ||V c - y||_2, for diagnostics
};

enum class Monotonicity { Increasing, Decreasing, Flat, NonMonotonic };

struct MonotonicityVerdict {
    Monotonicity kind = Monotonicity::Flat;
    double min_derivative = 0.0;  // over the scanned grid
    double max_derivative = 0.0;

    bool monotone() const { return kind != Monotonicity::NonMonotonic; }
};

const char* to_string(Monotonicity m);

// Least-squares polynomial fit, solved through a QR decomposition of the
// Vandermonde matrix. Raw normal equations are not used here: at degree 7
// on [0,1] they lose half the available precision (they survive only as an
// independent test oracle at low degree).
FitResult fit_poly(std::span<const double> xs, std::span<const double> ys, int degree);

Polynomial poly_sub(const Polynomial& p, const Polynomial& q);

Polynomial derivative(const Polynomial& p);

// Scans p' on a uniform grid over [a,b], shrunk inward by half a grid step.
// Increasing iff p' >= -eps everywhere, Decreasing iff p' <= eps everywhere,
// Flat iff both, NonMonotonic otherwise.
MonotonicityVerdict monotonic_on(const Polynomial& p, double a, double b,
                                 double eps, int grid_points);

}  // namespace blacklining
