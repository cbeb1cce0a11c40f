#pragma once

#include <array>

#include "moyal/coefficient.hpp"

namespace moyal {

enum class MetaplecticGenerator { J, B1, B2, N1, N2 };

MetaplecticGenerator metaplectic_generator_from_name(const std::string& name);
const char* metaplectic_generator_name(MetaplecticGenerator g);

using Matrix3 = std::array<std::array<double, 3>, 3>;

/// One-parameter group element acting on the column (q, p, 1): rotation
/// J(theta), squeezes B1(b), B2(b), translations N1(c), N2(c). Trigonometric
/// and hyperbolic entries are doubles; the algebra-level checks elsewhere
/// stay exact.
struct MetaplecticMatrix {
    MetaplecticGenerator generator;
    double param = 0.0;
    Matrix3 entries{};

    double determinant() const;
};

/// The printed group matrices; hbar enters the translation columns.
MetaplecticMatrix metaplectic_matrix(MetaplecticGenerator g, double param, double hbar = 1.0);

/// Exact derivative-at-zero matrix over the coefficient ring (hbar formal):
/// the infinitesimal action on (q, p, 1).
std::array<std::array<Coefficient, 3>, 3> metaplectic_generator_matrix(MetaplecticGenerator g,
                                                                       const RegistryPtr& reg);

Matrix3 matmul3(const Matrix3& a, const Matrix3& b);
Matrix3 identity3();

/// Scaling-and-squaring Taylor exponential; plenty for 3x3 at |param| <= 3.
Matrix3 expm3(const Matrix3& a);

double max_abs_diff(const Matrix3& a, const Matrix3& b);

}  // namespace moyal
