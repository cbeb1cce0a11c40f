#include "moyal/metaplectic.hpp"

#include <cmath>

namespace moyal {

MetaplecticGenerator metaplectic_generator_from_name(const std::string& name) {
    if (name == "J") return MetaplecticGenerator::J;
    if (name == "B1") return MetaplecticGenerator::B1;
    if (name == "B2") return MetaplecticGenerator::B2;
    if (name == "N1") return MetaplecticGenerator::N1;
    if (name == "N2") return MetaplecticGenerator::N2;
    throw Error("unknown metaplectic generator: " + name);
}

const char* metaplecticGeneratorNames[] = {"J", "B1", "B2", "N1", "N2"};

const char* metaplectic_generator_name(MetaplecticGenerator g) {
    return metaplecticGeneratorNames[static_cast<int>(g)];
}

double MetaplecticMatrix::determinant() const {
    const auto& m = entries;
    return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
           m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
           m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
}

MetaplecticMatrix metaplectic_matrix(MetaplecticGenerator g, double param, double hbar) {
    MetaplecticMatrix m{g, param, identity3()};
    const double h = param / 2.0;
    switch (g) {
        case MetaplecticGenerator::J:
            m.entries[0][0] = std::cos(h);
            m.entries[0][1] = std::sin(h);
            m.entries[1][0] = -std::sin(h);
            m.entries[1][1] = std::cos(h);
            break;
        case MetaplecticGenerator::B1:
            m.entries[0][0] = std::exp(h);
            m.entries[1][1] = std::exp(-h);
            break;
        case MetaplecticGenerator::B2:
            m.entries[0][0] = std::cosh(h);
            m.entries[0][1] = -std::sinh(h);
            m.entries[1][0] = -std::sinh(h);
            m.entries[1][1] = std::cosh(h);
            break;
        case MetaplecticGenerator::N1:
            m.entries[1][2] = -param * hbar;
            break;
        case MetaplecticGenerator::N2:
            m.entries[0][2] = param * hbar;
            break;
    }
    return m;
}

std::array<std::array<Coefficient, 3>, 3> metaplectic_generator_matrix(MetaplecticGenerator g,
                                                                       const RegistryPtr& reg) {
    const Coefficient zero = Coefficient::zero(reg);
    const Coefficient half = Coefficient::constant(reg, GaussianRational(1, 2));
    const Coefficient hbar = Coefficient::parameter(reg, "hbar");
    std::array<std::array<Coefficient, 3>, 3> m{{{zero, zero, zero},
                                                 {zero, zero, zero},
                                                 {zero, zero, zero}}};
    switch (g) {
        case MetaplecticGenerator::J:
            m[0][1] = half;
            m[1][0] = -half;
            break;
        case MetaplecticGenerator::B1:
            m[0][0] = half;
            m[1][1] = -half;
            break;
        case MetaplecticGenerator::B2:
            m[0][1] = -half;
            m[1][0] = -half;
            break;
        case MetaplecticGenerator::N1:
            m[1][2] = -hbar;
            break;
        case MetaplecticGenerator::N2:
            m[0][2] = hbar;
            break;
    }
    return m;
}

Matrix3 identity3() {
    Matrix3 m{};
    for (int i = 0; i < 3; ++i) m[i][i] = 1.0;
    return m;
}

Matrix3 matmul3(const Matrix3& a, const Matrix3& b) {
    Matrix3 r{};
    for (int i = 0; i < 3; ++i)
        for (int k = 0; k < 3; ++k)
            for (int j = 0; j < 3; ++j) r[i][j] += a[i][k] * b[k][j];
    return r;
}

Matrix3 expm3(const Matrix3& a) {
    double norm = 0.0;
    for (const auto& row : a)
        for (double v : row) norm = std::max(norm, std::abs(v));

    int squarings = 0;
    Matrix3 scaled = a;
    while (norm > 0.25) {
        for (auto& row : scaled)
            for (double& v : row) v /= 2.0;
        norm /= 2.0;
        ++squarings;
    }

    Matrix3 result = identity3();
    Matrix3 term = identity3();
    for (int k = 1; k <= 24; ++k) {
        term = matmul3(term, scaled);
        for (auto& row : term)
            for (double& v : row) v /= k;
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) result[i][j] += term[i][j];
    }
    for (int k = 0; k < squarings; ++k) result = matmul3(result, result);
    return result;
}

double max_abs_diff(const Matrix3& a, const Matrix3& b) {
    double d = 0.0;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) d = std::max(d, std::abs(a[i][j] - b[i][j]));
    return d;
}

}  // namespace moyal
