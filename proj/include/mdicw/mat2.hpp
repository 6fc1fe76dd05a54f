#pragma once

#include <array>
#include <complex>
#include <utility>

namespace mdicw {

using cplx = std::complex<double>;

// Dense 2x2 complex matrix, row-major [[a, b], [c, d]].
struct Mat2 {
    cplx a{0.0}, b{0.0}, c{0.0}, d{0.0};

    static Mat2 identity() { return {1.0, 0.0, 0.0, 1.0}; }
    static Mat2 zero() { return {}; }
    static Mat2 pauli_x() { return {0.0, 1.0, 1.0, 0.0}; }
    static Mat2 pauli_y() { return {0.0, cplx(0.0, -1.0), cplx(0.0, 1.0), 0.0}; }
    static Mat2 pauli_z() { return {1.0, 0.0, 0.0, -1.0}; }

    cplx trace() const { return a + d; }
    Mat2 adjoint() const { return {std::conj(a), std::conj(c), std::conj(b), std::conj(d)}; }

    friend Mat2 operator+(const Mat2& x, const Mat2& y) {
        return {x.a + y.a, x.b + y.b, x.c + y.c, x.d + y.d};
    }
    friend Mat2 operator-(const Mat2& x, const Mat2& y) {
        return {x.a - y.a, x.b - y.b, x.c - y.c, x.d - y.d};
    }
    friend Mat2 operator*(const Mat2& x, const Mat2& y) {
        return {x.a * y.a + x.b * y.c, x.a * y.b + x.b * y.d,
                x.c * y.a + x.d * y.c, x.c * y.b + x.d * y.d};
    }
    friend Mat2 operator*(cplx s, const Mat2& x) { return {s * x.a, s * x.b, s * x.c, s * x.d}; }
    friend Mat2 operator*(double s, const Mat2& x) { return cplx(s) * x; }
};

// Coefficients of M = c0*I + cx*sx + cy*sy + cz*sz for a Hermitian M.
// herm_defect measures how far the input was from Hermitian (0 for exact).
struct PauliCoeffs {
    double c0, cx, cy, cz;
    double herm_defect;
    double vec_norm() const;
};

PauliCoeffs pauli_decompose(const Mat2& m);
Mat2 pauli_compose(double c0, double cx, double cy, double cz);

// Frobenius norm of (m - m^dagger); 0 iff Hermitian.
double hermiticity_defect(const Mat2& m);

// Eigenvalues of a Hermitian 2x2 matrix in closed form, ascending.
std::pair<double, double> herm_eigenvalues(const Mat2& m);

double max_abs_entry(const Mat2& m);

}  // namespace mdicw
