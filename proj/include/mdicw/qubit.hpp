#pragma once

#include "mdicw/mat2.hpp"

namespace mdicw {

// Qubit state as a Bloch vector; the density matrix (I + r.sigma)/2 is
// materialized on demand. Construction rejects |r| > 1 beyond tolerance.
struct QubitState {
    double rx, ry, rz;

    QubitState(double x, double y, double z);

    double bloch_norm() const;

    static QubitState z0() { return {0.0, 0.0, 1.0}; }
    static QubitState z1() { return {0.0, 0.0, -1.0}; }
    static QubitState xp() { return {1.0, 0.0, 0.0}; }
    static QubitState xm() { return {-1.0, 0.0, 0.0}; }
    static QubitState yp() { return {0.0, 1.0, 0.0}; }
    static QubitState ym() { return {0.0, -1.0, 0.0}; }
    static QubitState maximally_mixed() { return {0.0, 0.0, 0.0}; }
};

// Ordered pair of orthonormal projectors Pi0 = (I + u.sigma)/2,
// Pi1 = (I - u.sigma)/2, stored as the unit axis u. Default is the
// computational Z basis.
struct CoherenceBasis {
    double ux, uy, uz;

    static CoherenceBasis z() { return {0.0, 0.0, 1.0}; }
    static CoherenceBasis x() { return {1.0, 0.0, 0.0}; }
    static CoherenceBasis y() { return {0.0, 1.0, 0.0}; }

    // Validates unit norm to 1e-12.
    static CoherenceBasis from_axis(double ux, double uy, double uz);
    // Validates Pi_i^2 = Pi_i, Pi0 + Pi1 = I, Pi0 Pi1 = 0, all to 1e-12.
    static CoherenceBasis from_projectors(const Mat2& pi0, const Mat2& pi1);

    Mat2 pi0() const;
    Mat2 pi1() const;

private:
    CoherenceBasis(double x, double y, double z) : ux(x), uy(y), uz(z) {}
};

// Hermitian observable W = w0*I + w1*sx + w2*sy + w3*sz.
struct Witness {
    double w0, w1, w2, w3;
};

Mat2 state_matrix(const QubitState& s);

// tr(rho * effect). Throws InvalidEffect unless effect is Hermitian with
// 0 <= effect <= I (tolerance 1e-9).
double born_prob(const QubitState& s, const Mat2& effect);

// Kills the Bloch components orthogonal to the basis axis.
QubitState dephase(const QubitState& s, const CoherenceBasis& basis);

// In bits. Eigenvalues in [-1e-12, 0) are clamped to 0; more negative throws.
double von_neumann_entropy(const QubitState& s);

// Relative entropy of coherence S(dephase(s)) - S(s), in bits.
double rel_entropy_coherence(const QubitState& s, const CoherenceBasis& basis);

// w0 + w1*rx + w2*ry + w3*rz.
double witness_expectation(const QubitState& s, const Witness& w);

// -p*log2(p) - (1-p)*log2(1-p), with 0*log(0) = 0.
double binary_entropy_bits(double p);

}  // namespace mdicw
