#pragma once

#include <array>
#include <string>
#include <vector>

#include "mdicw/mat2.hpp"

namespace mdicw {

// Two-outcome qubit POVM in the {a1, n} parametrization:
//   M1 = a1 (I + n.sigma),  M0 = I - M1.
// Feasibility (checked to 1e-9): 0 <= a1 <= 1, |n| <= 1, a1 (1 + |n|) <= 1.
struct BinaryPovm {
    double a1;
    double nx, ny, nz;

    double n_norm() const;
    Mat2 m1() const;
    Mat2 m0() const;
};

struct PovmViolation {
    std::string constraint;  // human-readable, e.g. "|n| <= 1"
    double margin;           // amount by which it is exceeded
};

struct PovmReport {
    std::vector<PovmViolation> violations;
    bool valid() const { return violations.empty(); }
};

// Lists each violated invariant with its margin; empty report iff valid.
PovmReport validate_povm(const BinaryPovm& m);

// Exact four-equation reconstruction from the test-state click probabilities
//   p0 = a1(1+nz), p1 = a1(1-nz), pplus = a1(1+nx), pplusi = a1(1+ny).
// Throws DegeneratePovm when a1 = 0 with a nonzero numerator, and
// InfeasibleProbabilities when the result violates POVM feasibility.
BinaryPovm povm_from_probs(double p0, double p1, double pplus, double pplusi);

// Forward map; round-trips with povm_from_probs to 1e-12.
std::array<double, 4> probs_from_povm(const BinaryPovm& m);

}  // namespace mdicw
