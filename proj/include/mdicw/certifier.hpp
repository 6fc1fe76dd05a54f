#pragma once

#include <cstddef>

#include "mdicw/decoy.hpp"
#include "mdicw/povm.hpp"
#include "mdicw/qubit.hpp"

namespace mdicw {

// Constraint box for the certification: single-photon yield intervals of the
// four test states on the linear POVM coordinates
//   q0 = a1(1+nz), q1 = a1(1-nz), qplus = a1(1+nx), qplusi = a1(1+ny),
// plus the yield interval for the unknown state, bounding t = tr(rho M1).
struct FeasibleRegion {
    YieldInterval q0, q1, qplus, qplusi;
    YieldInterval t;
};

struct SearchConfig {
    int grid_per_axis = 9;          // coarse grid points per box axis
    double refine_tol_bits = 1e-6;  // stop refinement below this improvement
    double lambda_tol = 1e-6;       // bracket width for the lambda search
    double lambda_cap = 1e3;        // |lambda| beyond which the bracket saturates
};

// Which effect the achieving relaxation was routed through.
enum class Labeling { M1, M0 };

const char* to_string(Labeling l);

// Golden-Thompson dual objective
//   -|| sum_i Pi_i exp(-I - lambda*m1) Pi_i ||_inf - lambda*t   (nats),
// computed via the closed-form 2x2 Hermitian eigendecomposition.
// Throws InvalidEffect unless m1 is Hermitian with 0 <= m1 <= I (tol 1e-9).
double dual_objective(const Mat2& m1, double t, double lambda, const CoherenceBasis& basis);

struct DualDetail {
    double bits;             // clamped at 0
    double nats;             // unclamped max over both labelings
    double lambda_star;      // argmax of the achieving labeling
    Labeling labeling;
    double t_used;           // constraint endpoint active at the optimum, on the M1 scale
    bool bracket_saturated;  // lambda search hit the cap while still ascending
    double m1_branch_nats;
    double m0_branch_nats;
};

// Certified lower bound on the relative entropy of coherence for any state
// with tr(rho m1) in t. Maximizes the dual over lambda with the worst
// interval endpoint per sign of lambda, for both outcome labelings (m1 with
// t, and I-m1 with 1-t), takes the larger, converts nats to bits and clamps
// at 0.
DualDetail dual_lower_bound_detail(const Mat2& m1, const ProbInterval& t,
                                   const CoherenceBasis& basis, const SearchConfig& cfg = {});
double dual_lower_bound(const Mat2& m1, const ProbInterval& t, const CoherenceBasis& basis);

// Brute-force primal reference: minimum of rel_entropy_coherence over a dense
// Bloch-ball grid restricted to states with tr(rho m1) in t. Returns +inf
// when no grid state is feasible. Requires grid_per_dim >= 50.
double primal_oracle(const Mat2& m1, const ProbInterval& t, const CoherenceBasis& basis,
                     int grid_per_dim = 51);

struct CertifyDiagnostics {
    std::size_t grid_points_total = 0;
    std::size_t grid_points_feasible = 0;
    std::size_t grid_points_skipped = 0;  // violated POVM feasibility
    int refine_iterations = 0;
    bool lambda_bracket_saturated = false;
};

struct CoherenceCertificate {
    double c_lower_bits;    // certified bits per detected single-photon signal
    double lambda_star;
    Labeling labeling;
    BinaryPovm worst_povm;  // argmin over the feasible region
    double t_worst;
    ProbInterval t_interval;
    CertifyDiagnostics diagnostics;
};

// Worst case of dual_lower_bound over the region: deterministic coarse grid
// over the (q0, q1, q+, q+i) box with POVM-infeasible points skipped,
// followed by local coordinate-descent refinement from the best grid point.
// Ties break lexicographically on the q coordinates, so the result does not
// depend on evaluation order. Throws InfeasibleRegion when every grid point
// violates POVM feasibility; a 0-bit certificate is a valid result.
CoherenceCertificate certify(const FeasibleRegion& region, const CoherenceBasis& basis,
                             const SearchConfig& cfg = {});

}  // namespace mdicw
