#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "mdicw/certifier.hpp"
#include "mdicw/counts.hpp"
#include "mdicw/decoy.hpp"

namespace mdicw {

// Weak-coherent-pulse channel with a Y-basis measurement. proportions are the
// per-state sending fractions in the order {Z0, Z1, XP, YP, RHO} and must sum
// to 1; p_signal splits each state's pulses between signal and decoy.
struct ChannelConfig {
    double eta = 0.0486;       // end-to-end transmittance
    double p_d = 1e-6;         // dark-count click probability per gate
    double mu = 0.529;         // signal mean photon number
    double nu = 0.057;         // decoy mean photon number
    double n_total = 3.2e7;    // total pulses
    std::array<double, 5> proportions{0.125, 0.125, 0.125, 0.125, 0.5};
    double p_signal = 0.5;
    double n_sigma = 3.89;
    double error_rate = 0.0;   // outcome-flip probability (0 = ideal)

    void validate() const;
    double proportion_of(StateLabel s) const;
};

// Click probability for one pulse of the given intensity:
//   1 - (1 - p_d) exp(-eta * intensity * overlap),
// with overlap 1/2 for Z0/Z1/XP, 1 for YP/RHO/RHO_PLUS_I, 0 for RHO_MINUS_I.
// A nonzero error_rate mixes toward the complementary outcome,
// p' = (1-e) p + e (1-p). Intensity 0 reduces to p_d.
double channel_prob(StateLabel s, double intensity, const ChannelConfig& cfg);

// Deterministic expected-value counts: sent = round(N eta_j p_s) (signal) or
// round(N eta_j (1-p_s)) (decoy), ones = round(sent * channel_prob).
CountsTable simulate_counts(const ChannelConfig& cfg);

// Binomially sampled counts; bit-reproducible across runs for a fixed seed.
CountsTable simulate_counts_sampled(const ChannelConfig& cfg, std::uint64_t seed);

struct IntensityOptimum {
    double mu, nu;
    double objective;             // sum of squared decoy yield-interval widths
    std::size_t grid_feasible;    // grid points satisfying interval ordering
    std::size_t grid_total;
};

// Minimizes the sum over the four test states of the squared single-photon
// yield-interval widths on a deterministic (mu, nu) grid
// (default 200x200 on [0.01,1] x [0.005,0.5]) with local refinement.
// Infeasible points (interval ordering violated, or nu >= mu) are skipped;
// throws OptimizationFailed when every point is infeasible.
IntensityOptimum optimize_intensities(const ChannelConfig& cfg, int grid_mu = 200,
                                      int grid_nu = 200);

// Same objective built from the signal-only bounds; optimizes mu alone.
double optimize_intensity_nondecoy(const ChannelConfig& cfg, int grid_mu = 400);

enum class SweepMethod { Decoy, NonDecoy };

const char* to_string(SweepMethod m);

struct SweepPoint {
    double loss_db;
    double c_lower_bits;  // NaN when flagged
    SweepMethod method;
    bool ok;              // false when certification failed at this point
    double mu, nu;        // intensities used (nu = 0 for non-decoy analysis)
};

// Certified bound versus channel loss. At each point eta = 10^(-dB/10); the
// signal/decoy intensities are optimized per point with the decoy objective
// (unless optimize_per_point is false, in which case cfg.mu/cfg.nu are used)
// and both analysis methods consume that same simulated data, so the decoy
// curve dominates the non-decoy curve pointwise. Failed points are emitted
// as flagged NaN rows.
std::vector<SweepPoint> loss_sweep(const ChannelConfig& cfg, double start_db, double stop_db,
                                   double step_db, SweepMethod method,
                                   const SearchConfig& search = {},
                                   bool optimize_per_point = true);

struct AttackReport {
    double p;               // ground-state weight of the incoherent input
    double intended_value;  // tr(delta W0) under the honest witness
    double attacked_value;  // tr(delta W1) after the basis rotation
    bool falsely_witnessed; // attacked_value < 0 for an incoherent state
};

// Basis-rotating attack on the conventional witness W0 = (I + sx + sz)/2:
// rotating the sx measurement onto sz turns it into W1 = I/2 + sz, whose
// expectation 2p - 1/2 goes negative for p < 1/4.
AttackReport attack_demo(double p);

}  // namespace mdicw
