#pragma once

#include "mdicw/counts.hpp"

namespace mdicw {

// Closed interval of probabilities, 0 <= lo <= hi <= 1.
struct ProbInterval {
    double lo, hi;

    ProbInterval(double lo, double hi);
    static ProbInterval point(double p) { return {p, p}; }
    double width() const { return hi - lo; }
};

// Mean photon numbers of the signal (mu) and weak decoy (nu) states plus the
// dark-count click probability per gate.
struct IntensityConfig {
    double mu;
    double nu;
    double p_d;

    // Requires 0 < nu <= 0.9*mu, mu > 0, 0 <= p_d < 1.
    void validate() const;
};

// Gaussian quantile multiplier for finite-size fluctuations.
struct FluctuationConfig {
    double n_sigma = 0.0;

    void validate() const;
};

// Interval on the single-photon click probability p1(1|j) of one state.
struct YieldInterval {
    StateLabel state;
    double lo, hi;

    double width() const { return hi - lo; }
};

// Counts with +-n_sigma*sqrt(ones) fluctuation, clamped to [0,1]:
//   [ (ones - n_sigma*sqrt(ones))/sent , (ones + n_sigma*sqrt(ones))/sent ].
ProbInterval gaussian_interval(const CountsRecord& r, double n_sigma);

// Same fluctuation rule for a real-valued expected detection number
// M = p*trials (used by the simulator; no integer rounding).
ProbInterval expected_prob_interval(double p, double trials, double n_sigma);

// Vacuum + weak decoy bounds on the single-photon yield:
//   lo = clamp0( mu/(mu*nu - nu^2) * [ p_nu.lo e^nu - p_mu.hi e^mu nu^2/mu^2
//                                      - (mu^2 - nu^2)/mu^2 * p_d ] )
//   hi = clamp1( p_nu.hi / (nu e^-nu) )
// Throws InfeasibleIntervals if lo > hi after clamping (inconsistent data).
YieldInterval single_photon_bounds_decoy(StateLabel state, const ProbInterval& p_mu,
                                         const ProbInterval& p_nu, const IntensityConfig& cfg);

// Signal-only fallback:
//   lo = clamp0( (p_mu.lo - e^-mu p_d - (1 - e^-mu - mu e^-mu)) / (mu e^-mu) )
//   hi = clamp1( p_mu.hi / (mu e^-mu) )
// Uses only cfg.mu and cfg.p_d; throws InvalidIntensities when mu <= 0.
YieldInterval single_photon_bounds_nondecoy(StateLabel state, const ProbInterval& p_mu,
                                            const IntensityConfig& cfg);

// gaussian_interval applied to the vacuum record. Consumers wanting a
// conservative certificate should take the hi endpoint as p_d.
ProbInterval dark_count_interval(const CountsRecord& vacuum, double n_sigma);

}  // namespace mdicw
