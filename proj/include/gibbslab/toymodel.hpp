#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

namespace gibbslab {

// Three-state site model: bonds reward 0-0 pairs and {1,2}-{1,2} pairs
// equally, a diagonal field counts the 0 sites.
struct ToyParams {
    double coupling = 1.0;  // J > 0
    double field = 0.0;     // h, multiplies the number of 0 sites
    int d = 4;
    int L = 4;
    double beta = 1.0;
    long sweeps = 1000;
    long burn_in = 100;
    std::uint64_t seed = 1;
};

struct SiteConfig {
    std::vector<std::uint8_t> values;  // 0, 1 or 2 per site
};

class ToyLattice {
public:
    ToyLattice(int d, int L);
    int dim() const { return d_; }
    int size() const { return L_; }
    int n_sites() const { return n_sites_; }
    int n_bonds() const { return d_ * n_sites_; }
    const std::vector<int>& neighbors(int site) const { return adj_[std::size_t(site)]; }
    // Neighbors in the positive axis directions (each bond counted once).
    const std::vector<int>& forward_neighbors(int site) const {
        return fwd_[std::size_t(site)];
    }

private:
    int d_, L_, n_sites_;
    std::vector<std::vector<int>> adj_, fwd_;
};

double toy_energy(const ToyLattice& lat, const SiteConfig& cfg, const ToyParams& p);

struct ToyTracePoint {
    double energy = 0.0;
    double fraction_zero = 0.0;
};

// Seed-deterministic single-site Metropolis updates; the incremental
// energy is cross-checked against a full recomputation every 100 sweeps.
// Returns one trace point per sweep (after burn-in) and leaves the final
// state in cfg.
std::vector<ToyTracePoint> metropolis_run(const ToyLattice& lat, const ToyParams& p,
                                          SiteConfig& cfg);
// Convenience entry starting from the uniform start_value state.
std::vector<ToyTracePoint> metropolis_run(const ToyParams& p, int start_value);

struct TwoPhaseResult {
    double f_zero = 0.0;    // polarized phase, no entropy
    double f_twelve = 0.0;  // {1,2} mixture with ln 2 entropy per site
    std::optional<double> t_star;  // crossing temperature, if bracketed
};

// Idealized free-energy comparison of the two candidate phases. The
// plaquette-sector free energy at inverse temperature beta is injected.
TwoPhaseResult two_phase_free_energy(const ToyParams& p, double temperature,
                                     const std::function<double(double)>& sector_free_energy);

// Sarle's bimodality coefficient; > 5/9 suggests more than one mode.
double bimodality_coefficient(const std::vector<double>& xs);

struct HysteresisPoint {
    double temperature = 0.0;
    double fraction_zero_up = 0.0;    // heating branch, started from all-0
    double fraction_zero_down = 0.0;  // cooling branch, started from all-1
};

struct HysteresisResult {
    std::vector<HysteresisPoint> points;
    double loop_area = 0.0;
};

// Warm-started temperature sweeps in both directions.
HysteresisResult hysteresis_scan(const ToyParams& base, const std::vector<double>& temperatures);

}  // namespace gibbslab
