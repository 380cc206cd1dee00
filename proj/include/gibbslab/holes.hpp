#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "gibbslab/hamiltonian.hpp"
#include "gibbslab/thermal.hpp"

namespace gibbslab {

struct BlockHoleReport {
    bool has_hole = false;
    std::optional<Hole> chosen;
};

struct ValidityReport {
    int block_size = 0;
    int radius = 0;
    std::vector<BlockHoleReport> blocks;
    bool valid = false;
};

// Default hole radius: the smallest integer radius exceeding the
// interaction range.
int default_hole_radius(const HamiltonianSpec& h);

// All cells (of every dimension) whose radius-r ball meets only inactive
// terms. Ordered by anchor coordinate, then cell dimension, then
// direction index. Requires r > r_int.
std::vector<Hole> find_holes(const HamiltonianSpec& h, const Config& c, int radius);

// Per-block hole presence; the chosen hole is the enumeration-first one.
// radius = 0 selects the default.
ValidityReport classify(const HamiltonianSpec& h, const Config& c, int block_size,
                        int radius = 0);

// Probability bound that a block of linear size l has no hole:
// (1 - exp(-(2R)^2 beta))^{(l/R)^2}.
double hole_free_block_bound(double beta, double r_int, int block_size);

// The closed-form block-size expression as printed (negative for eps < 1);
// reported alongside the solved value.
double literal_block_size_formula(double beta, double r_int, double eps, double volume);

// Smallest l such that hole_free_block_bound(beta, r_int, l) <= eps/volume.
int solve_block_size(double beta, double r_int, double eps, double volume);

struct InvalidRate {
    Estimate empirical;
    double bound = 0.0;  // union bound over blocks, clipped at 1
};

// Empirical probability that a Gibbs-sampled configuration is invalid,
// paired with the clipped analytic union bound.
InvalidRate invalid_rate(const HamiltonianSpec& h, const EnsembleParams& p, int block_size,
                         int radius = 0);

// Gibbs sampling conditioned on validity: activations that would destroy
// the last hole of any block are rejected, so the chain explores the
// configurations with at least one hole per block. Starts all-inactive.
void sample_valid(const HamiltonianSpec& h, const EnsembleParams& p, int block_size,
                  int radius, const std::function<void(const Config&)>& fn);
std::vector<Config> sample_valid_vector(const HamiltonianSpec& h, const EnsembleParams& p,
                                        int block_size, int radius = 0);

}  // namespace gibbslab
