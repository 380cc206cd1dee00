#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <vector>

#include "gibbslab/hamiltonian.hpp"
#include "gibbslab/incremental_group.hpp"
#include "gibbslab/pauli.hpp"

namespace gibbslab {

// One activation bit per Hamiltonian term.
struct Config {
    BitVec bits;

    Config() = default;
    explicit Config(std::size_t n_terms) : bits(n_terms) {}
    bool operator==(const Config&) const = default;
};

struct EnsembleParams {
    double beta = 1.0;
    long n_samples = 1000;
    long burn_in = 200;
    long thinning = 2;
    std::uint64_t seed = 1;
};

struct Estimate {
    double mean = 0.0;
    double stderr_ = 0.0;
    long n = 0;
};

// Per-configuration factor prod_X [(1-s_X) e^{-beta} + s_X (1-e^{-beta})].
double log_config_weight(const HamiltonianSpec& h, const Config& c, double beta);
double config_weight(const HamiltonianSpec& h, const Config& c, double beta);

// 2^k ground-space dimension of the active sub-Hamiltonian, or zero when
// the active group is inconsistent (-identity is generated).
struct GroundDegeneracy {
    bool zero = false;
    int log2 = 0;

    double value() const { return zero ? 0.0 : std::ldexp(1.0, log2); }
};
GroundDegeneracy ground_degeneracy(const HamiltonianSpec& h, const Config& c);

// Group generated by the active terms (static echelon form).
PauliGroup active_group(const HamiltonianSpec& h, const Config& c);

// Restriction of a spec to its active terms.
HamiltonianSpec restrict_to_active(const HamiltonianSpec& h, const Config& c);

// Single-term heat-bath chain over configurations with stationary law
// Pr(c) proportional to degeneracy(c) * weight(c). Deterministic in seed.
class GibbsChain {
public:
    GibbsChain(const HamiltonianSpec& h, double beta, std::uint64_t seed);

    // One sweep over all terms. `allow_activation` is consulted before a
    // 0 -> 1 flip; `on_flip` observes applied flips (term, now_active).
    void sweep(const std::function<bool(int)>& allow_activation = {},
               const std::function<void(int, bool)>& on_flip = {});

    const Config& config() const { return cfg_; }
    const IncrementalPauliGroup& group() const { return grp_; }
    double beta() const { return beta_; }

private:
    const HamiltonianSpec& h_;
    double beta_;
    double odds_ratio_;  // (1 - e^-beta) / e^-beta
    IncrementalPauliGroup grp_;
    Config cfg_;
    std::mt19937_64 rng_;

    double uniform();
};

// Draws n_samples configurations (after burn-in, one per `thinning`
// sweeps) and hands each to the callback.
void sample(const HamiltonianSpec& h, const EnsembleParams& p,
            const std::function<void(const Config&)>& fn);
std::vector<Config> sample_vector(const HamiltonianSpec& h, const EnsembleParams& p);

// Monte Carlo thermal expectation of a Hermitian Pauli via the member
// sign of the active group; standard error from 32 batch means.
Estimate expectation_mc(const HamiltonianSpec& h, const EnsembleParams& p, const Pauli& q);

// Exact enumeration over all configurations (term count <= 20).
double expectation_exact(const HamiltonianSpec& h, double beta, const Pauli& q);

// Exact when the term count is at most 20, otherwise Monte Carlo.
Estimate expectation(const HamiltonianSpec& h, const EnsembleParams& p, const Pauli& q);

// Sum over configurations of degeneracy * weight = tr exp(-beta H).
double partition_sum_exact(const HamiltonianSpec& h, double beta);

// Free energy -T ln tr exp(-beta HL) of the +/-1-coupling form
// HL = -sum_X g_X, via tr exp(-beta HL) = e^{beta m} tr exp(-2 beta H).
double sector_free_energy_exact(const HamiltonianSpec& h, double beta);
// Ground-sector estimate -m - T k ln 2 with 2^k the ground degeneracy.
double sector_free_energy_ground(const HamiltonianSpec& h, double beta);

// Global phase of ux uz ux^dag uz^dag: -1 iff the pair anticommutes.
int wilson_commutator_phase(const Pauli& ux, const Pauli& uz);

}  // namespace gibbslab
