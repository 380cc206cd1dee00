#include "gibbslab/thermal.hpp"

#include <cmath>
#include <stdexcept>

namespace gibbslab {

double log_config_weight(const HamiltonianSpec& h, const Config& c, double beta) {
    if (c.bits.n_bits != h.n_terms())
        throw std::invalid_argument("config_weight: configuration length mismatch");
    if (beta < 0) throw std::invalid_argument("config_weight: beta must be nonnegative");
    std::size_t active = c.bits.popcount();
    std::size_t inactive = h.n_terms() - active;
    // log(1 - e^-beta) computed as log(-expm1(-beta)); -inf at beta = 0.
    double log_on = (active == 0) ? 0.0 : std::log(-std::expm1(-beta));
    return -beta * double(inactive) + log_on * double(active);
}

double config_weight(const HamiltonianSpec& h, const Config& c, double beta) {
    return std::exp(log_config_weight(h, c, beta));
}

PauliGroup active_group(const HamiltonianSpec& h, const Config& c) {
    if (c.bits.n_bits != h.n_terms())
        throw std::invalid_argument("active_group: configuration length mismatch");
    PauliGroup g(h.n_qubits);
    for (std::size_t i = 0; i < h.n_terms(); ++i)
        if (c.bits.get(i)) g.add_generator(h.terms[i].op);
    return g;
}

GroundDegeneracy ground_degeneracy(const HamiltonianSpec& h, const Config& c) {
    PauliGroup g = active_group(h, c);
    if (g.contains_minus_identity()) return {true, 0};
    return {false, h.n_qubits - int(g.rank())};
}

HamiltonianSpec restrict_to_active(const HamiltonianSpec& h, const Config& c) {
    HamiltonianSpec out;
    out.lattice = h.lattice;
    out.n_qubits = h.n_qubits;
    out.lambda_a = h.lambda_a;
    out.lambda_b = h.lambda_b;
    out.r_int = h.r_int;
    for (std::size_t i = 0; i < h.n_terms(); ++i)
        if (c.bits.get(i)) out.terms.push_back(h.terms[i]);
    return out;
}

GibbsChain::GibbsChain(const HamiltonianSpec& h, double beta, std::uint64_t seed)
    : h_(h), beta_(beta), grp_([&] {
          std::vector<Pauli> gens;
          gens.reserve(h.n_terms());
          for (const auto& t : h.terms) gens.push_back(t.op);
          return gens;
      }()),
      cfg_(h.n_terms()), rng_(seed) {
    if (beta <= 0) throw std::invalid_argument("GibbsChain: beta must be positive");
    odds_ratio_ = -std::expm1(-beta) / std::exp(-beta);
}

double GibbsChain::uniform() {
    return double(rng_() >> 11) * 0x1.0p-53;
}

void GibbsChain::sweep(const std::function<bool(int)>& allow_activation,
                       const std::function<void(int, bool)>& on_flip) {
    for (int t = 0; t < int(h_.n_terms()); ++t) {
        if (grp_.active(t)) {
            double z_ratio = grp_.dependent_on_others(t) ? 1.0 : 0.5;
            double odds = odds_ratio_ * z_ratio;
            if (uniform() >= odds / (1.0 + odds)) {
                grp_.deactivate(t);
                cfg_.bits.set(t, false);
                if (on_flip) on_flip(t, false);
            }
        } else {
            auto st = grp_.probe_inactive(t);
            if (st == IncrementalPauliGroup::Status::dependent_minus) continue;
            double z_ratio =
                (st == IncrementalPauliGroup::Status::dependent_plus) ? 1.0 : 0.5;
            double odds = odds_ratio_ * z_ratio;
            if (uniform() < odds / (1.0 + odds)) {
                if (allow_activation && !allow_activation(t)) continue;
                grp_.activate(t);
                cfg_.bits.set(t, true);
                if (on_flip) on_flip(t, true);
            }
        }
    }
}

void sample(const HamiltonianSpec& h, const EnsembleParams& p,
            const std::function<void(const Config&)>& fn) {
    GibbsChain chain(h, p.beta, p.seed);
    for (long i = 0; i < p.burn_in; ++i) chain.sweep();
    for (long s = 0; s < p.n_samples; ++s) {
        for (long i = 0; i < p.thinning; ++i) chain.sweep();
        fn(chain.config());
    }
}

std::vector<Config> sample_vector(const HamiltonianSpec& h, const EnsembleParams& p) {
    std::vector<Config> out;
    out.reserve(std::size_t(p.n_samples));
    sample(h, p, [&](const Config& c) { out.push_back(c); });
    return out;
}

namespace {

Estimate batch_means(const std::vector<double>& xs) {
    Estimate e;
    e.n = long(xs.size());
    if (xs.empty()) return e;
    double sum = 0;
    for (double x : xs) sum += x;
    e.mean = sum / double(xs.size());
    std::size_t nb = std::min<std::size_t>(32, xs.size());
    std::size_t per = xs.size() / nb;
    std::vector<double> bm;
    for (std::size_t b = 0; b < nb; ++b) {
        double s = 0;
        for (std::size_t i = b * per; i < (b + 1) * per; ++i) s += xs[i];
        bm.push_back(s / double(per));
    }
    double m = 0;
    for (double x : bm) m += x;
    m /= double(nb);
    double var = 0;
    for (double x : bm) var += (x - m) * (x - m);
    if (nb > 1) var /= double(nb - 1);
    e.stderr_ = std::sqrt(var / double(nb));
    return e;
}

}  // namespace

Estimate expectation_mc(const HamiltonianSpec& h, const EnsembleParams& p, const Pauli& q) {
    if (!is_hermitian(q)) throw std::invalid_argument("expectation: non-Hermitian observable");
    GibbsChain chain(h, p.beta, p.seed);
    for (long i = 0; i < p.burn_in; ++i) chain.sweep();
    std::vector<double> xs;
    xs.reserve(std::size_t(p.n_samples));
    for (long s = 0; s < p.n_samples; ++s) {
        for (long i = 0; i < p.thinning; ++i) chain.sweep();
        auto sign = chain.group().member(q);
        xs.push_back(sign ? double(*sign) : 0.0);
    }
    return batch_means(xs);
}

namespace {

// Enumerates all configurations of a small spec, calling fn(config, Z*P).
void enumerate_weighted(const HamiltonianSpec& h, double beta,
                        const std::function<void(const Config&, double)>& fn) {
    std::size_t m = h.n_terms();
    if (m > 20)
        throw std::invalid_argument("exact mode requires at most 20 terms");
    double p_off = std::exp(-beta), p_on = -std::expm1(-beta);
    Config c(m);
    for (std::uint64_t word = 0; word < (std::uint64_t(1) << m); ++word) {
        double w = 1.0;
        for (std::size_t t = 0; t < m; ++t) {
            bool on = (word >> t) & 1;
            c.bits.set(t, on);
            w *= on ? p_on : p_off;
        }
        if (w == 0.0) {
            fn(c, 0.0);
            continue;
        }
        fn(c, ground_degeneracy(h, c).value() * w);
    }
}

}  // namespace

double expectation_exact(const HamiltonianSpec& h, double beta, const Pauli& q) {
    if (!is_hermitian(q)) throw std::invalid_argument("expectation: non-Hermitian observable");
    double num = 0, den = 0;
    enumerate_weighted(h, beta, [&](const Config& c, double w) {
        if (w == 0.0) return;
        den += w;
        auto sign = active_group(h, c).member(q);
        if (sign) num += w * double(*sign);
    });
    if (den == 0.0) throw std::domain_error("expectation_exact: vanishing partition sum");
    return num / den;
}

Estimate expectation(const HamiltonianSpec& h, const EnsembleParams& p, const Pauli& q) {
    if (h.n_terms() <= 20) {
        Estimate e;
        e.mean = expectation_exact(h, p.beta, q);
        e.stderr_ = 0.0;
        e.n = long(1) << h.n_terms();
        return e;
    }
    return expectation_mc(h, p, q);
}

double partition_sum_exact(const HamiltonianSpec& h, double beta) {
    double den = 0;
    enumerate_weighted(h, beta, [&](const Config&, double w) { den += w; });
    return den;
}

double sector_free_energy_exact(const HamiltonianSpec& h, double beta) {
    if (beta <= 0) throw std::invalid_argument("sector_free_energy: beta must be positive");
    double z2 = partition_sum_exact(h, 2.0 * beta);
    return -double(h.n_terms()) - std::log(z2) / beta;
}

double sector_free_energy_ground(const HamiltonianSpec& h, double beta) {
    if (beta <= 0) throw std::invalid_argument("sector_free_energy: beta must be positive");
    Config all(h.n_terms());
    for (std::size_t t = 0; t < h.n_terms(); ++t) all.bits.set(t, true);
    GroundDegeneracy g = ground_degeneracy(h, all);
    if (g.zero) throw std::domain_error("sector_free_energy: inconsistent full activation");
    return -double(h.n_terms()) - double(g.log2) * std::log(2.0) / beta;
}

int wilson_commutator_phase(const Pauli& ux, const Pauli& uz) {
    if (!is_hermitian(ux) || !is_hermitian(uz))
        throw std::invalid_argument("wilson_commutator_phase: operators must be Hermitian");
    return commutes(ux, uz) ? 1 : -1;
}

}  // namespace gibbslab
