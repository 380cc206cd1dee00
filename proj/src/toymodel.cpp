#include "gibbslab/toymodel.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>

namespace gibbslab {

namespace {

int ipow(int b, int e) {
    int r = 1;
    while (e-- > 0) r *= b;
    return r;
}

}  // namespace

ToyLattice::ToyLattice(int d, int L) : d_(d), L_(L) {
    if (d < 1 || d > 4) throw std::invalid_argument("ToyLattice: dimension must be 1..4");
    if (L < 2) throw std::invalid_argument("ToyLattice: size must be at least 2");
    n_sites_ = ipow(L, d);
    adj_.resize(std::size_t(n_sites_));
    fwd_.resize(std::size_t(n_sites_));
    std::vector<int> strides(std::size_t(d), 0);
    for (int a = d - 1, s = 1; a >= 0; --a, s *= L) strides[std::size_t(a)] = s;
    for (int site = 0; site < n_sites_; ++site) {
        for (int a = 0; a < d; ++a) {
            int coord = (site / strides[std::size_t(a)]) % L;
            int up = site + ((coord + 1) % L - coord) * strides[std::size_t(a)];
            int dn = site + ((coord + L - 1) % L - coord) * strides[std::size_t(a)];
            adj_[std::size_t(site)].push_back(up);
            adj_[std::size_t(site)].push_back(dn);
            fwd_[std::size_t(site)].push_back(up);
        }
    }
}

double toy_energy(const ToyLattice& lat, const SiteConfig& cfg, const ToyParams& p) {
    if (int(cfg.values.size()) != lat.n_sites())
        throw std::invalid_argument("toy_energy: configuration size mismatch");
    double e = 0.0;
    for (int site = 0; site < lat.n_sites(); ++site) {
        int v = cfg.values[std::size_t(site)];
        if (v == 0) e += p.field;
        for (int nb : lat.forward_neighbors(site)) {
            int u = cfg.values[std::size_t(nb)];
            if (v == 0 && u == 0) e -= p.coupling;
            if (v != 0 && u != 0) e -= p.coupling;
        }
    }
    return e;
}

std::vector<ToyTracePoint> metropolis_run(const ToyLattice& lat, const ToyParams& p,
                                          SiteConfig& cfg) {
    if (p.beta <= 0) throw std::invalid_argument("metropolis_run: beta must be positive");
    if (int(cfg.values.size()) != lat.n_sites())
        throw std::invalid_argument("metropolis_run: configuration size mismatch");
    std::mt19937_64 rng(p.seed);
    auto uniform = [&]() { return double(rng() >> 11) * 0x1.0p-53; };

    double energy = toy_energy(lat, cfg, p);
    long zero_count = std::count(cfg.values.begin(), cfg.values.end(), std::uint8_t(0));

    std::vector<ToyTracePoint> trace;
    trace.reserve(std::size_t(std::max(long(0), p.sweeps)));
    long total = p.burn_in + p.sweeps;
    for (long sweep = 0; sweep < total; ++sweep) {
        for (int site = 0; site < lat.n_sites(); ++site) {
            int v = cfg.values[std::size_t(site)];
            int w = (v + 1 + int(rng() % 2)) % 3;  // one of the other two values
            int n0 = 0;
            for (int nb : lat.neighbors(site))
                if (cfg.values[std::size_t(nb)] == 0) ++n0;
            int n12 = int(lat.neighbors(site).size()) - n0;
            double before = (v == 0) ? -p.coupling * n0 + p.field : -p.coupling * n12;
            double after = (w == 0) ? -p.coupling * n0 + p.field : -p.coupling * n12;
            double delta = after - before;
            if (delta <= 0 || uniform() < std::exp(-p.beta * delta)) {
                cfg.values[std::size_t(site)] = std::uint8_t(w);
                energy += delta;
                if (v == 0) --zero_count;
                if (w == 0) ++zero_count;
            }
        }
        if (sweep % 100 == 99) {
            double full = toy_energy(lat, cfg, p);
            if (std::abs(full - energy) > 1e-9 * std::max(1.0, std::abs(full)))
                throw std::logic_error("metropolis_run: incremental energy drifted");
            energy = full;
        }
        if (sweep >= p.burn_in)
            trace.push_back({energy, double(zero_count) / double(lat.n_sites())});
    }
    return trace;
}

std::vector<ToyTracePoint> metropolis_run(const ToyParams& p, int start_value) {
    ToyLattice lat(p.d, p.L);
    SiteConfig cfg;
    cfg.values.assign(std::size_t(lat.n_sites()), std::uint8_t(start_value));
    return metropolis_run(lat, p, cfg);
}

TwoPhaseResult two_phase_free_energy(const ToyParams& p, double temperature,
                                     const std::function<double(double)>& sector_free_energy) {
    if (!sector_free_energy)
        throw std::invalid_argument("two_phase_free_energy: missing sector provider");
    ToyLattice lat(p.d, p.L);
    double n = lat.n_sites();
    double bonds = lat.n_bonds();
    double plaquettes = n * double(p.d * (p.d - 1)) / 2.0;

    auto f_zero = [&](double) {
        // All sites 0: every bond satisfied, field paid, plaquette spins
        // polarized one unit each by the single-spin diagonal term.
        return -p.coupling * bonds + p.field * n - plaquettes;
    };
    auto f_twelve = [&](double t) {
        return -p.coupling * bonds - t * n * std::log(2.0) + sector_free_energy(1.0 / t);
    };

    TwoPhaseResult out;
    out.f_zero = f_zero(temperature);
    out.f_twelve = temperature > 0 ? f_twelve(temperature) : -p.coupling * bonds;

    // Crossing temperature by bisection on f_zero - f_twelve.
    double lo = 1e-4, hi = 50.0;
    auto gap = [&](double t) { return f_zero(t) - f_twelve(t); };
    if (gap(lo) < 0 && gap(hi) > 0) {
        for (int it = 0; it < 200; ++it) {
            double mid = 0.5 * (lo + hi);
            (gap(mid) < 0 ? lo : hi) = mid;
        }
        out.t_star = 0.5 * (lo + hi);
    }
    return out;
}

double bimodality_coefficient(const std::vector<double>& xs) {
    double n = double(xs.size());
    if (xs.size() < 4) return 0.0;
    double mean = 0;
    for (double x : xs) mean += x;
    mean /= n;
    double m2 = 0, m3 = 0, m4 = 0;
    for (double x : xs) {
        double d = x - mean;
        m2 += d * d;
        m3 += d * d * d;
        m4 += d * d * d * d;
    }
    m2 /= n;
    m3 /= n;
    m4 /= n;
    if (m2 <= 0) return 0.0;
    double skew = m3 / std::pow(m2, 1.5);
    double kurt = m4 / (m2 * m2);
    double corr = 3.0 * (n - 1) * (n - 1) / ((n - 2) * (n - 3));
    return (skew * skew + 1.0) / (kurt - 3.0 + corr);
}

HysteresisResult hysteresis_scan(const ToyParams& base, const std::vector<double>& temperatures) {
    ToyLattice lat(base.d, base.L);
    std::vector<double> temps = temperatures;
    std::sort(temps.begin(), temps.end());

    auto branch = [&](bool heating) {
        SiteConfig cfg;
        cfg.values.assign(std::size_t(lat.n_sites()), std::uint8_t(heating ? 0 : 1));
        std::vector<double> means;
        for (std::size_t k = 0; k < temps.size(); ++k) {
            double t = heating ? temps[k] : temps[temps.size() - 1 - k];
            ToyParams p = base;
            p.beta = 1.0 / t;
            p.seed = base.seed + 1000 * k + (heating ? 0 : 1);
            auto trace = metropolis_run(lat, p, cfg);  // warm start carried over
            double m = 0;
            for (const auto& pt : trace) m += pt.fraction_zero;
            means.push_back(trace.empty() ? 0.0 : m / double(trace.size()));
        }
        if (!heating) std::reverse(means.begin(), means.end());
        return means;
    };

    std::vector<double> up = branch(true);
    std::vector<double> down = branch(false);

    HysteresisResult out;
    for (std::size_t k = 0; k < temps.size(); ++k)
        out.points.push_back({temps[k], up[k], down[k]});
    for (std::size_t k = 0; k + 1 < temps.size(); ++k) {
        double dt = temps[k + 1] - temps[k];
        out.loop_area +=
            0.5 * dt * (std::abs(up[k] - down[k]) + std::abs(up[k + 1] - down[k + 1]));
    }
    return out;
}

}  // namespace gibbslab
