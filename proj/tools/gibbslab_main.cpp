// Experiment driver: seeded, manifest-emitting runs for every subsystem.
//
// Exit codes: 0 success, 1 validation error, 2 internal invariant failure.

#include <chrono>
#include <iostream>
#include <map>
#include <random>
#include <set>
#include <thread>

#include "CLI11.hpp"
#include "gibbslab/disentangler.hpp"
#include "gibbslab/holes.hpp"
#include "gibbslab/io.hpp"
#include "gibbslab/structure.hpp"
#include "gibbslab/thermal.hpp"
#include "gibbslab/toymodel.hpp"
#include "json.hpp"

using namespace gibbslab;
using nlohmann::json;

namespace {

const char* kSchema = R"(CSV schemas
sample:    expectations.csv  observable,beta,mean,stderr,n_samples,seed
holes:     holes.csv         beta,block_size,empirical_rate,stderr,analytic_bound,n_samples,seed
           block_bound.csv         beta,r_int,eps,volume,l_solved,l_literal_formula
wilson:    wilson.csv        observable,beta,mean,stderr,n_samples,seed
toymodel:  trace.csv         sweep,energy,fraction_zero
           scan.csv          temperature,field,fraction_zero_mean,stderr,histogram_bimodality
           hysteresis.csv    temperature,fraction_zero_up,fraction_zero_down
disentangle: report.json     per-run {valid, rounds, range, final_term_histogram}
           circuit.txt       round bond_id target_vertex generator-string
structure: report.json       per-instance block dims, factor dims, residuals
degeneracy: report.json      eps, n_supports, regime_warning
Every run writes manifest.json (subcommand, parameters, seed, artifact
version, output files, wall clock) next to its outputs.
)";

struct RunContext {
    std::string out_dir = ".";
    std::map<std::string, std::string> params;
    std::vector<std::string> outputs;
    std::chrono::steady_clock::time_point t0 = std::chrono::steady_clock::now();

    std::string path(const std::string& name) const { return out_dir + "/" + name; }
    void note(const std::string& key, const std::string& value) { params[key] = value; }
    void wrote(const std::string& name) { outputs.push_back(name); }
    void finish(const std::string& subcommand, std::uint64_t seed) {
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        write_manifest(path("manifest.json"), subcommand, params, seed, outputs, secs);
    }
};

Estimate pool_chains(const std::vector<Estimate>& per_chain) {
    if (per_chain.size() == 1) return per_chain.front();
    Estimate out;
    double m = 0;
    long n = 0;
    for (const auto& e : per_chain) {
        m += e.mean;
        n += e.n;
    }
    m /= double(per_chain.size());
    double var = 0;
    for (const auto& e : per_chain) var += (e.mean - m) * (e.mean - m);
    var /= double(per_chain.size() - 1);
    out.mean = m;
    out.n = n;
    out.stderr_ = std::sqrt(var / double(per_chain.size()));
    return out;
}

// Expectation over independent seeded chains, merged in chain order.
Estimate chain_expectation(const HamiltonianSpec& h, const EnsembleParams& base, int chains,
                           const Pauli& q) {
    if (h.n_terms() <= 20 || chains <= 1) return expectation(h, base, q);
    std::vector<Estimate> results{std::size_t(chains)};
    std::vector<std::thread> workers;
    for (int c = 0; c < chains; ++c)
        workers.emplace_back([&, c] {
            EnsembleParams p = base;
            p.seed = base.seed + std::uint64_t(c);
            results[std::size_t(c)] = expectation_mc(h, p, q);
        });
    for (auto& w : workers) w.join();
    return pool_chains(results);
}

int run_sample(int d, int L, double beta, long samples, long burn_in, long thinning,
               std::uint64_t seed, bool exact, int chains, std::vector<std::string> observables,
               RunContext& ctx) {
    auto lat = std::make_shared<Lattice>(d, L);
    HamiltonianSpec h = toric_code(lat);
    if (exact && h.n_terms() > 20)
        throw std::invalid_argument("exact mode requires at most 20 terms");

    if (observables.empty()) {
        for (const auto& t : h.terms) {
            if (t.kind == TermKind::star) {
                observables.push_back(to_string(t.op));
                break;
            }
        }
        for (const auto& t : h.terms) {
            if (t.kind == TermKind::plaquette) {
                observables.push_back(to_string(t.op));
                break;
            }
        }
        if (d == 2) {
            observables.push_back(to_string(logical_string_x(*lat, 0)));
            observables.push_back(
                to_string(mul(logical_string_x(*lat, 0), logical_string_x(*lat, L / 2))));
        }
    }

    CsvWriter csv({"observable", "beta", "mean", "stderr", "n_samples", "seed"});
    EnsembleParams p{beta, samples, burn_in, thinning, seed};
    for (const auto& obs : observables) {
        Pauli q = pauli_from_string(obs);
        if (int(q.n_qubits()) != h.n_qubits)
            throw std::invalid_argument("observable width does not match the lattice: " + obs);
        Estimate e;
        if (exact) {
            e.mean = expectation_exact(h, beta, q);
            e.n = long(1) << h.n_terms();
        } else {
            e = chain_expectation(h, p, chains, q);
        }
        csv.add_row({to_string(q), format_double(beta), format_double(e.mean),
                     format_double(e.stderr_), std::to_string(e.n), std::to_string(seed)});
    }
    csv.write(ctx.path("expectations.csv"));
    ctx.wrote("expectations.csv");
    std::cout << csv.str();
    return 0;
}

int run_holes(int d, int L, std::vector<double> betas, std::vector<int> blocks, long samples,
              long burn_in, long thinning, std::uint64_t seed, double eps, double volume,
              RunContext& ctx) {
    auto lat = std::make_shared<Lattice>(d, L);
    HamiltonianSpec h = toric_code(lat);
    CsvWriter csv({"beta", "block_size", "empirical_rate", "stderr", "analytic_bound",
                   "n_samples", "seed"});
    CsvWriter lb({"beta", "r_int", "eps", "volume", "l_solved", "l_literal_formula"});
    for (double beta : betas) {
        for (int block : blocks) {
            EnsembleParams p{beta, samples, burn_in, thinning, seed};
            InvalidRate r = invalid_rate(h, p, block);
            csv.add_row({format_double(beta), std::to_string(block),
                         format_double(r.empirical.mean), format_double(r.empirical.stderr_),
                         format_double(r.bound), std::to_string(r.empirical.n),
                         std::to_string(seed)});
        }
        int solved = solve_block_size(beta, double(h.r_int), eps, volume);
        lb.add_row({format_double(beta), std::to_string(h.r_int), format_double(eps),
                    format_double(volume), std::to_string(solved),
                    format_double(literal_block_size_formula(beta, double(h.r_int), eps,
                                                             volume))});
    }
    csv.write(ctx.path("holes.csv"));
    ctx.wrote("holes.csv");
    lb.write(ctx.path("block_bound.csv"));
    ctx.wrote("block_bound.csv");
    std::cout << csv.str();
    return 0;
}

int run_disentangle(int d, int L, double beta, int block, long samples, std::uint64_t seed,
                    int radius, bool emit_circuit, RunContext& ctx) {
    auto lat = std::make_shared<Lattice>(d, L);
    HamiltonianSpec h = toric_code(lat);
    EnsembleParams p{beta, samples, 300, 3, seed};
    json runs = json::array();
    long classical = 0;
    bool first = true;
    sample_valid(h, p, block, radius, [&](const Config& c) {
        DisentangleResult r = run(h, c, block, radius);
        WitnessReport w = state_witness(h, c, r.circuit, r.final_spec);
        if (w.valid && classicality_check(r.final_spec)) ++classical;
        json jr;
        jr["valid"] = w.valid;
        jr["rounds"] = w.rounds;
        jr["range"] = w.range;
        jr["final_term_histogram"] = w.final_term_histogram;
        runs.push_back(jr);
        if (first && emit_circuit) {
            std::string text;
            for (const auto& g : r.circuit.gates)
                text += std::to_string(g.round) + " " + std::to_string(g.bond) + " " +
                        std::to_string(g.target_vertex) + " " + to_string(g.generator) + "\n";
            write_text_file(ctx.path("circuit.txt"), text);
            ctx.wrote("circuit.txt");
        }
        first = false;
    });
    json report;
    report["lattice"] = {{"d", d}, {"L", L}};
    report["beta"] = beta;
    report["block"] = block;
    report["n_samples"] = samples;
    report["n_classical"] = classical;
    report["runs"] = runs;
    write_text_file(ctx.path("report.json"), report.dump(2) + "\n");
    ctx.wrote("report.json");
    std::cout << "classical finals: " << classical << "/" << samples << "\n";
    return classical == samples ? 0 : 2;
}

int run_structure(int instances, std::uint64_t seed, bool emit_fixtures, RunContext& ctx) {
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> gauss(0.0, 1.0);
    auto random_unitary = [&](long n) {
        Mat m(n, n);
        for (long i = 0; i < n; ++i)
            for (long j = 0; j < n; ++j) m(i, j) = std::complex<double>(gauss(rng), gauss(rng));
        Eigen::HouseholderQR<Mat> qr(m);
        return Mat(qr.householderQ());
    };
    auto random_hermitian = [&](long n) {
        Mat m(n, n);
        for (long i = 0; i < n; ++i)
            for (long j = 0; j < n; ++j) m(i, j) = std::complex<double>(gauss(rng), gauss(rng));
        return Mat(0.5 * (m + Mat(m.adjoint())));
    };
    auto kron = [](const Mat& a, const Mat& b) {
        Mat out(a.rows() * b.rows(), a.cols() * b.cols());
        for (long i = 0; i < a.rows(); ++i)
            for (long j = 0; j < a.cols(); ++j)
                out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
        return out;
    };

    json report = json::array();
    for (int inst = 0; inst < instances; ++inst) {
        int n_neighbors = 1 + int(rng() % 2);
        int n_blocks = 1 + int(rng() % 3);
        std::vector<std::vector<int>> factor_dims;
        std::vector<int> inner_dims;
        int dim = 0;
        for (int b = 0; b < n_blocks; ++b) {
            std::vector<int> fd;
            int block_dim = 1;
            for (int c = 0; c < n_neighbors; ++c) {
                int f = 1 + int(rng() % 3);
                fd.push_back(f);
                block_dim *= f;
            }
            int inner = 1 + int(rng() % 2);
            block_dim *= inner;
            factor_dims.push_back(fd);
            inner_dims.push_back(inner);
            dim += block_dim;
        }
        Mat scramble = random_unitary(dim);
        std::vector<std::vector<Mat>> gens{std::size_t(n_neighbors)};
        for (int c = 0; c < n_neighbors; ++c) {
            for (int g = 0; g < 2; ++g) {
                Mat op = Mat::Zero(dim, dim);
                long off = 0;
                for (int b = 0; b < n_blocks; ++b) {
                    Mat blkop = Mat::Identity(1, 1);
                    for (int cc = 0; cc < n_neighbors; ++cc) {
                        long fd = factor_dims[std::size_t(b)][std::size_t(cc)];
                        blkop = kron(blkop, cc == c ? random_hermitian(fd)
                                                    : Mat(Mat::Identity(fd, fd)));
                    }
                    long inner = inner_dims[std::size_t(b)];
                    blkop = kron(blkop, Mat(Mat::Identity(inner, inner)));
                    op.block(off, off, blkop.rows(), blkop.rows()) = blkop;
                    off += blkop.rows();
                }
                gens[std::size_t(c)].push_back(scramble * op * scramble.adjoint());
            }
        }
        BlockDecomposition dec = decompose_region(gens, seed + std::uint64_t(inst) * 131);
        json jb = json::array();
        for (const auto& blk : dec.blocks)
            jb.push_back({{"block_dim", blk.block_dim},
                          {"factor_dims", blk.factor_dims},
                          {"inner_dim", blk.inner_dim}});
        json ji;
        ji["instance"] = inst;
        ji["dim"] = dim;
        ji["constructed_blocks"] = n_blocks;
        ji["recovered_blocks"] = dec.blocks.size();
        ji["blocks"] = jb;
        ji["max_residual"] = dec.max_residual;
        ji["recovered_count_matches"] = int(dec.blocks.size()) == n_blocks;
        report.push_back(ji);
        if (emit_fixtures && inst == 0) {
            for (std::size_t c = 0; c < gens.size(); ++c)
                for (std::size_t g = 0; g < gens[c].size(); ++g) {
                    std::string name = "fixture_n" + std::to_string(c) + "_g" +
                                       std::to_string(g) + ".txt";
                    save_matrix(ctx.path(name), gens[c][g]);
                    ctx.wrote(name);
                }
        }
    }
    write_text_file(ctx.path("report.json"), report.dump(2) + "\n");
    ctx.wrote("report.json");
    std::cout << "decomposed " << instances << " instances\n";
    return 0;
}

int run_degeneracy(int d, int L, int l_star, bool counterexample, RunContext& ctx) {
    json report;
    if (counterexample) {
        long dim = 16;
        Mat p = Mat::Zero(dim, dim);
        p(0, 0) = 1.0;
        p(dim - 1, dim - 1) = 1.0;
        double eps = degeneracy_eps_dense(p, 4, {{0}, {1}, {2}, {3}});
        report["mode"] = "two-product-state counterexample";
        report["eps"] = eps;
    } else {
        auto lat = std::make_shared<Lattice>(d, L);
        HamiltonianSpec h = toric_code(lat);
        Config all(h.n_terms());
        for (std::size_t t = 0; t < h.n_terms(); ++t) all.bits.set(t, true);
        PauliGroup stab = active_group(h, all);
        auto supports = small_supports(*lat, l_star);
        bool warn = 2 * l_star >= L;
        if (warn)
            std::cerr << "warning: support scale reaches half the system size; the"
                         " degeneracy regime assumption is violated\n";
        double eps = degeneracy_eps_stabilizer(stab, h.n_qubits, supports);
        report["mode"] = "stabilizer";
        report["lattice"] = {{"d", d}, {"L", L}};
        report["l_star"] = l_star;
        report["n_supports"] = supports.size();
        report["regime_warning"] = warn;
        report["eps"] = eps;
    }
    write_text_file(ctx.path("report.json"), report.dump(2) + "\n");
    ctx.wrote("report.json");
    std::cout << report.dump(2) << "\n";
    return 0;
}

int run_toymodel(int d, int L, double coupling, double field, double beta, long sweeps,
                 long burn_in, std::uint64_t seed, bool do_trace, std::vector<double> temps,
                 bool two_phase, RunContext& ctx) {
    ToyParams base;
    base.d = d;
    base.L = L;
    base.coupling = coupling;
    base.field = field;
    base.beta = beta;
    base.sweeps = sweeps;
    base.burn_in = burn_in;
    base.seed = seed;

    if (do_trace) {
        auto trace = metropolis_run(base, 0);
        CsvWriter csv({"sweep", "energy", "fraction_zero"});
        for (std::size_t i = 0; i < trace.size(); ++i)
            csv.add_row({std::to_string(i), format_double(trace[i].energy),
                         format_double(trace[i].fraction_zero)});
        csv.write(ctx.path("trace.csv"));
        ctx.wrote("trace.csv");
    }

    if (!temps.empty()) {
        CsvWriter scan(
            {"temperature", "field", "fraction_zero_mean", "stderr", "histogram_bimodality"});
        for (double t : temps) {
            if (t <= 0) throw std::invalid_argument("toymodel: temperatures must be positive");
            ToyParams p = base;
            p.beta = 1.0 / t;
            auto up = metropolis_run(p, 0);
            ToyParams p2 = p;
            p2.seed = p.seed + 7777;
            auto down = metropolis_run(p2, 1);
            std::vector<double> f, e;
            for (const auto& pt : up) {
                f.push_back(pt.fraction_zero);
                e.push_back(pt.energy);
            }
            for (const auto& pt : down) {
                f.push_back(pt.fraction_zero);
                e.push_back(pt.energy);
            }
            double mean = 0;
            for (double x : f) mean += x;
            mean /= double(f.size());
            std::size_t nb = std::min<std::size_t>(32, f.size());
            std::size_t per = f.size() / nb;
            double var = 0;
            for (std::size_t b = 0; b < nb; ++b) {
                double m = 0;
                for (std::size_t i = b * per; i < (b + 1) * per; ++i) m += f[i];
                m /= double(per);
                var += (m - mean) * (m - mean);
            }
            if (nb > 1) var /= double(nb - 1);
            scan.add_row({format_double(t), format_double(field), format_double(mean),
                          format_double(std::sqrt(var / double(nb))),
                          format_double(bimodality_coefficient(e))});
        }
        scan.write(ctx.path("scan.csv"));
        ctx.wrote("scan.csv");

        HysteresisResult hyst = hysteresis_scan(base, temps);
        CsvWriter hcsv({"temperature", "fraction_zero_up", "fraction_zero_down"});
        for (const auto& pt : hyst.points)
            hcsv.add_row({format_double(pt.temperature), format_double(pt.fraction_zero_up),
                          format_double(pt.fraction_zero_down)});
        hcsv.write(ctx.path("hysteresis.csv"));
        ctx.wrote("hysteresis.csv");
        std::cout << "hysteresis loop area: " << hyst.loop_area << "\n";
    }

    if (two_phase) {
        HamiltonianSpec sector = toric_code(std::make_shared<Lattice>(2, 2));
        auto provider = [&](double b) { return sector_free_energy_exact(sector, b); };
        double t = beta > 0 ? 1.0 / beta : 1.0;
        TwoPhaseResult r = two_phase_free_energy(base, t, provider);
        json j;
        j["temperature"] = t;
        j["f_zero"] = r.f_zero;
        j["f_twelve"] = r.f_twelve;
        if (r.t_star) j["t_star"] = *r.t_star;
        write_text_file(ctx.path("two_phase.json"), j.dump(2) + "\n");
        ctx.wrote("two_phase.json");
        std::cout << j.dump(2) << "\n";
    }
    return 0;
}

int run_wilson(int d, int L, std::vector<double> betas, long samples, long burn_in,
               long thinning, std::uint64_t seed, int chains, RunContext& ctx) {
    auto lat = std::make_shared<Lattice>(d, L);
    HamiltonianSpec h = toric_code(lat);
    Pauli ux(0), uz(0), ux_shift(0);
    if (d == 2) {
        ux = logical_string_x(*lat, 0);
        uz = logical_string_z(*lat, 0);
        ux_shift = logical_string_x(*lat, L / 2);
    } else if (d == 4) {
        ux = logical_membrane_x(*lat, 0, 1, 0, 0);
        uz = logical_membrane_z(*lat, 0, 1, 0, 0);
        ux_shift = logical_membrane_x(*lat, 0, 1, L / 2, 0);
    } else {
        throw std::invalid_argument("wilson: d must be 2 or 4");
    }
    int phase = wilson_commutator_phase(ux, uz);
    std::cout << "commutator phase: " << phase << "\n";

    Pauli pair = mul(ux_shift, ux);
    CsvWriter csv({"observable", "beta", "mean", "stderr", "n_samples", "seed"});
    csv.add_row({"commutator_phase", "0", format_double(double(phase)), "0", "1",
                 std::to_string(seed)});
    for (double beta : betas) {
        EnsembleParams p{beta, samples, burn_in, thinning, seed};
        Estimate e = chain_expectation(h, p, chains, pair);
        csv.add_row({to_string(pair), format_double(beta), format_double(e.mean),
                     format_double(e.stderr_), std::to_string(e.n), std::to_string(seed)});
    }
    csv.write(ctx.path("wilson.csv"));
    ctx.wrote("wilson.csv");
    std::cout << csv.str();
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"commuting-projector Gibbs state laboratory"};
    app.set_config("--config", "", "INI key=value file; command-line flags take precedence");
    bool schema = false;
    app.add_flag("--schema", schema, "print output column documentation and exit");
    app.require_subcommand(0, 1);

    std::string out_dir = ".";
    std::uint64_t seed = 1;
    int d = 2, L = 4, block = 2, chains = 1, radius = 0, l_star = 1, instances = 8;
    double beta = 1.0;
    long samples = 1000, burn_in = 200, thinning = 2, sweeps = 1000;
    bool exact = false, emit_circuit = false, emit_fixtures = false, counterexample = false;
    bool do_trace = false, two_phase = false;
    double coupling = 1.0, field = -0.5, eps = 0.01, volume = 64.0;
    std::vector<double> betas{0.25, 0.5, 1.0};
    std::vector<int> blocks{2};
    std::vector<double> temps;
    std::vector<std::string> observables;

    auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("--out-dir", out_dir, "output directory");
        cmd->add_option("--seed", seed, "random seed");
        cmd->fallthrough();  // lets --config appear after the subcommand name
    };

    CLI::App* sample_cmd = app.add_subcommand("sample", "thermal expectations of Pauli strings");
    add_common(sample_cmd);
    sample_cmd->add_option("--d", d, "lattice dimension (2, 3 or 4)")->required();
    sample_cmd->add_option("--L", L, "linear size")->required();
    sample_cmd->add_option("--beta", beta, "inverse temperature")->required();
    sample_cmd->add_option("--samples", samples, "number of samples");
    sample_cmd->add_option("--burn-in", burn_in, "burn-in sweeps");
    sample_cmd->add_option("--thinning", thinning, "sweeps between samples");
    sample_cmd->add_option("--chains", chains, "independent chains");
    sample_cmd->add_flag("--exact", exact, "exact enumeration (term count <= 20)");
    sample_cmd->add_option("--obs", observables, "observable Pauli strings");

    CLI::App* holes_cmd = app.add_subcommand("holes", "hole statistics and the block-size bound");
    add_common(holes_cmd);
    holes_cmd->add_option("--d", d, "lattice dimension")->required();
    holes_cmd->add_option("--L", L, "linear size")->required();
    holes_cmd->add_option("--betas", betas, "inverse temperatures");
    holes_cmd->add_option("--blocks", blocks, "block sizes (must divide L)");
    holes_cmd->add_option("--samples", samples, "number of samples");
    holes_cmd->add_option("--burn-in", burn_in, "burn-in sweeps");
    holes_cmd->add_option("--thinning", thinning, "sweeps between samples");
    holes_cmd->add_option("--eps", eps, "target error for the block-size solver");
    holes_cmd->add_option("--volume", volume, "volume factor for the block-size solver");

    CLI::App* dis_cmd = app.add_subcommand("disentangle", "circuit construction on valid samples");
    add_common(dis_cmd);
    dis_cmd->add_option("--d", d, "lattice dimension (2 or 3)")->required();
    dis_cmd->add_option("--L", L, "linear size")->required();
    dis_cmd->add_option("--beta", beta, "inverse temperature")->required();
    dis_cmd->add_option("--block", block, "block size (must divide L)")->required();
    dis_cmd->add_option("--samples", samples, "number of valid samples")->required();
    dis_cmd->add_option("--radius", radius, "hole radius (0 = default r_int + 1)");
    dis_cmd->add_flag("--emit-circuit", emit_circuit, "write the first run's circuit");

    CLI::App* str_cmd = app.add_subcommand("structure", "block decomposition demonstrations");
    add_common(str_cmd);
    str_cmd->add_option("--instances", instances, "number of random instances");
    str_cmd->add_flag("--emit-fixtures", emit_fixtures, "write generator matrices");

    CLI::App* deg_cmd = app.add_subcommand("degeneracy", "topological degeneracy checker");
    add_common(deg_cmd);
    deg_cmd->add_option("--d", d, "lattice dimension");
    deg_cmd->add_option("--L", L, "linear size");
    deg_cmd->add_option("--l-star", l_star, "support scale");
    deg_cmd->add_flag("--counterexample", counterexample,
                      "run the two-product-state dense demonstration");

    CLI::App* toy_cmd = app.add_subcommand("toymodel", "three-state site model");
    add_common(toy_cmd);
    toy_cmd->add_option("--d", d, "lattice dimension (1..4)");
    toy_cmd->add_option("--L", L, "linear size");
    toy_cmd->add_option("--J", coupling, "bond coupling");
    toy_cmd->add_option("--field", field, "diagonal field on 0 sites");
    toy_cmd->add_option("--beta", beta, "inverse temperature");
    toy_cmd->add_option("--sweeps", sweeps, "measured sweeps");
    toy_cmd->add_option("--burn-in", burn_in, "burn-in sweeps");
    toy_cmd->add_flag("--trace", do_trace, "write a per-sweep trace");
    toy_cmd->add_option("--temps", temps, "temperature grid for the phase scan");
    toy_cmd->add_flag("--two-phase", two_phase, "write the two-phase free-energy comparison");

    CLI::App* wil_cmd = app.add_subcommand("wilson", "commutator phase and pair expectations");
    add_common(wil_cmd);
    wil_cmd->add_option("--d", d, "lattice dimension (2 or 4)")->required();
    wil_cmd->add_option("--L", L, "linear size")->required();
    wil_cmd->add_option("--betas", betas, "inverse temperatures");
    wil_cmd->add_option("--samples", samples, "number of samples");
    wil_cmd->add_option("--burn-in", burn_in, "burn-in sweeps");
    wil_cmd->add_option("--thinning", thinning, "sweeps between samples");
    wil_cmd->add_option("--chains", chains, "independent chains");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 1;  // usage problems are validation errors
    }
    if (schema) {
        std::cout << kSchema;
        return 0;
    }
    if (app.get_subcommands().empty()) {
        std::cerr << app.help();
        return 1;
    }

    RunContext ctx;
    ctx.out_dir = out_dir;
    auto note_all = [&](CLI::App* cmd) {
        for (const auto* opt : cmd->get_options()) {
            if (opt->count()) {
                std::string joined;
                for (const auto& r : opt->results()) joined += (joined.empty() ? "" : ",") + r;
                ctx.note(opt->get_name(), joined);
            } else if (!opt->get_default_str().empty()) {
                ctx.note(opt->get_name(), opt->get_default_str());
            }
        }
    };

    try {
        CLI::App* cmd = app.get_subcommands().front();
        note_all(cmd);
        int rc = 0;
        if (cmd == sample_cmd)
            rc = run_sample(d, L, beta, samples, burn_in, thinning, seed, exact, chains,
                            observables, ctx);
        else if (cmd == holes_cmd)
            rc = run_holes(d, L, betas, blocks, samples, burn_in, thinning, seed, eps, volume,
                           ctx);
        else if (cmd == dis_cmd)
            rc = run_disentangle(d, L, beta, block, samples, seed, radius, emit_circuit, ctx);
        else if (cmd == str_cmd)
            rc = run_structure(instances, seed, emit_fixtures, ctx);
        else if (cmd == deg_cmd)
            rc = run_degeneracy(d, L, l_star, counterexample, ctx);
        else if (cmd == toy_cmd)
            rc = run_toymodel(d, L, coupling, field, beta, sweeps, burn_in, seed, do_trace,
                              temps, two_phase, ctx);
        else if (cmd == wil_cmd)
            rc = run_wilson(d, L, betas, samples, burn_in, thinning, seed, chains, ctx);
        ctx.finish(cmd->get_name(), seed);
        return rc;
    } catch (const std::invalid_argument& err) {
        std::cerr << "error: " << err.what() << "\n";
        return 1;
    } catch (const std::domain_error& err) {
        std::cerr << "error: " << err.what() << "\n";
        return 2;
    } catch (const std::exception& err) {
        std::cerr << "internal error: " << err.what() << "\n";
        return 2;
    }
}
