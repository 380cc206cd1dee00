#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "gibbslab/disentangler.hpp"
#include "gibbslab/holes.hpp"
#include "gibbslab/io.hpp"
#include "gibbslab/structure.hpp"
#include "gibbslab/thermal.hpp"
#include "gibbslab/toymodel.hpp"

namespace py = pybind11;
using namespace gibbslab;

namespace {

Config config_from_string(const HamiltonianSpec& h, const std::string& bits) {
    if (bits.size() != h.n_terms())
        throw std::invalid_argument("configuration length must equal the term count");
    Config c(h.n_terms());
    for (std::size_t i = 0; i < bits.size(); ++i) c.bits.set(i, bits[i] == '1');
    return c;
}

std::string config_to_string(const Config& c) {
    std::string out(c.bits.n_bits, '0');
    for (std::size_t i = 0; i < c.bits.n_bits; ++i)
        if (c.bits.get(i)) out[i] = '1';
    return out;
}

}  // namespace

PYBIND11_MODULE(_gibbslab, m) {
    m.doc() = "commuting-projector Gibbs state laboratory";
    m.attr("__version__") = kArtifactVersion;

    py::class_<Pauli>(m, "Pauli")
        .def(py::init([](const std::string& s) { return pauli_from_string(s); }))
        .def_property_readonly("n_qubits", &Pauli::n_qubits)
        .def("__str__", [](const Pauli& p) { return to_string(p); })
        .def("__repr__", [](const Pauli& p) { return "Pauli('" + to_string(p) + "')"; })
        .def("__eq__", [](const Pauli& a, const Pauli& b) { return a == b; })
        .def("__mul__", [](const Pauli& a, const Pauli& b) { return mul(a, b); })
        .def("commutes", [](const Pauli& a, const Pauli& b) { return commutes(a, b); })
        .def("is_hermitian", [](const Pauli& p) { return is_hermitian(p); })
        .def("conjugate_by_rotation",
             [](const Pauli& p, const Pauli& q) { return conjugate_by_rotation(p, q); },
             py::arg("q"), "conjugation of q by exp(i pi/4 self)");

    py::class_<Lattice, std::shared_ptr<Lattice>>(m, "Lattice")
        .def(py::init<int, int>(), py::arg("d"), py::arg("L"))
        .def_property_readonly("d", &Lattice::dim)
        .def_property_readonly("L", &Lattice::size)
        .def_property_readonly("n_qubits", &Lattice::n_qubits)
        .def_property_readonly("n_vertices", &Lattice::n_vertices)
        .def("n_cells", &Lattice::n_cells, py::arg("dim"));

    py::class_<HamiltonianSpec>(m, "HamiltonianSpec")
        .def_readonly("n_qubits", &HamiltonianSpec::n_qubits)
        .def_readonly("r_int", &HamiltonianSpec::r_int)
        .def_property_readonly("n_terms",
                               [](const HamiltonianSpec& h) { return h.n_terms(); })
        .def("term", [](const HamiltonianSpec& h, std::size_t i) { return h.terms.at(i).op; })
        .def("term_kind",
             [](const HamiltonianSpec& h, std::size_t i) {
                 return to_string(h.terms.at(i).kind);
             })
        .def("all_active", [](const HamiltonianSpec& h) {
            Config c(h.n_terms());
            for (std::size_t t = 0; t < h.n_terms(); ++t) c.bits.set(t, true);
            return config_to_string(c);
        });

    m.def("toric_code",
          [](const std::shared_ptr<Lattice>& lat) { return toric_code(lat); },
          py::arg("lattice"));
    m.def("logical_string_x", &logical_string_x, py::arg("lattice"), py::arg("offset"));
    m.def("logical_string_z", &logical_string_z, py::arg("lattice"), py::arg("offset"));
    m.def("logical_membrane_x", &logical_membrane_x, py::arg("lattice"), py::arg("axis_a"),
          py::arg("axis_b"), py::arg("off_a"), py::arg("off_b"));
    m.def("logical_membrane_z", &logical_membrane_z, py::arg("lattice"), py::arg("axis_a"),
          py::arg("axis_b"), py::arg("off_c"), py::arg("off_d"));
    m.def("wilson_commutator_phase", &wilson_commutator_phase, py::arg("ux"), py::arg("uz"));

    m.def("config_weight",
          [](const HamiltonianSpec& h, const std::string& bits, double beta) {
              return config_weight(h, config_from_string(h, bits), beta);
          },
          py::arg("spec"), py::arg("config"), py::arg("beta"));
    m.def("ground_degeneracy",
          [](const HamiltonianSpec& h, const std::string& bits) {
              return ground_degeneracy(h, config_from_string(h, bits)).value();
          },
          py::arg("spec"), py::arg("config"));
    m.def("partition_sum_exact", &partition_sum_exact, py::arg("spec"), py::arg("beta"));
    m.def("expectation_exact", &expectation_exact, py::arg("spec"), py::arg("beta"),
          py::arg("observable"));
    m.def(
        "expectation",
        [](const HamiltonianSpec& h, const Pauli& q, double beta, long samples, long burn_in,
           long thinning, std::uint64_t seed) {
            EnsembleParams p{beta, samples, burn_in, thinning, seed};
            Estimate e = expectation(h, p, q);
            return py::make_tuple(e.mean, e.stderr_, e.n);
        },
        py::arg("spec"), py::arg("observable"), py::arg("beta"), py::arg("samples") = 1000,
        py::arg("burn_in") = 200, py::arg("thinning") = 2, py::arg("seed") = 1,
        "(mean, stderr, n); exact enumeration when the term count is small");
    m.def(
        "sample",
        [](const HamiltonianSpec& h, double beta, long samples, long burn_in, long thinning,
           std::uint64_t seed) {
            EnsembleParams p{beta, samples, burn_in, thinning, seed};
            std::vector<std::string> out;
            sample(h, p, [&](const Config& c) { out.push_back(config_to_string(c)); });
            return out;
        },
        py::arg("spec"), py::arg("beta"), py::arg("samples") = 100, py::arg("burn_in") = 200,
        py::arg("thinning") = 2, py::arg("seed") = 1);

    m.def(
        "find_holes",
        [](const HamiltonianSpec& h, const std::string& bits, int radius) {
            std::vector<py::tuple> out;
            for (const Hole& hole : find_holes(h, config_from_string(h, bits), radius))
                out.push_back(py::make_tuple(hole.center.dim, hole.center.id, hole.radius));
            return out;
        },
        py::arg("spec"), py::arg("config"), py::arg("radius"));
    m.def(
        "classify_valid",
        [](const HamiltonianSpec& h, const std::string& bits, int block_size, int radius) {
            return classify(h, config_from_string(h, bits), block_size, radius).valid;
        },
        py::arg("spec"), py::arg("config"), py::arg("block_size"), py::arg("radius") = 0);
    m.def("solve_block_size", &solve_block_size, py::arg("beta"), py::arg("r_int"),
          py::arg("eps"), py::arg("volume"));
    m.def("hole_free_block_bound", &hole_free_block_bound, py::arg("beta"), py::arg("r_int"),
          py::arg("block_size"));
    m.def(
        "sample_valid",
        [](const HamiltonianSpec& h, double beta, int block_size, long samples, long burn_in,
           long thinning, std::uint64_t seed, int radius) {
            EnsembleParams p{beta, samples, burn_in, thinning, seed};
            std::vector<std::string> out;
            sample_valid(h, p, block_size, radius,
                         [&](const Config& c) { out.push_back(config_to_string(c)); });
            return out;
        },
        py::arg("spec"), py::arg("beta"), py::arg("block_size"), py::arg("samples") = 100,
        py::arg("burn_in") = 200, py::arg("thinning") = 2, py::arg("seed") = 1,
        py::arg("radius") = 0);

    m.def(
        "disentangle",
        [](const HamiltonianSpec& h, const std::string& bits, int block_size, int radius) {
            Config c = config_from_string(h, bits);
            DisentangleResult r = run(h, c, block_size, radius);
            WitnessReport w = state_witness(h, c, r.circuit, r.final_spec);
            py::dict out;
            out["classical"] = classicality_check(r.final_spec);
            out["valid"] = w.valid;
            out["rounds"] = w.rounds;
            out["range"] = w.range;
            out["n_gates"] = r.circuit.gates.size();
            out["final_term_histogram"] = w.final_term_histogram;
            std::vector<py::tuple> gates;
            for (const auto& g : r.circuit.gates)
                gates.push_back(py::make_tuple(g.round, g.bond, g.target_vertex,
                                               to_string(g.generator)));
            out["gates"] = gates;
            return out;
        },
        py::arg("spec"), py::arg("config"), py::arg("block_size"), py::arg("radius") = 0);

    m.def("operator_schmidt",
          [](const Mat& h_ab, int dim_a, int dim_b) {
              std::vector<py::tuple> out;
              for (const auto& t : operator_schmidt(h_ab, dim_a, dim_b))
                  out.push_back(py::make_tuple(t.left, t.right));
              return out;
          },
          py::arg("h_ab"), py::arg("dim_a"), py::arg("dim_b"));
    m.def(
        "decompose_region",
        [](const std::vector<std::vector<Mat>>& gens, std::uint64_t seed) {
            BlockDecomposition dec = decompose_region(gens, seed);
            std::vector<py::dict> blocks;
            for (const auto& blk : dec.blocks) {
                py::dict jb;
                jb["block_dim"] = blk.block_dim;
                jb["factor_dims"] = blk.factor_dims;
                jb["inner_dim"] = blk.inner_dim;
                jb["basis"] = blk.basis;
                blocks.push_back(jb);
            }
            return blocks;
        },
        py::arg("generators_per_neighbor"), py::arg("seed") = 1);
    m.def(
        "degeneracy_eps",
        [](int d, int L, int l_star) {
            auto lat = std::make_shared<Lattice>(d, L);
            HamiltonianSpec h = toric_code(lat);
            Config c(h.n_terms());
            for (std::size_t t = 0; t < h.n_terms(); ++t) c.bits.set(t, true);
            PauliGroup stab = active_group(h, c);
            return degeneracy_eps_stabilizer(stab, h.n_qubits, small_supports(*lat, l_star));
        },
        py::arg("d"), py::arg("L"), py::arg("l_star"));

    py::class_<ToyParams>(m, "ToyParams")
        .def(py::init<>())
        .def_readwrite("coupling", &ToyParams::coupling)
        .def_readwrite("field", &ToyParams::field)
        .def_readwrite("d", &ToyParams::d)
        .def_readwrite("L", &ToyParams::L)
        .def_readwrite("beta", &ToyParams::beta)
        .def_readwrite("sweeps", &ToyParams::sweeps)
        .def_readwrite("burn_in", &ToyParams::burn_in)
        .def_readwrite("seed", &ToyParams::seed);
    m.def(
        "toy_metropolis",
        [](const ToyParams& p, int start_value) {
            std::vector<py::tuple> out;
            for (const auto& pt : metropolis_run(p, start_value))
                out.push_back(py::make_tuple(pt.energy, pt.fraction_zero));
            return out;
        },
        py::arg("params"), py::arg("start_value") = 0);
    m.def("bimodality_coefficient", &bimodality_coefficient, py::arg("samples"));
    m.def(
        "toy_hysteresis",
        [](const ToyParams& p, const std::vector<double>& temps) {
            HysteresisResult r = hysteresis_scan(p, temps);
            std::vector<py::tuple> pts;
            for (const auto& pt : r.points)
                pts.push_back(
                    py::make_tuple(pt.temperature, pt.fraction_zero_up, pt.fraction_zero_down));
            return py::make_tuple(pts, r.loop_area);
        },
        py::arg("params"), py::arg("temperatures"));
    m.def(
        "toy_two_phase",
        [](const ToyParams& p, double temperature) {
            // Desk-scale sector provider: exact free energy of the small code.
            HamiltonianSpec sector = toric_code(std::make_shared<Lattice>(2, 2));
            auto provider = [&](double b) { return sector_free_energy_exact(sector, b); };
            TwoPhaseResult r = two_phase_free_energy(p, temperature, provider);
            py::dict out;
            out["f_zero"] = r.f_zero;
            out["f_twelve"] = r.f_twelve;
            if (r.t_star) out["t_star"] = *r.t_star;
            return out;
        },
        py::arg("params"), py::arg("temperature"));
}
