#include "gibbslab/hamiltonian.hpp"

#include <algorithm>
#include <stdexcept>

namespace gibbslab {

std::string to_string(TermKind k) {
    switch (k) {
        case TermKind::star: return "star";
        case TermKind::plaquette: return "plaquette";
        case TermKind::field: return "field";
    }
    return "?";
}

namespace {

std::vector<int> support_of(const Pauli& p) {
    std::vector<int> out;
    for (std::size_t q = 0; q < p.n_qubits(); ++q)
        if (p.x.get(q) || p.z.get(q)) out.push_back(int(q));
    return out;
}

void check_commuting(const std::vector<Term>& terms) {
    for (std::size_t i = 0; i < terms.size(); ++i)
        for (std::size_t j = i + 1; j < terms.size(); ++j)
            if (!commutes(terms[i].op, terms[j].op))
                throw std::invalid_argument("HamiltonianSpec: terms " + std::to_string(i) +
                                            " and " + std::to_string(j) + " do not commute");
}

int support_diameter(const Lattice& lat, const std::vector<int>& support) {
    int diam = 0;
    for (std::size_t i = 0; i < support.size(); ++i)
        for (std::size_t j = i + 1; j < support.size(); ++j) {
            int d = lat.qubit_distance(support[i], support[j], 16);
            if (d < 0) throw std::logic_error("support_diameter: disconnected support");
            diam = std::max(diam, d);
        }
    return diam;
}

}  // namespace

HamiltonianSpec make_hamiltonian(std::shared_ptr<const Lattice> lat, std::vector<Term> terms,
                                 double lambda_a, double lambda_b) {
    if (!lat) throw std::invalid_argument("make_hamiltonian: null lattice");
    HamiltonianSpec h;
    h.lattice = std::move(lat);
    h.n_qubits = h.lattice->n_qubits();
    for (auto& t : terms) {
        if (int(t.op.n_qubits()) != h.n_qubits)
            throw std::invalid_argument("make_hamiltonian: term width mismatch");
        t.support = support_of(t.op);
    }
    check_commuting(terms);
    h.terms = std::move(terms);
    h.lambda_a = lambda_a;
    h.lambda_b = lambda_b;
    for (const auto& t : h.terms)
        h.r_int = std::max(h.r_int, support_diameter(*h.lattice, t.support));
    return h;
}

HamiltonianSpec make_synthetic_hamiltonian(int n_qubits, std::vector<Term> terms) {
    HamiltonianSpec h;
    h.n_qubits = n_qubits;
    for (auto& t : terms) {
        if (int(t.op.n_qubits()) != n_qubits)
            throw std::invalid_argument("make_synthetic_hamiltonian: term width mismatch");
        t.support = support_of(t.op);
    }
    check_commuting(terms);
    h.terms = std::move(terms);
    return h;
}

Pauli star_operator(const Lattice& lat, const CellRef& cell) {
    int want_dim = (lat.dim() == 4) ? 1 : 0;
    if (cell.dim != want_dim) throw std::invalid_argument("star_operator: wrong cell dimension");
    Pauli p(lat.n_qubits());
    for (int q : lat.incident_qubits(cell)) p.x.set(q, true);
    return p;
}

Pauli plaquette_operator(const Lattice& lat, const CellRef& cell) {
    int want_dim = (lat.dim() == 4) ? 3 : 2;
    if (cell.dim != want_dim)
        throw std::invalid_argument("plaquette_operator: wrong cell dimension");
    Pauli p(lat.n_qubits());
    for (int q : lat.incident_qubits(cell)) p.z.set(q, true);
    return p;
}

HamiltonianSpec toric_code(std::shared_ptr<const Lattice> lat, double lambda_a, double lambda_b) {
    if (!lat) throw std::invalid_argument("toric_code: null lattice");
    int star_dim = (lat->dim() == 4) ? 1 : 0;
    int plaq_dim = (lat->dim() == 4) ? 3 : 2;
    std::vector<Term> terms;
    for (int id = 0; id < lat->n_cells(star_dim); ++id) {
        Term t;
        t.cell = {star_dim, id};
        t.op = star_operator(*lat, t.cell);
        t.kind = TermKind::star;
        terms.push_back(std::move(t));
    }
    for (int id = 0; id < lat->n_cells(plaq_dim); ++id) {
        Term t;
        t.cell = {plaq_dim, id};
        t.op = plaquette_operator(*lat, t.cell);
        t.kind = TermKind::plaquette;
        terms.push_back(std::move(t));
    }
    return make_hamiltonian(std::move(lat), std::move(terms), lambda_a, lambda_b);
}

Pauli bond_vertex_rotation_generator(const Lattice& lat, int bond, int vertex) {
    auto ends = lat.edge_endpoints(bond);
    if (ends[0] != vertex && ends[1] != vertex)
        throw std::invalid_argument("rotation generator: bond is not incident to vertex");
    Pauli p(lat.n_qubits());
    for (int q : lat.vertex_edges(vertex)) p.x.set(q, true);
    p.z.set(bond, true);
    p.phase_exp = 1;
    return p;
}

Pauli logical_string_x(const Lattice& lat, int transverse_offset) {
    if (lat.dim() != 2) throw std::invalid_argument("logical_string_x: d = 2 only");
    Pauli p(lat.n_qubits());
    for (int c0 = 0; c0 < lat.size(); ++c0)
        p.x.set(lat.cell_id({c0, transverse_offset % lat.size(), 0, 0}, 1 << 1), true);
    return p;
}

Pauli logical_string_z(const Lattice& lat, int transverse_offset) {
    if (lat.dim() != 2) throw std::invalid_argument("logical_string_z: d = 2 only");
    Pauli p(lat.n_qubits());
    for (int c1 = 0; c1 < lat.size(); ++c1)
        p.z.set(lat.cell_id({transverse_offset % lat.size(), c1, 0, 0}, 1 << 1), true);
    return p;
}

Pauli logical_membrane_x(const Lattice& lat, int axis_a, int axis_b, int off_a, int off_b) {
    if (lat.dim() != 4) throw std::invalid_argument("logical_membrane_x: d = 4 only");
    Pauli p(lat.n_qubits());
    int mask = (1 << axis_a) | (1 << axis_b);
    for (int v = 0; v < lat.n_vertices(); ++v) {
        auto c = lat.vertex_coords(v);
        if (c[axis_a] == off_a && c[axis_b] == off_b) p.x.set(lat.cell_id(c, mask), true);
    }
    return p;
}

Pauli logical_membrane_z(const Lattice& lat, int axis_a, int axis_b, int off_c, int off_d) {
    if (lat.dim() != 4) throw std::invalid_argument("logical_membrane_z: d = 4 only");
    Pauli p(lat.n_qubits());
    int mask = (1 << axis_a) | (1 << axis_b);
    std::vector<int> rest;
    for (int a = 0; a < 4; ++a)
        if (a != axis_a && a != axis_b) rest.push_back(a);
    for (int v = 0; v < lat.n_vertices(); ++v) {
        auto c = lat.vertex_coords(v);
        if (c[rest[0]] == off_c && c[rest[1]] == off_d) p.z.set(lat.cell_id(c, mask), true);
    }
    return p;
}

}  // namespace gibbslab
