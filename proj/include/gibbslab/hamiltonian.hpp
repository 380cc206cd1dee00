#pragma once

#include <memory>
#include <string>
#include <vector>

#include "gibbslab/lattice.hpp"
#include "gibbslab/pauli.hpp"

namespace gibbslab {

enum class TermKind { star, plaquette, field };

std::string to_string(TermKind k);

// One commuting projector (I - g)/2 described by its Pauli g.
struct Term {
    Pauli op;
    std::vector<int> support;  // qubit ids, sorted
    TermKind kind = TermKind::field;
    CellRef cell;  // anchoring cell on the lattice (unused for synthetic terms)
};

// A Hamiltonian that is a sum of commuting unit projectors, one per term.
// Pairwise commutation is checked at construction.
struct HamiltonianSpec {
    std::shared_ptr<const Lattice> lattice;  // null for synthetic fixtures
    int n_qubits = 0;
    std::vector<Term> terms;
    double lambda_a = 1.0;
    double lambda_b = 1.0;
    int r_int = 0;  // max support diameter in the qubit adjacency metric

    std::size_t n_terms() const { return terms.size(); }
};

// Builds a spec, verifying pairwise commutation and computing the
// interaction range from support diameters (lattice specs only).
HamiltonianSpec make_hamiltonian(std::shared_ptr<const Lattice> lat, std::vector<Term> terms,
                                 double lambda_a = 1.0, double lambda_b = 1.0);
HamiltonianSpec make_synthetic_hamiltonian(int n_qubits, std::vector<Term> terms);

// X-type star term for a vertex (d = 2, 3) or an edge (d = 4).
Pauli star_operator(const Lattice& lat, const CellRef& cell);
// Z-type plaquette term for a face (d = 2, 3) or a cube (d = 4).
Pauli plaquette_operator(const Lattice& lat, const CellRef& cell);

// Toric code on the given lattice: stars on every vertex (d = 2, 3) or
// edge (d = 4), plaquettes on every face (d = 2, 3) or cube (d = 4).
HamiltonianSpec toric_code(std::shared_ptr<const Lattice> lat, double lambda_a = 1.0,
                           double lambda_b = 1.0);

// Hermitian rotation generator for a bond and an incident vertex: squares
// to the identity and conjugates the vertex star to +Z on the bond.
Pauli bond_vertex_rotation_generator(const Lattice& lat, int bond, int vertex);

// Nontrivial logical operators on the torus.
// d = 2: an X-type string on the edges crossing a dual cycle and a Z-type
// string on a primal cycle, meeting in exactly one qubit.
Pauli logical_string_x(const Lattice& lat, int transverse_offset);
Pauli logical_string_z(const Lattice& lat, int transverse_offset);
// d = 4: X/Z membranes over faces of a fixed plane orientation; the pair
// with matching orientation crosses in exactly one face.
Pauli logical_membrane_x(const Lattice& lat, int axis_a, int axis_b, int off_a, int off_b);
Pauli logical_membrane_z(const Lattice& lat, int axis_a, int axis_b, int off_c, int off_d);

}  // namespace gibbslab
