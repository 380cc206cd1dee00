#pragma once

#include <map>
#include <string>
#include <vector>

#include "gibbslab/hamiltonian.hpp"
#include "gibbslab/holes.hpp"
#include "gibbslab/thermal.hpp"

namespace gibbslab {

// A pi/4 Pauli rotation that moves a free surface across one vertex:
// the generator squares to the identity, anticommutes with the target
// vertex star and conjugates it to +Z on the bond.
struct RotationGate {
    Pauli generator;
    int bond = 0;
    int target_vertex = 0;
    int round = 0;
    int block = 0;
};

struct Circuit {
    std::vector<RotationGate> gates;  // application order; rounds nondecreasing
    int n_rounds = 0;
    int block_size = 0;
    // Locality range: largest per-block unitary support diameter in the
    // periodic L-infinity vertex metric (block unitaries commute).
    int range = 0;
};

// True iff no star is active at any entry's inward vertex and no rotation
// generator of an entry touches a field bond. Throws on non-closed input.
bool is_free_surface(const HamiltonianSpec& h, const OrientedSurface& s);

// Conjugates a restricted Hamiltonian by one gate using the exact
// transformation rules: plaquettes and distant stars unchanged, the
// target star replaced by +Z on the bond. Throws when the free-surface
// precondition for the gate fails.
HamiltonianSpec conjugate_hamiltonian(const HamiltonianSpec& h, const RotationGate& gate);

// True iff every term is diagonal (no X component).
bool classicality_check(const HamiltonianSpec& h);

struct DisentangleResult {
    HamiltonianSpec initial;  // restriction to the active terms
    Circuit circuit;
    HamiltonianSpec final_spec;
};

// Builds and applies the disentangling circuit for a valid configuration:
// one hole per block seeds a free surface that expands block by block
// until every vertex is claimed and every active star is rewritten.
DisentangleResult run(const HamiltonianSpec& h, const Config& c, int block_size,
                      int radius = 0);

// Lower-level driver taking one seed vertex per block; each seed's star
// must be inactive. Used by run() and by small fixtures.
DisentangleResult expand_from_sources(const HamiltonianSpec& h, const Config& c,
                                      int block_size, const std::vector<int>& sources);

struct WitnessReport {
    bool valid = false;       // all checks below passed
    bool all_z = false;       // transported generators have no X part
    bool signs_ok = false;    // transported generators carry +1 signs
    bool matches_final = false;  // transport agrees with the rule-based final terms
    int rounds = 0;
    int range = 0;
    std::map<std::string, int> final_term_histogram;
    std::vector<Pauli> transported;
};

// Conjugates the stabilizer group of the restricted state gate by gate
// (plain Pauli algebra, independent of the transformation rules) and
// checks the outcome against the rule-based final Hamiltonian.
WitnessReport state_witness(const HamiltonianSpec& h, const Config& c, const Circuit& circuit,
                            const HamiltonianSpec& final_spec);

}  // namespace gibbslab
