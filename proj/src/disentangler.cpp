#include "gibbslab/disentangler.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <stdexcept>

namespace gibbslab {

namespace {

void require_edge_lattice(const HamiltonianSpec& h, const char* who) {
    if (!h.lattice) throw std::invalid_argument(std::string(who) + ": spec has no lattice");
    if (h.lattice->qubit_dim() != 1)
        throw std::invalid_argument(std::string(who) + ": qubits must live on edges (d = 2, 3)");
}

int find_star_at(const HamiltonianSpec& h, int vertex) {
    for (std::size_t i = 0; i < h.n_terms(); ++i)
        if (h.terms[i].kind == TermKind::star && h.terms[i].cell.id == vertex) return int(i);
    return -1;
}

bool field_bond_touches(const HamiltonianSpec& h, const std::vector<int>& edges) {
    for (const auto& t : h.terms) {
        if (t.kind != TermKind::field) continue;
        for (int e : edges)
            if (t.cell.id == e) return true;
    }
    return false;
}

void apply_gate_in_place(HamiltonianSpec& h, const RotationGate& gate) {
    const Lattice& lat = *h.lattice;
    auto ends = lat.edge_endpoints(gate.bond);
    if (ends[0] != gate.target_vertex && ends[1] != gate.target_vertex)
        throw std::invalid_argument("conjugate_hamiltonian: bond not incident to target");
    int inward = (ends[0] == gate.target_vertex) ? ends[1] : ends[0];
    Pauli expected = bond_vertex_rotation_generator(lat, gate.bond, gate.target_vertex);
    if (!(gate.generator == expected))
        throw std::invalid_argument("conjugate_hamiltonian: generator does not match gate");
    if (find_star_at(h, inward) >= 0)
        throw std::domain_error("conjugate_hamiltonian: inward star is still present");
    std::vector<int> reach = lat.vertex_edges(gate.target_vertex);
    if (field_bond_touches(h, reach))
        throw std::domain_error("conjugate_hamiltonian: generator touches a field bond");

    int star = find_star_at(h, gate.target_vertex);
    if (star < 0) return;  // nothing to rewrite; plaquettes and distant stars commute
    Term t;
    t.op = Pauli::single_z(std::size_t(h.n_qubits), std::size_t(gate.bond));
    t.support = {gate.bond};
    t.kind = TermKind::field;
    t.cell = {1, gate.bond};
    h.terms[std::size_t(star)] = std::move(t);
}

}  // namespace

bool is_free_surface(const HamiltonianSpec& h, const OrientedSurface& s) {
    require_edge_lattice(h, "is_free_surface");
    const Lattice& lat = *h.lattice;
    if (!surface_is_closed(lat, s))
        throw std::invalid_argument("is_free_surface: surface is not closed");
    for (const auto& [bond, outward] : s.entries) {
        auto ends = lat.edge_endpoints(bond);
        int inward = (ends[0] == outward) ? ends[1] : ends[0];
        if (find_star_at(h, inward) >= 0) return false;
        if (field_bond_touches(h, lat.vertex_edges(outward))) return false;
    }
    return true;
}

HamiltonianSpec conjugate_hamiltonian(const HamiltonianSpec& h, const RotationGate& gate) {
    require_edge_lattice(h, "conjugate_hamiltonian");
    HamiltonianSpec out = h;
    apply_gate_in_place(out, gate);
    return out;
}

bool classicality_check(const HamiltonianSpec& h) {
    for (const auto& t : h.terms)
        if (t.op.x.any()) return false;
    return true;
}

DisentangleResult expand_from_sources(const HamiltonianSpec& h, const Config& c, int block_size,
                                      const std::vector<int>& sources) {
    require_edge_lattice(h, "disentangler");
    const Lattice& lat = *h.lattice;
    int nb = lat.n_blocks(block_size);
    if (int(sources.size()) != nb)
        throw std::invalid_argument("disentangler: one seed vertex per block required");

    DisentangleResult result;
    result.initial = restrict_to_active(h, c);
    for (const auto& t : result.initial.terms)
        if (t.kind == TermKind::field)
            throw std::invalid_argument("disentangler: initial field set must be empty");

    // Per-block breadth-first order over the block's own vertices.
    struct Visit {
        int vertex;
        int block;
        int parent;  // -1 for seeds
    };
    std::vector<std::vector<Visit>> layers;
    for (int b = 0; b < nb; ++b) {
        std::vector<int> verts = lat.block_vertices(b, block_size);
        if (lat.block_of_vertex(sources[std::size_t(b)], block_size) != b)
            throw std::invalid_argument("disentangler: seed vertex is outside its block");
        std::set<int> inside(verts.begin(), verts.end());
        std::map<int, int> dist;
        dist[sources[std::size_t(b)]] = 0;
        std::deque<int> queue{sources[std::size_t(b)]};
        while (!queue.empty()) {
            int v = queue.front();
            queue.pop_front();
            for (int e : lat.vertex_edges(v)) {
                auto ends = lat.edge_endpoints(e);
                int w = (ends[0] == v) ? ends[1] : ends[0];
                if (!inside.count(w) || dist.count(w)) continue;
                dist[w] = dist.at(v) + 1;
                queue.push_back(w);
            }
        }
        if (dist.size() != inside.size())
            throw std::logic_error("disentangler: block interior is not connected");
        for (const auto& [v, dv] : dist) {
            if (int(layers.size()) <= dv) layers.resize(std::size_t(dv) + 1);
            int parent = -1;
            if (dv > 0) {
                for (int e : lat.vertex_edges(v)) {
                    auto ends = lat.edge_endpoints(e);
                    int w = (ends[0] == v) ? ends[1] : ends[0];
                    if (inside.count(w) && dist.at(w) == dv - 1 && (parent < 0 || w < parent))
                        parent = w;
                }
            }
            layers[std::size_t(dv)].push_back({v, b, parent});
        }
    }
    for (auto& layer : layers)
        std::sort(layer.begin(), layer.end(),
                  [](const Visit& a, const Visit& b) { return a.vertex < b.vertex; });

    HamiltonianSpec current = result.initial;
    Circuit& circuit = result.circuit;
    circuit.block_size = block_size;

    std::vector<std::set<int>> enclosed{std::size_t(nb)};
    std::vector<char> claimed(std::size_t(lat.n_vertices()), 0);

    auto check_frontiers = [&]() {
        for (int b = 0; b < nb; ++b) {
            if (enclosed[std::size_t(b)].empty()) continue;
            OrientedSurface surf = surface_of_vertices(
                lat, std::vector<int>(enclosed[std::size_t(b)].begin(),
                                      enclosed[std::size_t(b)].end()));
            for (const auto& [bond, outward] : surf.entries) {
                if (claimed[std::size_t(outward)]) continue;  // merged direction
                auto ends = lat.edge_endpoints(bond);
                int inward = (ends[0] == outward) ? ends[1] : ends[0];
                if (find_star_at(current, inward) >= 0)
                    throw std::logic_error("disentangler: frontier lost freeness (star)");
                if (field_bond_touches(current, lat.vertex_edges(outward)))
                    throw std::logic_error("disentangler: frontier lost freeness (field)");
            }
        }
    };

    // Seed surfaces must be free outright.
    for (int b = 0; b < nb; ++b) {
        int v0 = sources[std::size_t(b)];
        if (find_star_at(current, v0) >= 0)
            throw std::domain_error("disentangler: seed vertex carries an active star");
        OrientedSurface seed = surface_of_vertices(lat, {v0});
        if (!is_free_surface(current, seed))
            throw std::logic_error("disentangler: seed surface is not free");
        enclosed[std::size_t(b)].insert(v0);
        claimed[std::size_t(v0)] = 1;
    }

    int round_base = 0;
    for (std::size_t li = 1; li < layers.size(); ++li) {
        // Pack this layer into rounds with pairwise disjoint gate supports.
        std::vector<std::vector<char>> used;  // per round, qubit mask
        std::vector<std::vector<RotationGate>> round_gates;
        for (const Visit& v : layers[li]) {
            enclosed[std::size_t(v.block)].insert(v.vertex);
            claimed[std::size_t(v.vertex)] = 1;
            if (find_star_at(current, v.vertex) < 0) continue;
            int bond = lat.edge_between(v.parent, v.vertex);
            RotationGate gate;
            gate.bond = bond;
            gate.target_vertex = v.vertex;
            gate.block = v.block;
            gate.generator = bond_vertex_rotation_generator(lat, bond, v.vertex);
            std::vector<int> support = lat.vertex_edges(v.vertex);
            std::size_t r = 0;
            for (; r < used.size(); ++r) {
                bool clash = false;
                for (int q : support)
                    if (used[r][std::size_t(q)]) {
                        clash = true;
                        break;
                    }
                if (!clash) break;
            }
            if (r == used.size()) {
                used.emplace_back(std::size_t(lat.n_qubits()), 0);
                round_gates.emplace_back();
            }
            for (int q : support) used[r][std::size_t(q)] = 1;
            gate.round = round_base + int(r);
            round_gates[r].push_back(std::move(gate));
        }
        for (auto& rg : round_gates)
            for (auto& gate : rg) {
                apply_gate_in_place(current, gate);
                circuit.gates.push_back(std::move(gate));
            }
        round_base += int(round_gates.size());
        check_frontiers();
    }
    circuit.n_rounds = round_base;

    // Every vertex claimed: no star may survive and the result is diagonal.
    for (const auto& t : current.terms)
        if (t.kind == TermKind::star)
            throw std::logic_error("disentangler: a star term survived the expansion");
    if (!classicality_check(current))
        throw std::logic_error("disentangler: final Hamiltonian is not diagonal");
    if (current.n_terms() != result.initial.n_terms())
        throw std::logic_error("disentangler: term count changed");

    // Locality range: per-block support diameter in the L-infinity metric.
    for (int b = 0; b < nb; ++b) {
        std::set<int> verts;
        for (const auto& g : circuit.gates) {
            if (g.block != b) continue;
            for (int e : lat.vertex_edges(g.target_vertex)) {
                auto ends = lat.edge_endpoints(e);
                verts.insert(ends[0]);
                verts.insert(ends[1]);
            }
        }
        int diam = 0;
        for (auto i = verts.begin(); i != verts.end(); ++i)
            for (auto j = std::next(i); j != verts.end(); ++j)
                diam = std::max(diam, lat.linf_distance(*i, *j));
        circuit.range = std::max(circuit.range, diam);
    }
    if (circuit.range > 2 * block_size)
        throw std::logic_error("disentangler: circuit range exceeds twice the block size");

    result.final_spec = std::move(current);
    return result;
}

DisentangleResult run(const HamiltonianSpec& h, const Config& c, int block_size, int radius) {
    require_edge_lattice(h, "disentangler");
    ValidityReport report = classify(h, c, block_size, radius);
    if (!report.valid)
        throw std::domain_error("disentangler: configuration is not valid (a block has no hole)");
    std::vector<int> sources;
    sources.reserve(report.blocks.size());
    for (const auto& b : report.blocks) {
        const Hole& hole = *b.chosen;
        auto anchor = h.lattice->cell_anchor(hole.center.dim, hole.center.id);
        sources.push_back(h.lattice->vertex_id(anchor));
    }
    return expand_from_sources(h, c, block_size, sources);
}

WitnessReport state_witness(const HamiltonianSpec& h, const Config& c, const Circuit& circuit,
                            const HamiltonianSpec& final_spec) {
    require_edge_lattice(h, "state_witness");
    const Lattice& lat = *h.lattice;
    HamiltonianSpec initial = restrict_to_active(h, c);

    WitnessReport report;
    report.rounds = circuit.n_rounds;
    report.transported.reserve(initial.n_terms());
    for (const auto& t : initial.terms) report.transported.push_back(t.op);
    for (const auto& gate : circuit.gates)
        for (auto& gen : report.transported) gen = conjugate_by_rotation(gate.generator, gen);

    report.all_z = true;
    report.signs_ok = true;
    for (const auto& gen : report.transported) {
        if (gen.x.any()) report.all_z = false;
        if (gen.phase_exp != 0) report.signs_ok = false;
    }
    report.matches_final = final_spec.n_terms() == initial.n_terms();
    if (report.matches_final)
        for (std::size_t i = 0; i < final_spec.n_terms(); ++i)
            if (!(final_spec.terms[i].op == report.transported[i])) {
                report.matches_final = false;
                break;
            }

    // Brute recomputation of the range from the gate supports.
    int range = 0;
    std::map<int, std::set<int>> block_verts;
    for (const auto& g : circuit.gates)
        for (int e : lat.vertex_edges(g.target_vertex)) {
            auto ends = lat.edge_endpoints(e);
            block_verts[g.block].insert(ends[0]);
            block_verts[g.block].insert(ends[1]);
        }
    for (const auto& [b, verts] : block_verts)
        for (auto i = verts.begin(); i != verts.end(); ++i)
            for (auto j = std::next(i); j != verts.end(); ++j)
                range = std::max(range, lat.linf_distance(*i, *j));
    report.range = range;

    for (const auto& t : final_spec.terms) ++report.final_term_histogram[to_string(t.kind)];

    report.valid = report.all_z && report.signs_ok && report.matches_final &&
                   report.range == circuit.range && report.range <= 2 * circuit.block_size;
    return report;
}

}  // namespace gibbslab
