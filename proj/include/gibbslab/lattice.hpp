#pragma once

#include <array>
#include <cstddef>
#include <map>
#include <memory>
#include <vector>

namespace gibbslab {

// Reference to a cell of the complex: dimension plus index within that
// dimension. Cells of dimension k are (anchor vertex, k-subset of axes);
// ids are row-major over anchor coordinates, then direction-subset index.
struct CellRef {
    int dim = 0;
    int id = 0;
    auto operator<=>(const CellRef&) const = default;
};

// Periodic hypercubic cell complex in d = 2, 3 or 4 with qubits on the
// cells of dimension 1 (d = 2, 3) or 2 (d = 4).
class Lattice {
public:
    Lattice(int d, int L);

    int dim() const { return d_; }
    int size() const { return L_; }
    int qubit_dim() const { return qubit_dim_; }

    int n_vertices() const { return n_vertices_; }
    int n_cells(int k) const;
    int n_qubits() const { return n_cells(qubit_dim_); }

    // Direction subsets (bitmasks over axes) for cells of dimension k.
    const std::vector<int>& dir_combos(int k) const { return combos_[k]; }

    // Coordinate helpers. Axis 0 is the most significant in row-major ids.
    std::array<int, 4> vertex_coords(int v) const;
    int vertex_id(const std::array<int, 4>& c) const;
    int vertex_shift(int v, int axis, int delta) const;

    int cell_id(const std::array<int, 4>& anchor, int dirs_mask) const;
    std::array<int, 4> cell_anchor(int k, int id) const;
    int cell_dirs(int k, int id) const;

    // Boundary / coboundary incidence between adjacent dimensions.
    std::vector<CellRef> boundary(const CellRef& c) const;
    std::vector<CellRef> coboundary(const CellRef& c) const;

    // Qubit cells incident to an arbitrary cell: the cell's closure for
    // higher-dimensional cells, the qubits containing it for lower ones,
    // or the cell itself when dimensions match.
    std::vector<int> incident_qubits(const CellRef& c) const;

    // Two qubit cells are adjacent when their closures share a vertex.
    const std::vector<int>& qubit_neighbors(int q) const { return qubit_adj_[q]; }

    // Graph-distance ball: qubits within r adjacency steps of the
    // qubits incident to `center`.
    std::vector<int> ball(const CellRef& center, int r) const;

    // Graph distance between qubit cells (BFS, bounded by `cap`).
    int qubit_distance(int a, int b, int cap) const;

    // Edge helpers (d = 2, 3 where qubits live on edges).
    std::vector<int> vertex_edges(int v) const;
    std::array<int, 2> edge_endpoints(int e) const;
    int edge_between(int u, int v) const;  // -1 if not adjacent

    // Block partition of linear size l (must divide L).
    int n_blocks(int l) const;
    int block_of_vertex(int v, int l) const;
    int block_of_cell(const CellRef& c, int l) const;
    std::vector<int> block_vertices(int block, int l) const;

    // Periodic L-infinity distance between vertex coordinates.
    int linf_distance(int u, int v) const;

private:
    int d_;
    int L_;
    int qubit_dim_;
    int n_vertices_;
    std::array<std::vector<int>, 5> combos_;       // combos_[k]: masks with k bits
    std::array<std::map<int, int>, 5> combo_idx_;  // mask -> index
    std::vector<std::vector<int>> qubit_adj_;

    void build_qubit_adjacency();
    std::vector<int> cell_closure_vertices(const CellRef& c) const;
};

// A candidate hole: ball of the given radius around a center cell.
struct Hole {
    CellRef center;
    int radius = 0;
    auto operator<=>(const Hole&) const = default;
};

// Closed oriented surface on the dual lattice, stored as bond -> outward
// vertex entries together with the enclosed vertex set (with unwrapped
// coordinates so that period crossings are detected).
struct OrientedSurface {
    std::map<int, int> entries;  // edge qubit id -> outward vertex id
    std::map<int, std::array<int, 4>> enclosed;  // vertex id -> unwrapped coords
};

// Surface around a set of vertices, oriented outwards.
OrientedSurface surface_of_vertices(const Lattice& lat, const std::vector<int>& vertices);

// Combinatorial closure check: every plaquette shares an even number of
// edges with the entry set and entries are exactly the cut of the
// enclosed vertex set, pointing outwards.
bool surface_is_closed(const Lattice& lat, const OrientedSurface& s);

// Surface around the hole's interior vertex set (vertices whose full
// edge star lies inside the ball). block_size > 0 additionally requires
// the ball to sit inside a single block.
OrientedSurface hole_boundary_surface(const Lattice& lat, const Hole& hole, int block_size = 0);

// Advance the surface outwards across the given entry bond, engulfing
// its outward vertex. Throws if the step would cross the lattice period.
OrientedSurface step_outward(const Lattice& lat, const OrientedSurface& s, int bond);

}  // namespace gibbslab
