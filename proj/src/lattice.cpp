#include "gibbslab/lattice.hpp"

#include <algorithm>
#include <bit>
#include <deque>
#include <set>
#include <stdexcept>

namespace gibbslab {

namespace {

int ipow(int b, int e) {
    int r = 1;
    while (e-- > 0) r *= b;
    return r;
}

}  // namespace

Lattice::Lattice(int d, int L) : d_(d), L_(L) {
    if (d != 2 && d != 3 && d != 4)
        throw std::invalid_argument("Lattice: dimension must be 2, 3 or 4");
    if (L < 2) throw std::invalid_argument("Lattice: size must be at least 2");
    qubit_dim_ = (d == 4) ? 2 : 1;
    n_vertices_ = ipow(L, d);
    for (int mask = 0; mask < (1 << d); ++mask) {
        int k = std::popcount(unsigned(mask));
        combo_idx_[k][mask] = int(combos_[k].size());
        combos_[k].push_back(mask);
    }
    build_qubit_adjacency();
}

int Lattice::n_cells(int k) const {
    if (k < 0 || k > d_) return 0;
    return n_vertices_ * int(combos_[k].size());
}

std::array<int, 4> Lattice::vertex_coords(int v) const {
    std::array<int, 4> c{0, 0, 0, 0};
    for (int a = d_ - 1; a >= 0; --a) {
        c[a] = v % L_;
        v /= L_;
    }
    return c;
}

int Lattice::vertex_id(const std::array<int, 4>& c) const {
    int v = 0;
    for (int a = 0; a < d_; ++a) v = v * L_ + ((c[a] % L_) + L_) % L_;
    return v;
}

int Lattice::vertex_shift(int v, int axis, int delta) const {
    auto c = vertex_coords(v);
    c[axis] = ((c[axis] + delta) % L_ + L_) % L_;
    return vertex_id(c);
}

int Lattice::cell_id(const std::array<int, 4>& anchor, int dirs_mask) const {
    int k = std::popcount(unsigned(dirs_mask));
    return vertex_id(anchor) * int(combos_[k].size()) + combo_idx_[k].at(dirs_mask);
}

std::array<int, 4> Lattice::cell_anchor(int k, int id) const {
    return vertex_coords(id / int(combos_[k].size()));
}

int Lattice::cell_dirs(int k, int id) const {
    return combos_[k][id % int(combos_[k].size())];
}

std::vector<CellRef> Lattice::boundary(const CellRef& c) const {
    if (c.dim <= 0 || c.dim > d_) throw std::invalid_argument("boundary: bad dimension");
    auto anchor = cell_anchor(c.dim, c.id);
    int mask = cell_dirs(c.dim, c.id);
    std::vector<CellRef> out;
    for (int t = 0; t < d_; ++t) {
        if (!(mask & (1 << t))) continue;
        int sub = mask & ~(1 << t);
        out.push_back({c.dim - 1, cell_id(anchor, sub)});
        auto shifted = anchor;
        shifted[t] = (shifted[t] + 1) % L_;
        out.push_back({c.dim - 1, cell_id(shifted, sub)});
    }
    return out;
}

std::vector<CellRef> Lattice::coboundary(const CellRef& c) const {
    if (c.dim < 0 || c.dim >= d_) throw std::invalid_argument("coboundary: bad dimension");
    auto anchor = cell_anchor(c.dim, c.id);
    int mask = cell_dirs(c.dim, c.id);
    std::vector<CellRef> out;
    for (int t = 0; t < d_; ++t) {
        if (mask & (1 << t)) continue;
        int super = mask | (1 << t);
        out.push_back({c.dim + 1, cell_id(anchor, super)});
        auto shifted = anchor;
        shifted[t] = (shifted[t] + L_ - 1) % L_;
        out.push_back({c.dim + 1, cell_id(shifted, super)});
    }
    return out;
}

std::vector<int> Lattice::incident_qubits(const CellRef& c) const {
    std::vector<int> out;
    auto anchor = cell_anchor(c.dim, c.id);
    int mask = cell_dirs(c.dim, c.id);
    if (c.dim == qubit_dim_) {
        out.push_back(c.id);
    } else if (c.dim < qubit_dim_) {
        // Qubit cells whose closure contains this cell.
        for (int super : combos_[qubit_dim_]) {
            if ((super & mask) != mask) continue;
            int extra = super & ~mask;
            // Anchor can be offset backwards along any subset of the extra axes.
            for (int off = extra;; off = (off - 1) & extra) {
                auto w = anchor;
                for (int t = 0; t < d_; ++t)
                    if (off & (1 << t)) w[t] = (w[t] + L_ - 1) % L_;
                out.push_back(cell_id(w, super));
                if (off == 0) break;
            }
        }
    } else {
        // Qubit cells inside this cell's closure.
        for (int sub : combos_[qubit_dim_]) {
            if ((sub & mask) != sub) continue;
            int extra = mask & ~sub;
            for (int off = extra;; off = (off - 1) & extra) {
                auto w = anchor;
                for (int t = 0; t < d_; ++t)
                    if (off & (1 << t)) w[t] = (w[t] + 1) % L_;
                out.push_back(cell_id(w, sub));
                if (off == 0) break;
            }
        }
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::vector<int> Lattice::cell_closure_vertices(const CellRef& c) const {
    auto anchor = cell_anchor(c.dim, c.id);
    int mask = cell_dirs(c.dim, c.id);
    std::vector<int> out;
    for (int off = mask;; off = (off - 1) & mask) {
        auto w = anchor;
        for (int t = 0; t < d_; ++t)
            if (off & (1 << t)) w[t] = (w[t] + 1) % L_;
        out.push_back(vertex_id(w));
        if (off == 0) break;
    }
    return out;
}

void Lattice::build_qubit_adjacency() {
    int nq = n_qubits();
    std::vector<std::vector<int>> vertex_qubits(n_vertices_);
    for (int q = 0; q < nq; ++q)
        for (int v : cell_closure_vertices({qubit_dim_, q})) vertex_qubits[v].push_back(q);
    qubit_adj_.assign(nq, {});
    for (int q = 0; q < nq; ++q) {
        std::set<int> nb;
        for (int v : cell_closure_vertices({qubit_dim_, q}))
            for (int p : vertex_qubits[v])
                if (p != q) nb.insert(p);
        qubit_adj_[q].assign(nb.begin(), nb.end());
    }
}

std::vector<int> Lattice::ball(const CellRef& center, int r) const {
    if (r < 0) throw std::invalid_argument("ball: negative radius");
    std::vector<int> seeds = incident_qubits(center);
    std::vector<int> dist(n_qubits(), -1);
    std::deque<int> queue;
    for (int q : seeds) {
        dist[q] = 0;
        queue.push_back(q);
    }
    std::vector<int> out;
    while (!queue.empty()) {
        int q = queue.front();
        queue.pop_front();
        out.push_back(q);
        if (dist[q] == r) continue;
        for (int p : qubit_adj_[q])
            if (dist[p] < 0) {
                dist[p] = dist[q] + 1;
                queue.push_back(p);
            }
    }
    std::sort(out.begin(), out.end());
    return out;
}

int Lattice::qubit_distance(int a, int b, int cap) const {
    if (a == b) return 0;
    std::vector<int> dist(n_qubits(), -1);
    std::deque<int> queue{a};
    dist[a] = 0;
    while (!queue.empty()) {
        int q = queue.front();
        queue.pop_front();
        if (dist[q] >= cap) continue;
        for (int p : qubit_adj_[q]) {
            if (dist[p] >= 0) continue;
            dist[p] = dist[q] + 1;
            if (p == b) return dist[p];
            queue.push_back(p);
        }
    }
    return -1;
}

std::vector<int> Lattice::vertex_edges(int v) const {
    if (qubit_dim_ != 1) throw std::logic_error("vertex_edges: qubits are not on edges");
    return incident_qubits({0, v});
}

std::array<int, 2> Lattice::edge_endpoints(int e) const {
    if (qubit_dim_ != 1) throw std::logic_error("edge_endpoints: qubits are not on edges");
    auto anchor = cell_anchor(1, e);
    int mask = cell_dirs(1, e);
    int axis = std::countr_zero(unsigned(mask));
    int u = vertex_id(anchor);
    return {u, vertex_shift(u, axis, 1)};
}

int Lattice::edge_between(int u, int v) const {
    for (int a = 0; a < d_; ++a) {
        if (vertex_shift(u, a, 1) == v) return cell_id(vertex_coords(u), 1 << a);
        if (vertex_shift(u, a, -1) == v) return cell_id(vertex_coords(v), 1 << a);
    }
    return -1;
}

int Lattice::n_blocks(int l) const {
    if (l <= 0 || l > L_) throw std::invalid_argument("blocks: size must be in [1, L]");
    if (L_ % l != 0) throw std::invalid_argument("blocks: size must divide L");
    return ipow(L_ / l, d_);
}

int Lattice::block_of_vertex(int v, int l) const {
    (void)n_blocks(l);
    auto c = vertex_coords(v);
    int b = 0;
    for (int a = 0; a < d_; ++a) b = b * (L_ / l) + c[a] / l;
    return b;
}

int Lattice::block_of_cell(const CellRef& c, int l) const {
    auto anchor = cell_anchor(c.dim, c.id);
    return block_of_vertex(vertex_id(anchor), l);
}

std::vector<int> Lattice::block_vertices(int block, int l) const {
    int nb = n_blocks(l);
    if (block < 0 || block >= nb) throw std::invalid_argument("blocks: bad block index");
    int per = L_ / l;
    std::array<int, 4> base{0, 0, 0, 0};
    for (int a = d_ - 1; a >= 0; --a) {
        base[a] = (block % per) * l;
        block /= per;
    }
    std::vector<int> out;
    std::array<int, 4> off{0, 0, 0, 0};
    while (true) {
        std::array<int, 4> c = base;
        for (int a = 0; a < d_; ++a) c[a] += off[a];
        out.push_back(vertex_id(c));
        int a = d_ - 1;
        while (a >= 0 && ++off[a] == l) off[a--] = 0;
        if (a < 0) break;
    }
    std::sort(out.begin(), out.end());
    return out;
}

int Lattice::linf_distance(int u, int v) const {
    auto a = vertex_coords(u), b = vertex_coords(v);
    int m = 0;
    for (int t = 0; t < d_; ++t) {
        int diff = std::abs(a[t] - b[t]);
        m = std::max(m, std::min(diff, L_ - diff));
    }
    return m;
}

// ---------------------------------------------------------------------------
// Oriented dual surfaces
// ---------------------------------------------------------------------------

namespace {

// Unwrapped coordinates of `to` given unwrapped coordinates of `from`,
// where the two vertices are lattice neighbors.
std::array<int, 4> step_coords(const Lattice& lat, const std::array<int, 4>& from_unwrapped,
                               int from, int to) {
    for (int a = 0; a < lat.dim(); ++a) {
        for (int s : {+1, -1}) {
            if (lat.vertex_shift(from, a, s) == to) {
                auto c = from_unwrapped;
                c[a] += s;
                return c;
            }
        }
    }
    throw std::logic_error("step_coords: vertices are not neighbors");
}

void check_extent(const Lattice& lat, const std::map<int, std::array<int, 4>>& enclosed) {
    for (int a = 0; a < lat.dim(); ++a) {
        int lo = 0, hi = 0;
        bool first = true;
        for (const auto& [v, c] : enclosed) {
            if (first) {
                lo = hi = c[a];
                first = false;
            } else {
                lo = std::min(lo, c[a]);
                hi = std::max(hi, c[a]);
            }
        }
        if (hi - lo + 1 > lat.size())
            throw std::domain_error("surface spans the lattice period");
    }
}

void rebuild_entries(const Lattice& lat, OrientedSurface& s) {
    s.entries.clear();
    for (const auto& [v, c] : s.enclosed) {
        for (int e : lat.vertex_edges(v)) {
            auto ends = lat.edge_endpoints(e);
            int other = (ends[0] == v) ? ends[1] : ends[0];
            if (!s.enclosed.count(other)) s.entries[e] = other;
        }
    }
}

}  // namespace

OrientedSurface surface_of_vertices(const Lattice& lat, const std::vector<int>& vertices) {
    if (vertices.empty()) throw std::invalid_argument("surface_of_vertices: empty vertex set");
    std::set<int> want(vertices.begin(), vertices.end());
    OrientedSurface s;
    int seed = *want.begin();
    s.enclosed[seed] = {0, 0, 0, 0};
    std::deque<int> queue{seed};
    while (!queue.empty()) {
        int v = queue.front();
        queue.pop_front();
        for (int e : lat.vertex_edges(v)) {
            auto ends = lat.edge_endpoints(e);
            int w = (ends[0] == v) ? ends[1] : ends[0];
            if (!want.count(w) || s.enclosed.count(w)) continue;
            s.enclosed[w] = step_coords(lat, s.enclosed[v], v, w);
            queue.push_back(w);
        }
    }
    if (s.enclosed.size() != want.size())
        throw std::invalid_argument("surface_of_vertices: vertex set is not connected");
    check_extent(lat, s.enclosed);
    rebuild_entries(lat, s);
    return s;
}

bool surface_is_closed(const Lattice& lat, const OrientedSurface& s) {
    // Every plaquette must share an even number of edges with the entry set.
    for (int f = 0; f < lat.n_cells(2); ++f) {
        if (lat.qubit_dim() != 1) break;
        int hits = 0;
        for (const auto& cell : lat.boundary({2, f}))
            if (s.entries.count(cell.id)) ++hits;
        if (hits % 2 != 0) return false;
    }
    // Entries must be exactly the outward-oriented cut of the enclosed set.
    OrientedSurface ref;
    ref.enclosed = s.enclosed;
    rebuild_entries(lat, ref);
    return ref.entries == s.entries;
}

OrientedSurface hole_boundary_surface(const Lattice& lat, const Hole& hole, int block_size) {
    std::vector<int> ball = lat.ball(hole.center, hole.radius);
    if (block_size > 0) {
        int want = lat.block_of_cell(hole.center, block_size);
        for (int q : ball)
            if (lat.block_of_cell({lat.qubit_dim(), q}, block_size) != want)
                throw std::domain_error("hole ball is not strictly inside one block");
    }
    std::vector<char> in_ball(lat.n_qubits(), 0);
    for (int q : ball) in_ball[q] = 1;
    std::vector<int> interior;
    for (int v = 0; v < lat.n_vertices(); ++v) {
        bool all = true;
        for (int e : lat.vertex_edges(v))
            if (!in_ball[e]) {
                all = false;
                break;
            }
        if (all) interior.push_back(v);
    }
    if (interior.empty())
        throw std::domain_error("hole has no interior vertices");
    if (int(interior.size()) == lat.n_vertices())
        throw std::domain_error("hole ball covers the whole lattice");
    // Keep the connected component containing the smallest interior vertex.
    std::set<int> keep(interior.begin(), interior.end());
    std::set<int> comp;
    std::deque<int> queue{interior.front()};
    comp.insert(interior.front());
    while (!queue.empty()) {
        int v = queue.front();
        queue.pop_front();
        for (int e : lat.vertex_edges(v)) {
            auto ends = lat.edge_endpoints(e);
            int w = (ends[0] == v) ? ends[1] : ends[0];
            if (keep.count(w) && !comp.count(w)) {
                comp.insert(w);
                queue.push_back(w);
            }
        }
    }
    return surface_of_vertices(lat, std::vector<int>(comp.begin(), comp.end()));
}

OrientedSurface step_outward(const Lattice& lat, const OrientedSurface& s, int bond) {
    auto it = s.entries.find(bond);
    if (it == s.entries.end())
        throw std::invalid_argument("step_outward: bond is not a surface entry");
    int target = it->second;
    auto ends = lat.edge_endpoints(bond);
    int inner = (ends[0] == target) ? ends[1] : ends[0];
    OrientedSurface out = s;
    out.enclosed[target] = step_coords(lat, out.enclosed.at(inner), inner, target);
    check_extent(lat, out.enclosed);
    rebuild_entries(lat, out);
    return out;
}

}  // namespace gibbslab
