#include "gibbslab/holes.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace gibbslab {

namespace {

struct CellKey {
    int anchor_rm;
    int dim;
    int combo;
};

// Candidate hole centers in enumeration order with their blocker lists
// (terms whose support meets the radius-r ball around the cell).
struct HoleIndex {
    const Lattice& lat;
    int radius;
    std::vector<CellRef> cells;                // enumeration order
    std::vector<std::vector<int>> cell_terms;  // cell -> blocking terms
    std::vector<std::vector<int>> term_cells;  // term -> blocked cells

    HoleIndex(const HamiltonianSpec& h, int r) : lat(*h.lattice), radius(r) {
        struct Entry {
            CellKey key;
            CellRef ref;
        };
        std::vector<Entry> entries;
        for (int dim = 0; dim <= lat.dim(); ++dim) {
            int ncomb = int(lat.dir_combos(dim).size());
            for (int id = 0; id < lat.n_cells(dim); ++id)
                entries.push_back({{id / ncomb, dim, id % ncomb}, {dim, id}});
        }
        std::sort(entries.begin(), entries.end(), [](const Entry& a, const Entry& b) {
            if (a.key.anchor_rm != b.key.anchor_rm) return a.key.anchor_rm < b.key.anchor_rm;
            if (a.key.dim != b.key.dim) return a.key.dim < b.key.dim;
            return a.key.combo < b.key.combo;
        });
        cells.reserve(entries.size());
        for (const auto& e : entries) cells.push_back(e.ref);

        cell_terms.resize(cells.size());
        term_cells.resize(h.n_terms());
        std::vector<char> in_ball(lat.n_qubits(), 0);
        for (std::size_t ci = 0; ci < cells.size(); ++ci) {
            std::vector<int> ball = lat.ball(cells[ci], radius);
            for (int q : ball) in_ball[q] = 1;
            for (std::size_t t = 0; t < h.n_terms(); ++t) {
                for (int q : h.terms[t].support) {
                    if (in_ball[q]) {
                        cell_terms[ci].push_back(int(t));
                        term_cells[t].push_back(int(ci));
                        break;
                    }
                }
            }
            for (int q : ball) in_ball[q] = 0;
        }
    }
};

void require_lattice(const HamiltonianSpec& h, const char* who) {
    if (!h.lattice) throw std::invalid_argument(std::string(who) + ": spec has no lattice");
}

int checked_radius(const HamiltonianSpec& h, int radius, const char* who) {
    if (radius == 0) radius = default_hole_radius(h);
    if (radius <= h.r_int)
        throw std::invalid_argument(std::string(who) +
                                    ": hole radius must exceed the interaction range");
    return radius;
}

}  // namespace

int default_hole_radius(const HamiltonianSpec& h) { return h.r_int + 1; }

std::vector<Hole> find_holes(const HamiltonianSpec& h, const Config& c, int radius) {
    require_lattice(h, "find_holes");
    radius = checked_radius(h, radius, "find_holes");
    if (c.bits.n_bits != h.n_terms())
        throw std::invalid_argument("find_holes: configuration length mismatch");
    HoleIndex index(h, radius);
    std::vector<Hole> out;
    for (std::size_t ci = 0; ci < index.cells.size(); ++ci) {
        bool clear = true;
        for (int t : index.cell_terms[ci])
            if (c.bits.get(std::size_t(t))) {
                clear = false;
                break;
            }
        if (clear) out.push_back({index.cells[ci], radius});
    }
    return out;
}

ValidityReport classify(const HamiltonianSpec& h, const Config& c, int block_size, int radius) {
    require_lattice(h, "classify");
    radius = checked_radius(h, radius, "classify");
    int nb = h.lattice->n_blocks(block_size);
    ValidityReport report;
    report.block_size = block_size;
    report.radius = radius;
    report.blocks.resize(std::size_t(nb));
    for (const Hole& hole : find_holes(h, c, radius)) {
        int b = h.lattice->block_of_cell(hole.center, block_size);
        if (!report.blocks[std::size_t(b)].has_hole) {
            report.blocks[std::size_t(b)].has_hole = true;
            report.blocks[std::size_t(b)].chosen = hole;
        }
    }
    report.valid = std::all_of(report.blocks.begin(), report.blocks.end(),
                               [](const BlockHoleReport& b) { return b.has_hole; });
    return report;
}

double hole_free_block_bound(double beta, double r_int, int block_size) {
    if (beta <= 0 || r_int <= 0 || block_size <= 0)
        throw std::invalid_argument("hole_free_block_bound: positive arguments required");
    double x = 4.0 * r_int * r_int * beta;
    double log_base = std::log(-std::expm1(-x));
    double exponent = (double(block_size) / r_int) * (double(block_size) / r_int);
    return std::exp(exponent * log_base);
}

double literal_block_size_formula(double beta, double r_int, double eps, double volume) {
    return std::exp(4.0 * r_int * r_int * beta) * r_int * std::log(volume) / std::log(eps);
}

int solve_block_size(double beta, double r_int, double eps, double volume) {
    if (!(eps > 0 && eps < 1) || volume < 1 || beta <= 0 || r_int <= 0)
        throw std::invalid_argument("solve_block_size: domain violation");
    double target = eps / volume;
    double x = 4.0 * r_int * r_int * beta;
    double log_base = std::log(-std::expm1(-x));
    // (l/R)^2 * log_base <= log(target); both logarithms are negative.
    double ratio = std::log(target) / log_base;
    int l = std::max(1, int(std::ceil(r_int * std::sqrt(ratio) - 1e-12)));
    while (hole_free_block_bound(beta, r_int, l) > target) ++l;
    while (l > 1 && hole_free_block_bound(beta, r_int, l - 1) <= target) --l;
    return l;
}

InvalidRate invalid_rate(const HamiltonianSpec& h, const EnsembleParams& p, int block_size,
                         int radius) {
    require_lattice(h, "invalid_rate");
    radius = checked_radius(h, radius, "invalid_rate");
    int nb = h.lattice->n_blocks(block_size);
    std::vector<double> xs;
    xs.reserve(std::size_t(p.n_samples));
    sample(h, p, [&](const Config& c) {
        xs.push_back(classify(h, c, block_size, radius).valid ? 0.0 : 1.0);
    });
    InvalidRate out;
    double sum = 0;
    for (double x : xs) sum += x;
    out.empirical.mean = xs.empty() ? 0.0 : sum / double(xs.size());
    out.empirical.n = long(xs.size());
    std::size_t nbatch = std::min<std::size_t>(32, xs.size());
    if (nbatch > 1) {
        std::size_t per = xs.size() / nbatch;
        std::vector<double> bm;
        for (std::size_t b = 0; b < nbatch; ++b) {
            double s = 0;
            for (std::size_t i = b * per; i < (b + 1) * per; ++i) s += xs[i];
            bm.push_back(s / double(per));
        }
        double m = 0;
        for (double v : bm) m += v;
        m /= double(nbatch);
        double var = 0;
        for (double v : bm) var += (v - m) * (v - m);
        var /= double(nbatch - 1);
        out.empirical.stderr_ = std::sqrt(var / double(nbatch));
    }
    out.bound =
        std::min(1.0, double(nb) * hole_free_block_bound(p.beta, double(h.r_int), block_size));
    return out;
}

void sample_valid(const HamiltonianSpec& h, const EnsembleParams& p, int block_size, int radius,
                  const std::function<void(const Config&)>& fn) {
    require_lattice(h, "sample_valid");
    radius = checked_radius(h, radius, "sample_valid");
    const Lattice& lat = *h.lattice;
    int nb = lat.n_blocks(block_size);
    HoleIndex index(h, radius);

    std::vector<int> cell_block(index.cells.size());
    for (std::size_t ci = 0; ci < index.cells.size(); ++ci)
        cell_block[ci] = lat.block_of_cell(index.cells[ci], block_size);

    // A cell is a hole iff no active term blocks it; a flip only touches
    // the cells listed for its term.
    std::vector<int> blocked_count(index.cells.size(), 0);
    std::vector<long> block_holes(std::size_t(nb), 0);
    for (std::size_t ci = 0; ci < index.cells.size(); ++ci)
        ++block_holes[std::size_t(cell_block[ci])];

    std::vector<long> loss(std::size_t(nb), 0);
    std::vector<int> touched;
    auto allow = [&](int t) {
        touched.clear();
        bool ok = true;
        for (int ci : index.term_cells[std::size_t(t)]) {
            if (blocked_count[std::size_t(ci)] != 0) continue;
            int b = cell_block[std::size_t(ci)];
            if (loss[std::size_t(b)] == 0) touched.push_back(b);
            if (++loss[std::size_t(b)] >= block_holes[std::size_t(b)]) ok = false;
        }
        for (int b : touched) loss[std::size_t(b)] = 0;
        return ok;
    };
    auto on_flip = [&](int t, bool now_active) {
        for (int ci : index.term_cells[std::size_t(t)]) {
            int& cnt = blocked_count[std::size_t(ci)];
            if (now_active) {
                if (cnt++ == 0) --block_holes[std::size_t(cell_block[std::size_t(ci)])];
            } else {
                if (--cnt == 0) ++block_holes[std::size_t(cell_block[std::size_t(ci)])];
            }
        }
    };

    GibbsChain chain(h, p.beta, p.seed);
    for (long i = 0; i < p.burn_in; ++i) chain.sweep(allow, on_flip);
    for (long s = 0; s < p.n_samples; ++s) {
        for (long i = 0; i < p.thinning; ++i) chain.sweep(allow, on_flip);
        fn(chain.config());
    }
}

std::vector<Config> sample_valid_vector(const HamiltonianSpec& h, const EnsembleParams& p,
                                        int block_size, int radius) {
    std::vector<Config> out;
    out.reserve(std::size_t(p.n_samples));
    sample_valid(h, p, block_size, radius, [&](const Config& c) { out.push_back(c); });
    return out;
}

}  // namespace gibbslab
