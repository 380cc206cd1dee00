#include "gibbslab/structure.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <map>
#include <random>
#include <stdexcept>

namespace gibbslab {

namespace {

constexpr double kGroupTol = 1e-8;   // relative eigenvalue grouping
constexpr double kFormTol = 1e-7;    // canonical-form residuals

double fnorm(const Mat& m) { return m.norm(); }

Mat random_hermitian_word_combo(const std::vector<Mat>& gens, int max_len, int n_words,
                                std::mt19937_64& rng) {
    long dim = gens.front().rows();
    std::normal_distribution<double> gauss(0.0, 1.0);
    Mat k = Mat::Zero(dim, dim);
    // Length-1 words first so every generator enters.
    for (const auto& g : gens) k += gauss(rng) * (g + g.adjoint());
    for (int w = 0; w < n_words; ++w) {
        int len = 2 + int(rng() % std::uint64_t(std::max(1, max_len - 1)));
        Mat word = gens[rng() % gens.size()];
        for (int s = 1; s < len; ++s) word = word * gens[rng() % gens.size()];
        k += gauss(rng) * (word + word.adjoint());
    }
    double n = fnorm(k);
    if (n > 0) k /= n;
    return k;
}

// Eigenvalue groups of a Hermitian matrix, relative tolerance.
std::vector<Mat> eigenspace_bases(const Mat& k, double tol) {
    Eigen::SelfAdjointEigenSolver<Mat> es(k);
    const auto& w = es.eigenvalues();
    double scale = std::max(std::abs(w(0)), std::abs(w(w.size() - 1)));
    scale = std::max(scale, 1e-300);
    std::vector<Mat> out;
    long start = 0;
    for (long i = 1; i <= w.size(); ++i) {
        if (i == w.size() || w(i) - w(start) > tol * scale) {
            out.push_back(es.eigenvectors().middleCols(start, i - start));
            start = i;
        }
    }
    return out;
}

// Orthonormal basis of the smallest invariant subspace containing seed.
Mat invariant_closure(const Mat& seed, const std::vector<Mat>& gens) {
    Mat v = seed;
    while (true) {
        long dim = v.rows();
        Mat w(dim, v.cols() * long(gens.size() + 1));
        w.leftCols(v.cols()) = v;
        long at = v.cols();
        for (const auto& g : gens) {
            w.middleCols(at, v.cols()) = g * v;
            at += v.cols();
        }
        Eigen::ColPivHouseholderQR<Mat> qr(w);
        qr.setThreshold(1e-10);
        long rank = qr.rank();
        if (rank == v.cols()) return v;
        Mat q = qr.householderQ();
        v = q.leftCols(rank);
    }
}

struct FactorSplit {
    Mat arrangement;  // w x w unitary, factor-major column order
    std::vector<int> dims;
    int inner = 0;
    double residual = 0.0;
};

// Recursively splits a block into per-neighbor tensor factors.
FactorSplit arrange_factors(std::vector<std::vector<Mat>> gens_per_neighbor,
                            std::mt19937_64& rng) {
    FactorSplit out;
    long w = 0;
    for (const auto& gl : gens_per_neighbor)
        if (!gl.empty()) w = gl.front().rows();
    if (w == 0) throw std::invalid_argument("arrange_factors: no generators");
    if (gens_per_neighbor.empty()) {
        out.arrangement = Mat::Identity(w, w);
        out.inner = int(w);
        return out;
    }

    std::vector<Mat> mine = gens_per_neighbor.front();
    double scale = 1e-300;
    for (const auto& g : mine) scale = std::max(scale, fnorm(g));

    bool trivial = true;
    for (const auto& g : mine) {
        Mat dev = g - (g.trace() / double(w)) * Mat::Identity(w, w);
        if (fnorm(dev) > kFormTol * std::max(1.0, scale)) {
            trivial = false;
            break;
        }
    }

    std::vector<std::vector<Mat>> tail(gens_per_neighbor.begin() + 1, gens_per_neighbor.end());

    if (trivial) {
        FactorSplit sub = tail.empty()
                              ? FactorSplit{Mat::Identity(w, w), {}, int(w), 0.0}
                              : arrange_factors(tail, rng);
        out.arrangement = sub.arrangement;
        out.dims.push_back(1);
        out.dims.insert(out.dims.end(), sub.dims.begin(), sub.dims.end());
        out.inner = sub.inner;
        out.residual = sub.residual;
        return out;
    }

    std::vector<Mat> augmented = mine;
    for (const auto& g : mine) augmented.push_back(g.adjoint());
    Mat kb = random_hermitian_word_combo(augmented, 3, 60, rng);
    std::vector<Mat> groups = eigenspace_bases(kb, kGroupTol);
    int r = int(groups.size());
    long fdim = w / r;
    for (const auto& f : groups)
        if (f.cols() != fdim)
            throw std::runtime_error("arrange_factors: unequal eigenspace dimensions");

    Mat k2 = random_hermitian_word_combo(augmented, 3, 60, rng);
    Mat cols(w, w);
    cols.leftCols(fdim) = groups[0];
    for (int i = 1; i < r; ++i) {
        Mat s = groups[std::size_t(i)].adjoint() * k2 * groups[0];
        Eigen::JacobiSVD<Mat> svd(s, Eigen::ComputeThinU | Eigen::ComputeThinV);
        const auto& sv = svd.singularValues();
        if (sv(0) <= 1e-10 || sv(sv.size() - 1) < (1.0 - 1e-6) * sv(0))
            throw std::runtime_error("arrange_factors: degenerate intertwiner");
        Mat t = svd.matrixU() * svd.matrixV().adjoint();
        cols.middleCols(long(i) * fdim, fdim) = groups[std::size_t(i)] * t;
    }

    // In the new basis this neighbor must act as M x I on (factor, fiber).
    double res = 0.0;
    for (const auto& g : mine) {
        Mat gp = cols.adjoint() * g * cols;
        Mat m(r, r);
        for (int i = 0; i < r; ++i)
            for (int k = 0; k < r; ++k)
                m(i, k) = gp.block(long(i) * fdim, long(k) * fdim, fdim, fdim).trace() /
                          double(fdim);
        Mat model = Mat::Zero(w, w);
        for (int i = 0; i < r; ++i)
            for (int k = 0; k < r; ++k)
                model.block(long(i) * fdim, long(k) * fdim, fdim, fdim) =
                    m(i, k) * Mat::Identity(fdim, fdim);
        res = std::max(res, fnorm(gp - model) / std::max(1.0, fnorm(g)));
    }
    if (res > kFormTol)
        throw std::runtime_error("arrange_factors: factor form residual too large");

    // Remaining neighbors act as I x fiber op; recurse on the fiber.
    std::vector<std::vector<Mat>> tail_fiber;
    for (const auto& gl : tail) {
        std::vector<Mat> fl;
        for (const auto& g : gl) {
            Mat gp = cols.adjoint() * g * cols;
            Mat fib = gp.topLeftCorner(fdim, fdim);
            Mat model = Mat::Zero(w, w);
            for (int i = 0; i < r; ++i) model.block(long(i) * fdim, long(i) * fdim, fdim, fdim) = fib;
            res = std::max(res, fnorm(gp - model) / std::max(1.0, fnorm(g)));
            fl.push_back(std::move(fib));
        }
        tail_fiber.push_back(std::move(fl));
    }
    if (res > kFormTol)
        throw std::runtime_error("arrange_factors: commuting neighbors leak across the factor");

    FactorSplit sub = tail_fiber.empty()
                          ? FactorSplit{Mat::Identity(fdim, fdim), {}, int(fdim), 0.0}
                          : arrange_factors(tail_fiber, rng);
    Mat expand = Mat::Zero(w, w);
    for (int i = 0; i < r; ++i)
        expand.block(long(i) * fdim, long(i) * fdim, fdim, fdim) = sub.arrangement;
    out.arrangement = cols * expand;
    out.dims.push_back(r);
    out.dims.insert(out.dims.end(), sub.dims.begin(), sub.dims.end());
    out.inner = sub.inner;
    out.residual = std::max(res, sub.residual);
    return out;
}

BlockDecomposition decompose_once(const std::vector<std::vector<Mat>>& generators_per_neighbor,
                                  std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    long dim = 0;
    std::vector<Mat> all;
    for (const auto& gl : generators_per_neighbor)
        for (const auto& g : gl) {
            if (dim == 0) dim = g.rows();
            if (g.rows() != dim || g.cols() != dim)
                throw std::invalid_argument("decompose_region: inconsistent dimensions");
            all.push_back(g);
            all.push_back(g.adjoint());
        }
    if (all.empty()) throw std::invalid_argument("decompose_region: no generators");

    // Cross-neighbor commutation is a precondition, not a numerical outcome.
    for (std::size_t a = 0; a < generators_per_neighbor.size(); ++a)
        for (std::size_t b = a + 1; b < generators_per_neighbor.size(); ++b)
            for (const auto& ga : generators_per_neighbor[a])
                for (const auto& gb : generators_per_neighbor[b]) {
                    double s = std::max(1.0, fnorm(ga) * fnorm(gb));
                    if (fnorm(ga * gb - gb * ga) > 1e-9 * s ||
                        fnorm(ga.adjoint() * gb - gb * ga.adjoint()) > 1e-9 * s)
                        throw std::invalid_argument(
                            "decompose_region: neighbor algebras do not commute");
                }

    Mat k = random_hermitian_word_combo(all, 4, 240, rng);
    std::vector<Mat> eig = eigenspace_bases(k, kGroupTol);
    std::vector<char> consumed(eig.size(), 0);

    BlockDecomposition dec;
    dec.dim = int(dim);
    dec.n_neighbors = int(generators_per_neighbor.size());
    long covered = 0;
    for (std::size_t e = 0; e < eig.size(); ++e) {
        if (consumed[e]) continue;
        Mat basis = invariant_closure(eig[e], all);
        for (std::size_t f = 0; f < eig.size(); ++f) {
            if (consumed[f]) continue;
            Mat leak = eig[f] - basis * (basis.adjoint() * eig[f]);
            if (fnorm(leak) < 1e-8 * std::sqrt(double(eig[f].cols()))) consumed[f] = 1;
        }
        if (!consumed[e])
            throw std::runtime_error("decompose_region: closure does not absorb its seed");

        RegionBlock blk;
        blk.block_dim = int(basis.cols());
        std::vector<std::vector<Mat>> restricted;
        for (const auto& gl : generators_per_neighbor) {
            std::vector<Mat> rl;
            for (const auto& g : gl) rl.push_back(basis.adjoint() * g * basis);
            restricted.push_back(std::move(rl));
        }
        FactorSplit split = arrange_factors(restricted, rng);
        blk.basis = basis * split.arrangement;
        blk.projector = blk.basis * blk.basis.adjoint();
        blk.factor_dims = split.dims;
        blk.inner_dim = split.inner;
        dec.max_residual = std::max(dec.max_residual, split.residual);
        covered += blk.block_dim;
        dec.blocks.push_back(std::move(blk));
    }
    if (covered != dim)
        throw std::runtime_error("decompose_region: blocks do not cover the space");

    // Global verification: completeness and invariance of every block.
    Mat total = Mat::Zero(dim, dim);
    for (const auto& blk : dec.blocks) total += blk.projector;
    if (fnorm(total - Mat::Identity(dim, dim)) > 1e-8 * std::sqrt(double(dim)))
        throw std::runtime_error("decompose_region: projectors are not complete");
    for (const auto& blk : dec.blocks)
        for (const auto& gl : generators_per_neighbor)
            for (const auto& g : gl) {
                double s = std::max(1.0, fnorm(g));
                if (fnorm(blk.projector * g - g * blk.projector) > 1e-7 * s)
                    throw std::runtime_error("decompose_region: generator crosses a block");
            }
    std::sort(dec.blocks.begin(), dec.blocks.end(),
              [](const RegionBlock& a, const RegionBlock& b) {
                  return a.block_dim < b.block_dim;
              });
    return dec;
}

}  // namespace

std::vector<SchmidtTerm> operator_schmidt(const Mat& h_ab, int dim_a, int dim_b) {
    long da = dim_a, db = dim_b;
    if (h_ab.rows() != da * db || h_ab.cols() != da * db)
        throw std::invalid_argument("operator_schmidt: dimension mismatch");
    Mat realign(da * da, db * db);
    for (long i = 0; i < da; ++i)
        for (long k = 0; k < da; ++k)
            for (long j = 0; j < db; ++j)
                for (long l = 0; l < db; ++l)
                    realign(i * da + k, j * db + l) = h_ab(i * db + j, k * db + l);
    Eigen::JacobiSVD<Mat> svd(realign, Eigen::ComputeThinU | Eigen::ComputeThinV);
    const auto& sv = svd.singularValues();
    double cut = 1e-12 * std::max(1.0, sv.size() ? sv(0) : 0.0);
    std::vector<SchmidtTerm> out;
    for (long g = 0; g < sv.size(); ++g) {
        if (sv(g) <= cut) break;
        SchmidtTerm term;
        term.left = Mat(da, da);
        term.right = Mat(db, db);
        for (long i = 0; i < da; ++i)
            for (long k = 0; k < da; ++k) term.left(i, k) = sv(g) * svd.matrixU()(i * da + k, g);
        for (long j = 0; j < db; ++j)
            for (long l = 0; l < db; ++l)
                term.right(j, l) = std::conj(svd.matrixV()(j * db + l, g));
        out.push_back(std::move(term));
    }
    Mat rec = Mat::Zero(da * db, da * db);
    for (const auto& t : out)
        for (long i = 0; i < da; ++i)
            for (long k = 0; k < da; ++k)
                for (long j = 0; j < db; ++j)
                    for (long l = 0; l < db; ++l)
                        rec(i * db + j, k * db + l) += t.left(i, k) * t.right(j, l);
    if (fnorm(rec - h_ab) > 1e-10 * std::max(1.0, fnorm(h_ab)))
        throw std::logic_error("operator_schmidt: reconstruction residual too large");
    return out;
}

BlockDecomposition decompose_region(const std::vector<std::vector<Mat>>& generators_per_neighbor,
                                    std::uint64_t seed) {
    std::string last;
    for (int attempt = 0; attempt < 3; ++attempt) {
        try {
            return decompose_once(generators_per_neighbor, seed + std::uint64_t(attempt) * 7919);
        } catch (const std::runtime_error& err) {
            last = err.what();
        }
    }
    throw std::runtime_error("decompose_region failed after retries: " + last);
}

Mat canonical_neighbor_action(const BlockDecomposition& dec, int neighbor, const Mat& op) {
    Mat out = Mat::Zero(dec.dim, dec.dim);
    for (const auto& blk : dec.blocks) {
        Mat local = blk.basis.adjoint() * op * blk.basis;
        int db = blk.factor_dims[std::size_t(neighbor)];
        // Column multi-index: factors in neighbor order, inner fastest.
        long stride = blk.inner_dim;
        for (std::size_t c = blk.factor_dims.size(); c-- > std::size_t(neighbor) + 1;)
            stride *= blk.factor_dims[c];
        long period = stride * db;
        Mat m = Mat::Zero(db, db);
        for (long col = 0; col < blk.block_dim; ++col) {
            long jb = (col / stride) % db;
            for (long ib = 0; ib < db; ++ib) {
                long row = (col / period) * period + ib * stride + col % stride;
                m(ib, jb) += local(row, col);
            }
        }
        m /= double(blk.block_dim / db);
        Mat model = Mat::Zero(blk.block_dim, blk.block_dim);
        for (long col = 0; col < blk.block_dim; ++col) {
            long jb = (col / stride) % db;
            for (long ib = 0; ib < db; ++ib) {
                long row = (col / period) * period + ib * stride + col % stride;
                model(row, col) = m(ib, jb);
            }
        }
        out += blk.basis * model * blk.basis.adjoint();
    }
    return out;
}

RegionPartition region_partition(const HamiltonianSpec& h, const Config& c,
                                 const ValidityReport& report) {
    if (!h.lattice || h.lattice->dim() != 2)
        throw std::invalid_argument("region_partition: d = 2 lattice required");
    if (!report.valid) throw std::invalid_argument("region_partition: configuration not valid");
    const Lattice& lat = *h.lattice;
    int l = report.block_size;
    int per = lat.size() / l;

    // Hole anchor coordinates per block grid position.
    auto hole_xy = [&](int bi, int bj) {
        int block = bi * per + bj;  // axis-0 major, matching block ids
        const Hole& hole = *report.blocks[std::size_t(block)].chosen;
        return lat.cell_anchor(hole.center.dim, hole.center.id);
    };

    std::set<int> cut;
    auto add_h_edge = [&](int x, int y) {
        cut.insert(lat.cell_id({x % lat.size(), ((y % lat.size()) + lat.size()) % lat.size(), 0, 0}, 1 << 0));
    };
    auto add_v_edge = [&](int x, int y) {
        cut.insert(lat.cell_id({((x % lat.size()) + lat.size()) % lat.size(), y % lat.size(), 0, 0}, 1 << 1));
    };
    if (per > 1) {
        for (int bi = 0; bi < per; ++bi) {
            for (int bj = 0; bj < per; ++bj) {
                auto a = hole_xy(bi, bj);
                // Axis-0 curve: segment through the hole, then a jog along
                // the block boundary to the next hole's line.
                auto right = hole_xy((bi + 1) % per, bj);
                for (int x = bi * l; x < (bi + 1) * l; ++x) add_h_edge(x, a[1]);
                int xj = ((bi + 1) * l) % lat.size();
                int y0 = std::min(a[1], right[1]), y1 = std::max(a[1], right[1]);
                for (int y = y0; y < y1; ++y) cut.insert(lat.cell_id({xj, y, 0, 0}, 1 << 1));
                // Axis-1 curve and its jog.
                auto up = hole_xy(bi, (bj + 1) % per);
                for (int y = bj * l; y < (bj + 1) * l; ++y) add_v_edge(a[0], y);
                int yj = ((bj + 1) * l) % lat.size();
                int x0 = std::min(a[0], up[0]), x1 = std::max(a[0], up[0]);
                for (int x = x0; x < x1; ++x) cut.insert(lat.cell_id({x, yj, 0, 0}, 1 << 0));
            }
        }
    }

    // Flood fill faces across edges that are not cut.
    int nf = lat.n_cells(2);
    std::vector<int> face_region(std::size_t(nf), -1);
    int n_regions = 0;
    for (int f0 = 0; f0 < nf; ++f0) {
        if (face_region[std::size_t(f0)] >= 0) continue;
        int label = n_regions++;
        std::deque<int> queue{f0};
        face_region[std::size_t(f0)] = label;
        while (!queue.empty()) {
            int f = queue.front();
            queue.pop_front();
            for (const auto& e : lat.boundary({2, f})) {
                if (cut.count(e.id)) continue;
                for (const auto& g : lat.coboundary({1, e.id})) {
                    if (g.id != f && face_region[std::size_t(g.id)] < 0) {
                        face_region[std::size_t(g.id)] = label;
                        queue.push_back(g.id);
                    }
                }
            }
        }
    }

    RegionPartition part;
    part.n_regions = n_regions;
    part.cut_edges.assign(cut.begin(), cut.end());
    part.region_of_qubit.resize(std::size_t(lat.n_qubits()));
    for (int e = 0; e < lat.n_qubits(); ++e) {
        auto cofaces = lat.coboundary({1, e});
        int f0 = std::min(cofaces[0].id, cofaces[1].id);
        int f1 = std::max(cofaces[0].id, cofaces[1].id);
        if (cut.count(e)) {
            part.region_of_qubit[std::size_t(e)] = face_region[std::size_t(f0)];
            int ra = face_region[std::size_t(f0)], rb = face_region[std::size_t(f1)];
            if (ra != rb) part.adjacent.insert({std::min(ra, rb), std::max(ra, rb)});
        } else {
            part.region_of_qubit[std::size_t(e)] = face_region[std::size_t(f0)];
        }
    }

    // Defining property: every active term touches at most two regions,
    // and only adjacent ones.
    for (std::size_t t = 0; t < h.n_terms(); ++t) {
        if (!c.bits.get(t)) continue;
        std::set<int> seen;
        for (int q : h.terms[t].support) seen.insert(part.region_of_qubit[std::size_t(q)]);
        if (seen.size() > 2)
            throw std::runtime_error("region_partition: active term meets three regions");
        if (seen.size() == 2) {
            auto it = seen.begin();
            int ra = *it++;
            int rb = *it;
            if (!part.adjacent.count({std::min(ra, rb), std::max(ra, rb)}))
                throw std::runtime_error(
                    "region_partition: active term joins non-adjacent regions");
        }
    }
    return part;
}

std::vector<std::vector<int>> small_supports(const Lattice& lat, int l_star) {
    std::set<std::vector<int>> seen;
    for (int q = 0; q < lat.n_qubits(); ++q) {
        for (int r = 0; 2 * r < l_star + 1; ++r) {
            std::vector<int> ball = lat.ball({lat.qubit_dim(), q}, r);
            int diam = 0;
            for (std::size_t i = 0; i < ball.size() && diam < l_star; ++i)
                for (std::size_t j = i + 1; j < ball.size(); ++j)
                    diam = std::max(diam, lat.qubit_distance(ball[i], ball[j], l_star + 1));
            if (diam < l_star) seen.insert(ball);
        }
    }
    return {seen.begin(), seen.end()};
}

double degeneracy_eps_stabilizer(const PauliGroup& stab, int n_qubits,
                                 const std::vector<std::vector<int>>& supports) {
    double eps = 0.0;
    for (const auto& sup : supports) {
        std::size_t k = sup.size();
        for (std::uint64_t word = 1; word < (std::uint64_t(1) << (2 * k)); ++word) {
            Pauli o{std::size_t(n_qubits)};
            for (std::size_t i = 0; i < k; ++i) {
                int code = int((word >> (2 * i)) & 3);
                if (code & 1) o.x.set(std::size_t(sup[i]), true);
                if (code & 2) o.z.set(std::size_t(sup[i]), true);
            }
            if (and_popcount(o.x, o.z) % 2 == 1) o.phase_exp = 1;  // Hermitian basis element
            bool anti = false;
            for (const auto& row : stab.echelon_rows())
                if (!commutes(o, row)) {
                    anti = true;
                    break;
                }
            if (anti) continue;                  // P O P = 0
            if (stab.member(o).has_value()) continue;  // P O P = +-P
            return 1.0;                          // logical: unit distance from scalars
        }
    }
    return eps;
}

double degeneracy_eps_dense(const Mat& projector, int n_qubits,
                            const std::vector<std::vector<int>>& supports) {
    long dim = projector.rows();
    Eigen::SelfAdjointEigenSolver<Mat> es(projector);
    std::vector<long> keep;
    for (long i = 0; i < dim; ++i)
        if (es.eigenvalues()(i) > 0.5) keep.push_back(i);
    if (keep.empty()) throw std::invalid_argument("degeneracy_eps_dense: zero projector");
    Mat v(dim, long(keep.size()));
    for (std::size_t i = 0; i < keep.size(); ++i) v.col(long(i)) = es.eigenvectors().col(keep[i]);

    static const std::complex<double> I{0, 1};
    Mat sigma[4];
    sigma[0] = Mat::Identity(2, 2);
    sigma[1] = Mat::Zero(2, 2);
    sigma[1] << 0, 1, 1, 0;
    sigma[2] = Mat::Zero(2, 2);
    sigma[2] << 0, -I, I, 0;
    sigma[3] = Mat::Zero(2, 2);
    sigma[3] << 1, 0, 0, -1;

    double eps = 0.0;
    for (const auto& sup : supports) {
        std::size_t k = sup.size();
        for (std::uint64_t word = 1; word < (std::uint64_t(1) << (2 * k)); ++word) {
            // Embedded Pauli product; qubit 0 is the most significant factor.
            Mat full = Mat::Ones(1, 1);
            std::vector<int> code(std::size_t(n_qubits), 0);
            for (std::size_t i = 0; i < k; ++i) code[std::size_t(sup[i])] = int((word >> (2 * i)) & 3);
            for (int q = n_qubits - 1; q >= 0; --q) {
                Mat next(full.rows() * 2, full.cols() * 2);
                static const int to_pauli[4] = {0, 1, 3, 2};  // I, X, Z, Y codes
                const Mat& s = sigma[to_pauli[code[std::size_t(q)]]];
                for (long a = 0; a < 2; ++a)
                    for (long b = 0; b < 2; ++b)
                        next.block(a * full.rows(), b * full.cols(), full.rows(), full.cols()) =
                            s(a, b) * full;
                full = std::move(next);
            }
            Mat m = v.adjoint() * full * v;
            Eigen::SelfAdjointEigenSolver<Mat> ms(m);
            double lo = ms.eigenvalues().minCoeff(), hi = ms.eigenvalues().maxCoeff();
            eps = std::max(eps, (hi - lo) / 2.0);
        }
    }
    return eps;
}

}  // namespace gibbslab
