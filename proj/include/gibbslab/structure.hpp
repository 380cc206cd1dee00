#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <set>
#include <utility>
#include <vector>

#include "gibbslab/holes.hpp"
#include "gibbslab/pauli.hpp"

namespace gibbslab {

using Mat = Eigen::MatrixXcd;

// One product term of an operator Schmidt decomposition. The right
// factors form an orthonormal family under the trace inner product; the
// weights sit in the left factors.
struct SchmidtTerm {
    Mat left;
    Mat right;
};

// H = sum_g left(g) x right(g) for an operator on a dim_a * dim_b space.
// Reconstruction is verified to 1e-10 internally.
std::vector<SchmidtTerm> operator_schmidt(const Mat& h_ab, int dim_a, int dim_b);

// Direct-sum block of a region Hilbert space with per-neighbor tensor
// factors. Basis columns are ordered factor-major (neighbor 0 slowest),
// inner index fastest.
struct RegionBlock {
    Mat basis;       // dim x block_dim, orthonormal columns
    Mat projector;   // basis * basis^dag
    int block_dim = 0;
    std::vector<int> factor_dims;  // one per neighbor
    int inner_dim = 0;
};

struct BlockDecomposition {
    int dim = 0;
    int n_neighbors = 0;
    std::vector<RegionBlock> blocks;
    double max_residual = 0.0;  // worst canonical-form residual seen
};

// Simultaneous block decomposition of mutually commuting per-neighbor
// operator algebras: eigenspaces of a random algebra element are closed
// under the generators into central blocks, then matrix units split each
// block into per-neighbor tensor factors. Verified; throws on failure.
BlockDecomposition decompose_region(const std::vector<std::vector<Mat>>& generators_per_neighbor,
                                    std::uint64_t seed = 1);

// Keeps only the component of `op` acting on the given neighbor's factor
// within each block (identity elsewhere); the canonical form used to
// reconstruct cross-region terms.
Mat canonical_neighbor_action(const BlockDecomposition& dec, int neighbor, const Mat& op);

// Region labels for the qubits of a valid 2D configuration: boundary
// curves run through the block holes so that regions meet only at holes.
// The defining property (every active term sees at most two, adjacent,
// regions) is checked and a violation throws.
struct RegionPartition {
    int n_regions = 0;
    std::vector<int> region_of_qubit;
    std::set<std::pair<int, int>> adjacent;
    std::vector<int> cut_edges;
};
RegionPartition region_partition(const HamiltonianSpec& h, const Config& c,
                                 const ValidityReport& report);

// Candidate operator supports: qubit-metric balls of diameter < l_star.
std::vector<std::vector<int>> small_supports(const Lattice& lat, int l_star);

// Worst-case min_z ||P O P - z P|| over Hermitian Pauli basis elements O
// on each support. For a stabilizer projector this is 0 or 1 exactly.
double degeneracy_eps_stabilizer(const PauliGroup& stab, int n_qubits,
                                 const std::vector<std::vector<int>>& supports);
// Dense version for arbitrary projectors on up to ~10 qubits.
double degeneracy_eps_dense(const Mat& projector, int n_qubits,
                            const std::vector<std::vector<int>>& supports);

}  // namespace gibbslab
