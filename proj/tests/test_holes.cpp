#include "gibbslab/holes.hpp"

#include <cmath>
#include <set>

#include "doctest.h"

using namespace gibbslab;

namespace {

HamiltonianSpec toric2d(int L) { return toric_code(std::make_shared<Lattice>(2, L)); }

Config all_on(const HamiltonianSpec& h) {
    Config c(h.n_terms());
    for (std::size_t t = 0; t < h.n_terms(); ++t) c.bits.set(t, true);
    return c;
}

// Independent check of the defining property for one candidate center.
bool is_hole_brute(const HamiltonianSpec& h, const Config& c, const CellRef& center, int r) {
    std::vector<int> ball = h.lattice->ball(center, r);
    std::set<int> bs(ball.begin(), ball.end());
    for (std::size_t t = 0; t < h.n_terms(); ++t) {
        if (!c.bits.get(t)) continue;
        for (int q : h.terms[t].support)
            if (bs.count(q)) return false;
    }
    return true;
}

int total_cells(const Lattice& lat) {
    int n = 0;
    for (int k = 0; k <= lat.dim(); ++k) n += lat.n_cells(k);
    return n;
}

// Deactivates every term whose support meets the ball around the center.
void carve(const HamiltonianSpec& h, Config& c, const CellRef& center, int r) {
    std::vector<int> ball = h.lattice->ball(center, r);
    std::set<int> bs(ball.begin(), ball.end());
    for (std::size_t t = 0; t < h.n_terms(); ++t)
        for (int q : h.terms[t].support)
            if (bs.count(q)) c.bits.set(t, false);
}

}  // namespace

TEST_CASE("find_holes: empty and full configurations") {
    HamiltonianSpec h = toric2d(8);
    CHECK(h.r_int == 2);
    Config zero(h.n_terms());
    auto holes = find_holes(h, zero, 3);
    CHECK(int(holes.size()) == total_cells(*h.lattice));  // every cell qualifies
    CHECK(find_holes(h, all_on(h), 3).empty());
    CHECK_THROWS_AS(find_holes(h, zero, 2), std::invalid_argument);  // r must exceed r_int
}

TEST_CASE("find_holes matches the brute-force defining property") {
    HamiltonianSpec h = toric2d(8);
    Config c = all_on(h);
    carve(h, c, {0, h.lattice->vertex_id({2, 2, 0, 0})}, 3);
    auto holes = find_holes(h, c, 3);
    CHECK(!holes.empty());
    std::set<std::pair<int, int>> reported;
    for (const auto& hole : holes) {
        CHECK(is_hole_brute(h, c, hole.center, hole.radius));
        reported.insert({hole.center.dim, hole.center.id});
    }
    // And nothing qualifying was missed.
    for (int dim = 0; dim <= 2; ++dim)
        for (int id = 0; id < h.lattice->n_cells(dim); ++id)
            if (is_hole_brute(h, c, {dim, id}, 3)) CHECK(reported.count({dim, id}));
}

TEST_CASE("classify: corners on the empty configuration, invalid when full") {
    HamiltonianSpec h = toric2d(8);
    Config zero(h.n_terms());
    ValidityReport r = classify(h, zero, 4);
    CHECK(r.valid);
    CHECK(r.blocks.size() == 4);
    for (std::size_t b = 0; b < r.blocks.size(); ++b) {
        REQUIRE(r.blocks[b].has_hole);
        const Hole& hole = *r.blocks[b].chosen;
        // Enumeration-first hole: the block's corner vertex cell.
        CHECK(hole.center.dim == 0);
        auto anchor = h.lattice->cell_anchor(0, hole.center.id);
        CHECK(anchor[0] % 4 == 0);
        CHECK(anchor[1] % 4 == 0);
        CHECK(h.lattice->block_of_cell(hole.center, 4) == int(b));
    }
    ValidityReport bad = classify(h, all_on(h), 4);
    CHECK(!bad.valid);
    for (const auto& b : bad.blocks) CHECK(!b.has_hole);
    CHECK_THROWS_AS(classify(h, zero, 3), std::invalid_argument);  // 3 does not divide 8
}

TEST_CASE("classify: one carved hole per block yields a valid configuration") {
    HamiltonianSpec h = toric2d(8);
    Config c = all_on(h);
    for (int bx = 0; bx < 2; ++bx)
        for (int by = 0; by < 2; ++by)
            carve(h, c, {0, h.lattice->vertex_id({4 * bx + 2, 4 * by + 2, 0, 0})}, 3);
    ValidityReport r = classify(h, c, 4);
    CHECK(r.valid);
    for (const auto& b : r.blocks)
        CHECK(is_hole_brute(h, c, b.chosen->center, b.chosen->radius));
}

TEST_CASE("classify is monotone under extra deactivation") {
    HamiltonianSpec h = toric2d(8);
    Config c = all_on(h);
    carve(h, c, {0, h.lattice->vertex_id({2, 2, 0, 0})}, 3);
    carve(h, c, {0, h.lattice->vertex_id({6, 2, 0, 0})}, 3);
    carve(h, c, {0, h.lattice->vertex_id({2, 6, 0, 0})}, 3);
    carve(h, c, {0, h.lattice->vertex_id({6, 6, 0, 0})}, 3);
    ValidityReport before = classify(h, c, 4);
    CHECK(before.valid);
    // Turning more terms off can only create holes.
    Config more = c;
    for (std::size_t t = 0; t < h.n_terms(); t += 3) more.bits.set(t, false);
    CHECK(classify(h, more, 4).valid);
}

TEST_CASE("block-size solver: frozen example and minimality") {
    // Unit-diameter terms: r_int = 1/2, beta = 0.5, eps/V = 0.01.
    CHECK(solve_block_size(0.5, 0.5, 0.01, 1.0) == 2);

    for (double beta : {0.25, 0.5, 1.0}) {
        for (double ev : {0.05, 0.01, 1e-4}) {
            int l = solve_block_size(beta, 2.0, ev, 1.0);
            CHECK(hole_free_block_bound(beta, 2.0, l) <= ev);
            if (l > 1) CHECK(hole_free_block_bound(beta, 2.0, l - 1) > ev);
        }
    }
    // The bound decreases monotonically in the block size.
    for (int l = 1; l < 12; ++l)
        CHECK(hole_free_block_bound(0.5, 2.0, l + 1) < hole_free_block_bound(0.5, 2.0, l));
    // The literal closed form is negative for eps < 1, as printed.
    CHECK(literal_block_size_formula(0.5, 2.0, 0.01, 64.0) < 0.0);
    CHECK_THROWS_AS(solve_block_size(0.5, 2.0, 1.5, 1.0), std::invalid_argument);
}

TEST_CASE("invalid rate: free limit and bound comparison") {
    HamiltonianSpec h = toric2d(8);
    EnsembleParams p;
    p.beta = 1e-6;
    p.n_samples = 64;
    p.burn_in = 10;
    p.thinning = 1;
    p.seed = 7;
    InvalidRate low = invalid_rate(h, p, 4);
    CHECK(low.empirical.mean == 0.0);  // everything inactive: holes everywhere

    p.beta = 0.5;
    p.n_samples = 200;
    p.burn_in = 50;
    InvalidRate mid = invalid_rate(h, p, 4);
    CHECK(mid.bound <= 1.0);
    CHECK(mid.empirical.mean <= mid.bound + 3 * mid.empirical.stderr_ + 1e-12);
}

TEST_CASE("sample_valid produces valid configurations, deterministically") {
    HamiltonianSpec h = toric2d(8);
    EnsembleParams p;
    p.beta = 1.0;
    p.n_samples = 20;
    p.burn_in = 40;
    p.thinning = 2;
    p.seed = 11;
    auto configs = sample_valid_vector(h, p, 4);
    REQUIRE(configs.size() == 20);
    for (const auto& c : configs) CHECK(classify(h, c, 4).valid);
    // At this temperature unconstrained sampling would essentially
    // always be invalid, so the constraint is doing real work.
    CHECK(configs.back().bits.popcount() > 0);
    auto again = sample_valid_vector(h, p, 4);
    CHECK(configs == again);
}
