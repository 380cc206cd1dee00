#include "gibbslab/lattice.hpp"

#include <random>
#include <set>

#include "doctest.h"
#include "gibbslab/hamiltonian.hpp"
#include "gibbslab/thermal.hpp"

using namespace gibbslab;

TEST_CASE("cell counts per dimension and size") {
    Lattice l22(2, 2);
    CHECK(l22.n_vertices() == 4);
    CHECK(l22.n_cells(1) == 8);
    CHECK(l22.n_cells(2) == 4);
    CHECK(l22.n_qubits() == 8);

    Lattice l33(3, 3);
    CHECK(l33.n_vertices() == 27);
    CHECK(l33.n_cells(1) == 81);
    CHECK(l33.n_cells(2) == 81);
    CHECK(l33.n_cells(3) == 27);

    Lattice l42(4, 2);
    CHECK(l42.n_cells(2) == 96);  // 6 L^4 qubit faces
    CHECK(l42.n_qubits() == 96);

    CHECK_THROWS_AS(Lattice(5, 2), std::invalid_argument);
    CHECK_THROWS_AS(Lattice(3, 1), std::invalid_argument);
}

TEST_CASE("boundary and coboundary are mutually consistent") {
    std::mt19937_64 rng(3);
    for (int d : {2, 3, 4}) {
        Lattice lat(d, 3);
        for (int k = 1; k <= d; ++k) {
            for (int rep = 0; rep < 20; ++rep) {
                int id = int(rng() % std::uint64_t(lat.n_cells(k)));
                for (const auto& sub : lat.boundary({k, id})) {
                    auto up = lat.coboundary(sub);
                    CHECK(std::count(up.begin(), up.end(), CellRef{k, id}) == 1);
                }
            }
        }
        for (int k = 0; k < d; ++k) {
            for (int rep = 0; rep < 20; ++rep) {
                int id = int(rng() % std::uint64_t(lat.n_cells(k)));
                for (const auto& super : lat.coboundary({k, id})) {
                    auto down = lat.boundary(super);
                    CHECK(std::count(down.begin(), down.end(), CellRef{k, id}) == 1);
                }
            }
        }
    }
}

TEST_CASE("balls: radius zero, monotonicity, disjointness at distance") {
    Lattice lat(3, 6);
    // Radius zero around a vertex: exactly its incident edges.
    auto b0 = lat.ball({0, 0}, 0);
    CHECK(b0.size() == 6);
    CHECK(b0 == lat.incident_qubits({0, 0}));
    // Monotone in the radius.
    for (int r = 0; r < 4; ++r) {
        auto a = lat.ball({1, 5}, r), b = lat.ball({1, 5}, r + 1);
        std::set<int> bs(b.begin(), b.end());
        for (int q : a) CHECK(bs.count(q));
    }
    // Far-apart centers give disjoint balls.
    int far = lat.vertex_id({3, 3, 3, 0});
    auto b1 = lat.ball({0, 0}, 1), b2 = lat.ball({0, far}, 1);
    std::set<int> s1(b1.begin(), b1.end());
    for (int q : b2) CHECK(!s1.count(q));
}

TEST_CASE("blocks partition the vertices") {
    Lattice lat(2, 8);
    CHECK(lat.n_blocks(4) == 4);
    std::set<int> seen;
    for (int b = 0; b < 4; ++b) {
        auto verts = lat.block_vertices(b, 4);
        CHECK(verts.size() == 16);
        for (int v : verts) {
            CHECK(lat.block_of_vertex(v, 4) == b);
            CHECK(!seen.count(v));
            seen.insert(v);
        }
    }
    CHECK(int(seen.size()) == lat.n_vertices());
    CHECK_THROWS_AS(lat.n_blocks(3), std::invalid_argument);
    CHECK_THROWS_AS(lat.n_blocks(16), std::invalid_argument);
}

TEST_CASE("toric code term shapes and commutation") {
    auto lat3 = std::make_shared<Lattice>(3, 3);
    HamiltonianSpec h3 = toric_code(lat3);
    int stars = 0, plaqs = 0;
    for (const auto& t : h3.terms) {
        if (t.kind == TermKind::star) {
            ++stars;
            CHECK(t.support.size() == 6);
        } else {
            ++plaqs;
            CHECK(t.support.size() == 4);
        }
    }
    CHECK(stars == 27);
    CHECK(plaqs == 81);
    CHECK(h3.r_int == 2);

    auto lat4 = std::make_shared<Lattice>(4, 2);
    HamiltonianSpec h4 = toric_code(lat4);
    for (const auto& t : h4.terms) CHECK(t.support.size() == 6);
    CHECK(h4.n_terms() == 128);
    CHECK(h4.r_int == 2);
}

TEST_CASE("toric code group ranks and ground degeneracy") {
    auto lat2 = std::make_shared<Lattice>(2, 2);
    HamiltonianSpec h2 = toric_code(lat2);
    Config all(h2.n_terms());
    for (std::size_t t = 0; t < h2.n_terms(); ++t) all.bits.set(t, true);
    PauliGroup g = active_group(h2, all);
    CHECK(g.rank() == 6);  // 2 L^2 - 2 with one constraint per species
    CHECK(ground_degeneracy(h2, all).value() == 4.0);

    auto lat3 = std::make_shared<Lattice>(3, 3);
    HamiltonianSpec h3 = toric_code(lat3);
    Config all3(h3.n_terms());
    for (std::size_t t = 0; t < h3.n_terms(); ++t) all3.bits.set(t, true);
    CHECK(ground_degeneracy(h3, all3).value() == 8.0);
}

TEST_CASE("global constraints: star product is identity, closed plaquette products too") {
    for (int d : {2, 3}) {
        auto lat = std::make_shared<Lattice>(d, 3);
        HamiltonianSpec h = toric_code(lat);
        Pauli star_prod = Pauli::identity(std::size_t(h.n_qubits));
        for (const auto& t : h.terms)
            if (t.kind == TermKind::star) star_prod = mul(star_prod, t.op);
        CHECK(star_prod == Pauli::identity(std::size_t(h.n_qubits)));
    }
    // d = 3: the faces of one cube form a closed dual surface.
    auto lat = std::make_shared<Lattice>(3, 3);
    HamiltonianSpec h = toric_code(lat);
    Pauli prod = Pauli::identity(std::size_t(h.n_qubits));
    for (const auto& f : lat->boundary({3, 5}))
        prod = mul(prod, plaquette_operator(*lat, f));
    CHECK(prod == Pauli::identity(std::size_t(h.n_qubits)));
    // And it is a member (+1) of the plaquette group.
    std::vector<Pauli> plaqs;
    for (const auto& t : h.terms)
        if (t.kind == TermKind::plaquette) plaqs.push_back(t.op);
    PauliGroup pg(plaqs);
    Pauli two = mul(plaquette_operator(*lat, {2, 0}), plaquette_operator(*lat, {2, 1}));
    CHECK(pg.member(two) == 1);
}

TEST_CASE("oriented surfaces: star surface, closure, stepping") {
    Lattice lat(3, 4);
    OrientedSurface s = surface_of_vertices(lat, {0});
    CHECK(s.entries.size() == 6);
    CHECK(surface_is_closed(lat, s));
    for (const auto& [bond, outward] : s.entries) {
        auto ends = lat.edge_endpoints(bond);
        CHECK((ends[0] == 0 || ends[1] == 0));
        CHECK(outward != 0);
    }
    // Stepping outward engulfs the target and stays closed.
    int bond = s.entries.begin()->first;
    int target = s.entries.begin()->second;
    OrientedSurface s2 = step_outward(lat, s, bond);
    CHECK(s2.enclosed.count(target));
    CHECK(surface_is_closed(lat, s2));
    CHECK(!s2.entries.count(bond));
    CHECK_THROWS_AS(step_outward(lat, s2, bond), std::invalid_argument);
}

TEST_CASE("hole boundary surface encloses the interior vertex set") {
    auto lat = std::make_shared<Lattice>(3, 6);
    Hole hole{{1, 0}, 3};
    OrientedSurface s = hole_boundary_surface(*lat, hole, 6);
    CHECK(!s.enclosed.empty());
    CHECK(surface_is_closed(*lat, s));
    // Enumeration oracle: interior vertices are those whose whole edge
    // star sits inside the ball; entries are the outward cut.
    std::vector<int> ball = lat->ball(hole.center, hole.radius);
    std::set<int> ball_set(ball.begin(), ball.end());
    std::set<int> interior;
    for (int v = 0; v < lat->n_vertices(); ++v) {
        bool all = true;
        for (int e : lat->vertex_edges(v))
            if (!ball_set.count(e)) all = false;
        if (all) interior.insert(v);
    }
    for (const auto& [v, unused] : s.enclosed) CHECK(interior.count(v));
    std::size_t cut = 0;
    for (int v : interior)
        for (int e : lat->vertex_edges(v)) {
            auto ends = lat->edge_endpoints(e);
            int w = (ends[0] == v) ? ends[1] : ends[0];
            if (!interior.count(w)) ++cut;
        }
    CHECK(s.entries.size() == cut);
    for (const auto& [bond, outward] : s.entries) CHECK(!interior.count(outward));

    // Two far-apart holes give disjoint surfaces.
    Hole other{{1, lat->cell_id({3, 3, 3, 0}, 1)}, 3};
    OrientedSurface s2 = hole_boundary_surface(*lat, other, 6);
    for (const auto& [bond, unused] : s.entries) CHECK(!s2.entries.count(bond));
}

TEST_CASE("hole surface block confinement check") {
    auto lat = std::make_shared<Lattice>(3, 6);
    Hole hole{{1, 0}, 3};
    // Ball of radius 3 cannot sit strictly inside a 3-block.
    CHECK_THROWS_AS(hole_boundary_surface(*lat, hole, 3), std::domain_error);
}

TEST_CASE("logical operators: commutation with the code and single crossing") {
    auto lat2 = std::make_shared<Lattice>(2, 4);
    HamiltonianSpec h2 = toric_code(lat2);
    Pauli ux = logical_string_x(*lat2, 1);
    Pauli uz = logical_string_z(*lat2, 2);
    for (const auto& t : h2.terms) {
        CHECK(commutes(ux, t.op));
        CHECK(commutes(uz, t.op));
    }
    CHECK(!commutes(ux, uz));
    // Neither is generated by the stabilizers.
    Config all(h2.n_terms());
    for (std::size_t t = 0; t < h2.n_terms(); ++t) all.bits.set(t, true);
    PauliGroup g = active_group(h2, all);
    CHECK(!g.member(ux).has_value());
    CHECK(!g.member(uz).has_value());

    auto lat4 = std::make_shared<Lattice>(4, 2);
    HamiltonianSpec h4 = toric_code(lat4);
    Pauli mx = logical_membrane_x(*lat4, 0, 1, 0, 0);
    Pauli mz = logical_membrane_z(*lat4, 0, 1, 0, 0);
    for (const auto& t : h4.terms) {
        CHECK(commutes(mx, t.op));
        CHECK(commutes(mz, t.op));
    }
    CHECK(!commutes(mx, mz));
    CHECK(and_popcount(mx.x, mz.z) == 1);  // they share exactly one face
}

TEST_CASE("parallel logical pair is a stabilizer product") {
    auto lat2 = std::make_shared<Lattice>(2, 8);
    HamiltonianSpec h2 = toric_code(lat2);
    Config all(h2.n_terms());
    for (std::size_t t = 0; t < h2.n_terms(); ++t) all.bits.set(t, true);
    PauliGroup g = active_group(h2, all);
    Pauli pair = mul(logical_string_x(*lat2, 1), logical_string_x(*lat2, 5));
    CHECK(g.member(pair) == 1);

    auto lat4 = std::make_shared<Lattice>(4, 2);
    HamiltonianSpec h4 = toric_code(lat4);
    Config all4(h4.n_terms());
    for (std::size_t t = 0; t < h4.n_terms(); ++t) all4.bits.set(t, true);
    PauliGroup g4 = active_group(h4, all4);
    Pauli pair4 = mul(logical_membrane_x(*lat4, 0, 1, 0, 0), logical_membrane_x(*lat4, 0, 1, 1, 0));
    CHECK(g4.member(pair4) == 1);
}
