#include "gibbslab/pauli.hpp"

#include <random>

#include "doctest.h"
#include "gibbslab/incremental_group.hpp"
#include "support/dense_oracle.hpp"

using namespace gibbslab;
using testsup::pauli_dense;

namespace {

Pauli random_pauli(int n, std::mt19937_64& rng) {
    Pauli p(n);
    p.phase_exp = std::uint8_t(rng() & 3);
    for (int q = 0; q < n; ++q) {
        p.x.set(q, rng() & 1);
        p.z.set(q, rng() & 1);
    }
    return p;
}

Pauli random_hermitian_pauli(int n, std::mt19937_64& rng) {
    Pauli p = random_pauli(n, rng);
    if (!is_hermitian(p)) p.phase_exp = std::uint8_t((p.phase_exp + 1) & 3);
    return p;
}

std::vector<Pauli> random_commuting_family(int n, int k, std::mt19937_64& rng) {
    std::vector<Pauli> fam;
    int guard = 0;
    while (int(fam.size()) < k && guard++ < 10000) {
        Pauli p = random_hermitian_pauli(n, rng);
        if (p.is_identity_bits()) continue;
        bool ok = true;
        for (const auto& q : fam)
            if (!commutes(p, q)) {
                ok = false;
                break;
            }
        if (ok) fam.push_back(p);
    }
    return fam;
}

bool dense_equal(const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& b, double tol = 1e-12) {
    return (a - b).cwiseAbs().maxCoeff() <= tol;
}

}  // namespace

TEST_CASE("pauli multiplication matches frozen small cases") {
    // Z * X = i Y
    Pauli z1 = pauli_from_string("+Z"), x1 = pauli_from_string("+X");
    CHECK(to_string(mul(z1, x1)) == "iY");
    // X * X = I
    CHECK(to_string(mul(x1, x1)) == "+I");
    // (X o Z) * (Z o Z) = -i (Y o I)
    Pauli a = pauli_from_string("+XZ"), b = pauli_from_string("+ZZ");
    CHECK(to_string(mul(a, b)) == "-iYI");
}

TEST_CASE("pauli multiplication is phase-exact against dense matrices, exhaustive n<=2") {
    for (int n = 1; n <= 2; ++n) {
        std::vector<Pauli> all;
        for (int ph = 0; ph < 4; ++ph)
            for (int xb = 0; xb < (1 << n); ++xb)
                for (int zb = 0; zb < (1 << n); ++zb) {
                    Pauli p(n);
                    p.phase_exp = std::uint8_t(ph);
                    for (int q = 0; q < n; ++q) {
                        p.x.set(q, (xb >> q) & 1);
                        p.z.set(q, (zb >> q) & 1);
                    }
                    all.push_back(p);
                }
        for (const auto& p : all)
            for (const auto& q : all)
                REQUIRE(dense_equal(pauli_dense(mul(p, q)), pauli_dense(p) * pauli_dense(q)));
    }
}

TEST_CASE("pauli multiplication randomized n=6 against dense matrices") {
    std::mt19937_64 rng(7);
    for (int it = 0; it < 1000; ++it) {
        Pauli p = random_pauli(6, rng), q = random_pauli(6, rng);
        REQUIRE(dense_equal(pauli_dense(mul(p, q)), pauli_dense(p) * pauli_dense(q)));
    }
}

TEST_CASE("commutation agrees with the dense commutator") {
    std::mt19937_64 rng(11);
    for (int it = 0; it < 300; ++it) {
        Pauli p = random_pauli(4, rng), q = random_pauli(4, rng);
        Eigen::MatrixXcd pd = pauli_dense(p), qd = pauli_dense(q);
        Eigen::MatrixXcd c = pd * qd - qd * pd;
        CHECK(commutes(p, q) == (c.cwiseAbs().maxCoeff() <= 1e-12));
    }
    Pauli any = random_pauli(4, rng);
    CHECK(commutes(any, Pauli::identity(4)));
}

TEST_CASE("hermiticity test matches the dense adjoint") {
    std::mt19937_64 rng(13);
    for (int it = 0; it < 200; ++it) {
        Pauli p = random_pauli(5, rng);
        auto d = pauli_dense(p);
        CHECK(is_hermitian(p) == dense_equal(d, d.adjoint()));
        REQUIRE(dense_equal(pauli_dense(adjoint(p)), d.adjoint()));
    }
}

TEST_CASE("rotation conjugation: commuting and anticommuting cases") {
    Pauli z = pauli_from_string("+Z");
    CHECK(conjugate_by_rotation(z, z) == z);

    std::mt19937_64 rng(17);
    for (int it = 0; it < 200; ++it) {
        int n = 3;
        Pauli p = random_hermitian_pauli(n, rng);
        if (p.is_identity_bits()) continue;
        Pauli q = random_pauli(n, rng);
        // Dense U = (I + i P)/sqrt(2); conjugation U q U^dag.
        Eigen::MatrixXcd pd = pauli_dense(p);
        std::size_t dim = std::size_t(1) << n;
        Eigen::MatrixXcd eye = Eigen::MatrixXcd::Identity(long(dim), long(dim));
        Eigen::MatrixXcd u = (eye + std::complex<double>(0, 1) * pd) / std::sqrt(2.0);
        REQUIRE(dense_equal(pauli_dense(conjugate_by_rotation(p, q)),
                            u * pauli_dense(q) * u.adjoint()));
    }
}

TEST_CASE("rotation conjugation preserves commutation and hermiticity") {
    std::mt19937_64 rng(19);
    for (int it = 0; it < 300; ++it) {
        Pauli p = random_hermitian_pauli(4, rng);
        if (p.is_identity_bits()) continue;
        Pauli q = random_pauli(4, rng), r = random_pauli(4, rng);
        Pauli q2 = conjugate_by_rotation(p, q), r2 = conjugate_by_rotation(p, r);
        CHECK(commutes(q, r) == commutes(q2, r2));
        Pauli qh = random_hermitian_pauli(4, rng);
        CHECK(is_hermitian(conjugate_by_rotation(p, qh)));
    }
}

TEST_CASE("conjugating twice by the same generator gives p q p") {
    std::mt19937_64 rng(23);
    for (int it = 0; it < 200; ++it) {
        Pauli p = random_hermitian_pauli(4, rng);
        if (p.is_identity_bits()) continue;
        Pauli q = random_pauli(4, rng);
        Pauli twice = conjugate_by_rotation(p, conjugate_by_rotation(p, q));
        CHECK(twice == mul(p, mul(q, p)));
        REQUIRE(dense_equal(pauli_dense(twice),
                            pauli_dense(p) * pauli_dense(q) * pauli_dense(p)));
    }
}

TEST_CASE("rotation generator rejects non-Hermitian input") {
    // -iY = X Z is anti-Hermitian: it squares to -I.
    Pauli g = pauli_from_string("-iY");
    CHECK(is_hermitian(g) == false);
    CHECK_THROWS_AS(conjugate_by_rotation(g, pauli_from_string("+X")), std::invalid_argument);
}

TEST_CASE("mismatched qubit index sets are rejected") {
    Pauli a = pauli_from_string("+XZ"), b = pauli_from_string("+X");
    CHECK_THROWS_AS(mul(a, b), std::invalid_argument);
    CHECK_THROWS_AS(commutes(a, b), std::invalid_argument);
    PauliGroup g({a});
    CHECK_THROWS_AS(g.add_generator(b), std::invalid_argument);
}

TEST_CASE("membership queries require Hermitian operators") {
    PauliGroup g({pauli_from_string("+XX")});
    CHECK_THROWS_AS(g.member(pauli_from_string("-iYI") /* = XZ x I, anti-Hermitian */),
                    std::invalid_argument);
}

TEST_CASE("string round trips") {
    std::mt19937_64 rng(29);
    for (int it = 0; it < 200; ++it) {
        Pauli p = random_pauli(7, rng);
        CHECK(pauli_from_string(to_string(p)) == p);
    }
    CHECK(to_string(pauli_from_string("-iXYZI")) == "-iXYZI");
}

TEST_CASE("group membership: signs, non-members, -identity detection") {
    Pauli xx = pauli_from_string("+XX"), zz = pauli_from_string("+ZZ");
    Pauli yy = pauli_from_string("+YY");

    PauliGroup g({xx, zz});
    CHECK(g.rank() == 2);
    CHECK(g.member(mul(xx, zz)) == 1);
    CHECK(g.member(yy) == -1);  // XX * ZZ = -YY
    CHECK(!g.member(pauli_from_string("+XI")).has_value());
    CHECK(!g.contains_minus_identity());

    PauliGroup bad({xx, zz, yy});
    CHECK(bad.contains_minus_identity());
    CHECK(bad.rank() == 2);

    PauliGroup empty(2);
    CHECK(empty.rank() == 0);
    CHECK(!empty.member(xx).has_value());
    CHECK(empty.member(Pauli::identity(2)) == 1);
}

TEST_CASE("member reproduces group elements exactly, phase included") {
    std::mt19937_64 rng(31);
    for (int rep = 0; rep < 50; ++rep) {
        auto fam = random_commuting_family(6, 4, rng);
        PauliGroup g(fam);
        // A random product of generators must come back with sign +1.
        Pauli prod = Pauli::identity(6);
        for (const auto& p : fam)
            if (rng() & 1) prod = mul(prod, p);
        if (prod.is_identity_bits()) continue;
        CHECK(g.member(prod) == 1);
        Pauli minus = prod;
        minus.phase_exp = std::uint8_t((minus.phase_exp + 2) & 3);
        CHECK(g.member(minus) == -1);
    }
}

TEST_CASE("incremental group tracks rank and membership through flip churn") {
    std::mt19937_64 rng(37);
    for (int rep = 0; rep < 20; ++rep) {
        auto fam = random_commuting_family(6, 8, rng);
        IncrementalPauliGroup inc(fam);
        std::vector<char> on(fam.size(), 0);
        for (int step = 0; step < 200; ++step) {
            int t = int(rng() % fam.size());
            if (on[t]) {
                inc.deactivate(t);
                on[t] = 0;
            } else {
                auto st = inc.probe_inactive(t);
                if (st == IncrementalPauliGroup::Status::dependent_minus) continue;
                inc.activate(t);
                on[t] = 1;
            }
            if (step % 25 == 0) REQUIRE(inc.verify_against_rebuild());
        }
        REQUIRE(inc.verify_against_rebuild());
    }
}

TEST_CASE("incremental group probe matches the static rank difference") {
    std::mt19937_64 rng(41);
    auto fam = random_commuting_family(6, 8, rng);
    IncrementalPauliGroup inc(fam);
    std::vector<char> on(fam.size(), 0);
    for (int step = 0; step < 300; ++step) {
        int t = int(rng() % fam.size());
        std::vector<Pauli> others;
        for (std::size_t i = 0; i < fam.size(); ++i)
            if (on[i] && int(i) != t) others.push_back(fam[i]);
        PauliGroup without(others);
        auto with = without;
        with.add_generator(fam[t]);
        bool dependent = (with.rank() == without.rank()) && !with.contains_minus_identity();
        if (on[t]) {
            CHECK(inc.dependent_on_others(t) == dependent);
            inc.deactivate(t);
            on[t] = 0;
        } else {
            auto st = inc.probe_inactive(t);
            if (with.contains_minus_identity()) {
                CHECK(st == IncrementalPauliGroup::Status::dependent_minus);
                continue;
            }
            CHECK((st == IncrementalPauliGroup::Status::dependent_plus) == dependent);
            inc.activate(t);
            on[t] = 1;
        }
    }
}
