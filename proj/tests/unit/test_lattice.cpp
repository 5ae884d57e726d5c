#include <doctest.h>

#include "hyperlat/json_io.hpp"
#include "hyperlat/lattice.hpp"
#include "support/oracles.hpp"
#include "support/test_util.hpp"

using namespace hyperlat;
using testutil::throws_code;

static Lattice u_lattice() { return make_lattice("U", IntMatrix{{0, 1}, {1, 0}}); }

TEST_CASE("lattice construction validates the form") {
    CHECK(throws_code([] { make_lattice("bad", IntMatrix(2, 3)); }, ErrorKind::input, "NonSquare"));
    CHECK(throws_code([] { make_lattice("bad", IntMatrix(0, 0)); }, ErrorKind::input,
                      "EmptyLattice"));
    CHECK(throws_code([] { make_lattice("bad", IntMatrix{{0, 1}, {2, 0}}); }, ErrorKind::input,
                      "NotSymmetric"));
    CHECK(throws_code([] { make_lattice("bad", IntMatrix{{1, 1}, {1, 1}}); }, ErrorKind::input,
                      "DegenerateForm"));
}

TEST_CASE("inner products on the hyperbolic plane") {
    Lattice u = u_lattice();
    LatticeVector e{u.label, IntVec{Int(1), Int(0)}};
    LatticeVector f{u.label, IntVec{Int(0), Int(1)}};
    LatticeVector s{u.label, IntVec{Int(1), Int(1)}};
    CHECK(inner(u, e, e) == 0);
    CHECK(inner(u, e, f) == 1);
    CHECK(inner(u, s, s) == 2);
    CHECK(throws_code([&] { inner(u, LatticeVector{"other", IntVec{Int(1), Int(0)}}, e); },
                      ErrorKind::input, "OwnerMismatch"));
    CHECK(throws_code([&] { inner(u, LatticeVector{u.label, IntVec{Int(1)}}, e); },
                      ErrorKind::input, "BadShape"));
}

TEST_CASE("signatures of the fixture lattices") {
    CHECK(signature(oracles::fixture_lattice("U")) == std::pair<long, long>(1, 1));
    CHECK(signature(oracles::fixture_lattice("U2")) == std::pair<long, long>(1, 1));
    CHECK(signature(oracles::fixture_lattice("U_m2")) == std::pair<long, long>(1, 2));
    CHECK(signature(oracles::fixture_lattice("S4")) == std::pair<long, long>(1, 3));
    CHECK(signature(oracles::fixture_lattice("Z2")) == std::pair<long, long>(2, 0));
    CHECK(signature(oracles::fixture_lattice("Q2")) == std::pair<long, long>(1, 1));
    CHECK(signature(oracles::fixture_lattice("L22")) == std::pair<long, long>(1, 21));
}

TEST_CASE("parity and hyperbolicity") {
    CHECK(is_even(oracles::fixture_lattice("U")));
    CHECK(is_even(oracles::fixture_lattice("S4")));
    CHECK(is_even(oracles::fixture_lattice("Q2")));
    CHECK(!is_even(oracles::fixture_lattice("Z2")));

    CHECK(is_hyperbolic(oracles::fixture_lattice("U")));
    CHECK(is_hyperbolic(oracles::fixture_lattice("S4")));
    CHECK(is_hyperbolic(oracles::fixture_lattice("L22")));
    CHECK(!is_hyperbolic(oracles::fixture_lattice("Z2")));
}

TEST_CASE("isometry validation") {
    Lattice u = u_lattice();
    Isometry swap = verify_isometry(u, IntMatrix{{0, 1}, {1, 0}});
    CHECK(swap.owner == u.label);
    CHECK(swap.matrix == IntMatrix{{0, 1}, {1, 0}});

    CHECK(throws_code([&] { verify_isometry(u, IntMatrix{{1, 1}, {0, 1}}); }, ErrorKind::input,
                      "NotAnIsometry"));
    CHECK(throws_code([&] { verify_isometry(u, IntMatrix{{2, 0}, {0, 0}}); }, ErrorKind::input,
                      "NotAnIsometry"));
    CHECK(throws_code([&] { verify_isometry(u, IntMatrix(3, 3)); }, ErrorKind::input, "BadShape"));

    Lattice s4 = oracles::fixture_lattice("S4");
    nlohmann::json j = oracles::load_fixture("S4_salem");
    Isometry f4 = jsonio::json_isometry(j, s4);
    CHECK(f4.matrix.at(0, 0) == 10);
}

TEST_CASE("embeddings carry the restricted form and the index") {
    Lattice u = u_lattice();
    Embedding e = make_embedding(u, IntMatrix{{1, 0}, {0, 2}});
    CHECK(e.index == 2);
    CHECK(e.sub_gram == IntMatrix{{0, 2}, {2, 0}});
    CHECK(e.sub_label() == "U/sub");
    Lattice sub = e.sub_lattice();
    CHECK(sub.rank() == 2);
    CHECK(sub.gram == e.sub_gram);

    Embedding full = make_embedding(u, IntMatrix::identity(2));
    CHECK(full.index == 1);
    CHECK(full.sub_gram == u.gram);

    CHECK(throws_code([&] { make_embedding(u, IntMatrix{{1, 1}, {1, 1}}); }, ErrorKind::input,
                      "SingularBasis"));
    CHECK(throws_code([&] { make_embedding(u, IntMatrix(3, 3)); }, ErrorKind::input, "BadShape"));
}

TEST_CASE("positive cone membership") {
    Lattice u = u_lattice();
    LatticeVector a{u.label, IntVec{Int(1), Int(1)}};
    LatticeVector b{u.label, IntVec{Int(2), Int(1)}};
    LatticeVector neg{u.label, IntVec{Int(-1), Int(-1)}};
    CHECK(same_positive_cone(u, a, b));
    CHECK(!same_positive_cone(u, a, neg));
    CHECK(same_positive_cone(u, neg, neg));

    CHECK(throws_code(
        [&] {
            Lattice z2 = oracles::fixture_lattice("Z2");
            LatticeVector v{z2.label, IntVec{Int(1), Int(0)}};
            same_positive_cone(z2, v, v);
        },
        ErrorKind::input, "NotHyperbolic"));
    CHECK(throws_code(
        [&] {
            LatticeVector iso{u.label, IntVec{Int(1), Int(0)}};
            same_positive_cone(u, iso, a);
        },
        ErrorKind::input, "NotInteriorVector"));
}

TEST_CASE("isometry algebra") {
    Lattice u = u_lattice();
    Isometry swap = verify_isometry(u, IntMatrix{{0, 1}, {1, 0}});
    Isometry minus = verify_isometry(u, IntMatrix{{-1, 0}, {0, -1}});
    LatticeVector v{u.label, IntVec{Int(2), Int(1)}};

    LatticeVector sv = apply(u, swap, v);
    CHECK(sv.coords == IntVec{Int(1), Int(2)});

    // compose applies the right factor first.
    Isometry both = compose(u, swap, minus);
    LatticeVector bv = apply(u, both, v);
    LatticeVector step = apply(u, swap, apply(u, minus, v));
    CHECK(bv.coords == step.coords);

    Isometry inv = isometry_inverse(u, swap);
    CHECK(compose(u, swap, inv).matrix == IntMatrix::identity(2));

    CHECK(isometry_power(u, swap, 0).matrix == IntMatrix::identity(2));
    CHECK(isometry_power(u, swap, 5).matrix == swap.matrix);
    CHECK(isometry_power(u, swap, 6).matrix == IntMatrix::identity(2));

    Lattice s4 = oracles::fixture_lattice("S4");
    Isometry m = jsonio::json_isometry(oracles::load_fixture("S4_search"), s4);
    Isometry minv = isometry_inverse(s4, m);
    CHECK(compose(s4, m, minv).matrix == IntMatrix::identity(4));
    CHECK(isometry_power(s4, m, 3).matrix == m.matrix * m.matrix * m.matrix);

    CHECK(throws_code([&] { compose(u, swap, Isometry{"other", IntMatrix::identity(2)}); },
                      ErrorKind::input, "OwnerMismatch"));
}
