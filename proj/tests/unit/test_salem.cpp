#include <doctest.h>

#include <algorithm>

#include "hyperlat/json_io.hpp"
#include "hyperlat/salem.hpp"
#include "support/oracles.hpp"
#include "support/test_util.hpp"

using namespace hyperlat;
using testutil::throws_code;

static const IntPolynomial kQuartic{1, -2, 0, -2, 1};
static const IntPolynomial kLehmer{1, 1, 0, -1, -1, -1, -1, -1, 0, 1, 1};

static bool has_flag(const FactorReport& r, const char* f) {
    return std::find(r.flags.begin(), r.flags.end(), f) != r.flags.end();
}

TEST_CASE("salem verdicts") {
    SalemVerdict v = is_salem(kQuartic);
    CHECK(v.is_salem);
    CHECK(v.reason == SalemReason::ok);
    CHECK(v.root_counts == std::pair<long, long>(1, 1));

    v = is_salem(kLehmer);
    CHECK(v.is_salem);
    CHECK(v.reason == SalemReason::ok);
    CHECK(v.root_counts == std::pair<long, long>(1, 4));

    CHECK(is_salem(cyclotomic(12)).reason == SalemReason::has_cyclotomic_factor);
    CHECK(is_salem(IntPolynomial{1, -3, 1}).reason == SalemReason::quadratic_reciprocal);
    CHECK(is_salem(IntPolynomial{-1, -1, 1}).reason == SalemReason::not_reciprocal);
    CHECK(is_salem(IntPolynomial{1}).reason == SalemReason::degree_too_small);

    // Two trace roots beyond 2: (x^2-3x+1)(x^2-4x+1).
    v = is_salem(IntPolynomial{1, -7, 14, -7, 1});
    CHECK(!v.is_salem);
    CHECK(v.reason == SalemReason::wrong_root_count);

    // Large real root on the negative side only; must not pass.
    v = is_salem(IntPolynomial{1, 5, 4, 5, 1});
    CHECK(!v.is_salem);
    CHECK(v.reason == SalemReason::wrong_root_count);
    CHECK(v.root_counts.first == 0);

    CHECK(throws_code([] { is_salem(IntPolynomial{1, 0, 2}); }, ErrorKind::input, "NotMonic"));
    CHECK(std::string(to_string(SalemReason::not_reciprocal)) == "NotReciprocal");
    CHECK(std::string(to_string(SalemReason::ok)) == "OK");
}

TEST_CASE("cyclotomic stripping of pure products") {
    FactorReport r = strip_cyclotomic(IntPolynomial{-1, 0, 1});
    CHECK(r.cyclotomic == std::vector<std::pair<unsigned long, long>>{{1, 1}, {2, 1}});
    CHECK(!r.salem.has_value());
    CHECK(r.residual.is_one());
    CHECK(r.degree == 0);
    CHECK(r.flags.empty());
    CHECK(r.reconstructs());

    r = strip_cyclotomic(cyclotomic(5) * cyclotomic(5) * cyclotomic(12));
    CHECK(r.cyclotomic == std::vector<std::pair<unsigned long, long>>{{5, 2}, {12, 1}});
    CHECK(r.degree == 0);
    CHECK(r.reconstructs());
}

TEST_CASE("cyclotomic stripping isolates a salem factor") {
    IntPolynomial p = cyclotomic(3) * kQuartic;
    CHECK(p.coeffs() ==
          oracles::poly_mul(oracles::from_poly(cyclotomic(3)), oracles::from_poly(kQuartic)));
    FactorReport r = strip_cyclotomic(p);
    CHECK(r.cyclotomic == std::vector<std::pair<unsigned long, long>>{{3, 1}});
    REQUIRE(r.salem.has_value());
    CHECK(r.salem->first == kQuartic);
    CHECK(r.salem->second == 1);
    CHECK(r.residual.is_one());
    CHECK(r.degree == 4);
    CHECK(r.flags.empty());
    CHECK(r.reconstructs());

    r = strip_cyclotomic(kLehmer);
    CHECK(r.cyclotomic.empty());
    REQUIRE(r.salem.has_value());
    CHECK(r.salem->first == kLehmer);
    CHECK(r.degree == 10);
    CHECK(r.reconstructs());

    // Stripping is idempotent on what it leaves behind.
    FactorReport again = strip_cyclotomic(r.salem->first);
    CHECK(again.salem.has_value());
    CHECK(again.salem->first == kLehmer);
    CHECK(again.cyclotomic.empty());
}

TEST_CASE("cyclotomic stripping salvage paths") {
    FactorReport r = strip_cyclotomic(kQuartic * kQuartic * cyclotomic(1));
    CHECK(r.cyclotomic == std::vector<std::pair<unsigned long, long>>{{1, 1}});
    REQUIRE(r.salem.has_value());
    CHECK(r.salem->first == kQuartic);
    CHECK(r.salem->second == 2);
    CHECK(has_flag(r, "salem_multiplicity"));
    CHECK(r.residual.is_one());
    CHECK(r.degree == 4);
    CHECK(r.reconstructs());

    r = strip_cyclotomic(IntPolynomial{1, -3, 1});
    CHECK(!r.salem.has_value());
    CHECK(r.residual == IntPolynomial{1, -3, 1});
    CHECK(r.degree == 2);
    CHECK(has_flag(r, "quadratic_unit"));
    CHECK(r.reconstructs());

    r = strip_cyclotomic(IntPolynomial{-1, -1, 1});
    CHECK(has_flag(r, "non_salem_remainder"));
    CHECK(r.residual == IntPolynomial{-1, -1, 1});
    CHECK(r.reconstructs());

    CHECK(throws_code([] { strip_cyclotomic(IntPolynomial{1, 0, 2}); }, ErrorKind::input,
                      "NotMonic"));
}

TEST_CASE("salem degrees of fixture isometries") {
    Lattice u = oracles::fixture_lattice("U");
    Isometry id{u.label, IntMatrix::identity(2)};
    auto [d0, r0] = salem_degree(u, id);
    CHECK(d0 == 0);
    CHECK(r0.cyclotomic == std::vector<std::pair<unsigned long, long>>{{1, 2}});

    Isometry minus{u.label, IntMatrix{{-1, 0}, {0, -1}}};
    auto [dm, rm] = salem_degree(u, minus);
    CHECK(dm == 0);
    CHECK(rm.cyclotomic == std::vector<std::pair<unsigned long, long>>{{2, 2}});

    Isometry swap{u.label, IntMatrix{{0, 1}, {1, 0}}};
    auto [ds, rs] = salem_degree(u, swap);
    CHECK(ds == 0);
    CHECK(rs.cyclotomic == std::vector<std::pair<unsigned long, long>>{{1, 1}, {2, 1}});

    Lattice s4 = oracles::fixture_lattice("S4");
    Isometry f4 = jsonio::json_isometry(oracles::load_fixture("S4_salem"), s4);
    auto [d4, r4] = salem_degree(s4, f4);
    CHECK(d4 == 4);
    REQUIRE(r4.salem.has_value());
    CHECK(r4.salem->first == IntPolynomial{1, -40, -66, -40, 1});
    CHECK(r4.flags.empty());

    Lattice l22 = oracles::fixture_lattice("L22");
    Isometry f22 = jsonio::json_isometry(oracles::load_fixture("L22_salem"), l22);
    auto [d22, r22] = salem_degree(l22, f22);
    CHECK(d22 == 4);
    CHECK(r22.cyclotomic == std::vector<std::pair<unsigned long, long>>{{1, 18}});
    REQUIRE(r22.salem.has_value());
    CHECK(r22.salem->first == IntPolynomial{1, -40, -66, -40, 1});

    Lattice q2 = oracles::fixture_lattice("Q2");
    Isometry f2 = jsonio::json_isometry(oracles::load_fixture("Q2_unit"), q2);
    auto [dq, rq] = salem_degree(q2, f2);
    CHECK(dq == 2);
    CHECK(has_flag(rq, "quadratic_unit"));
    CHECK(rq.residual == IntPolynomial{1, -3, 1});

    CHECK(throws_code([&] { salem_degree(u, Isometry{"other", IntMatrix::identity(2)}); },
                      ErrorKind::input, "OwnerMismatch"));
}

TEST_CASE("non-hyperbolic owners get a best-effort degree with a warning") {
    IntMatrix g{{2, 1, 0, 0}, {1, -2, 0, 0}, {0, 0, 2, 1}, {0, 0, 1, -2}};
    Lattice l = make_lattice("Q2+Q2", g);
    CHECK(!is_hyperbolic(l));
    IntMatrix f{{1, 1, 0, 0}, {1, 2, 0, 0}, {0, 0, 1, 1}, {0, 0, 1, 2}};
    Isometry iso = verify_isometry(l, f);
    auto [d, r] = salem_degree(l, iso);
    CHECK(d == 2);
    CHECK(has_flag(r, "quadratic_unit"));
    CHECK(has_flag(r, "quadratic_multiplicity"));
    CHECK(has_flag(r, "non_hyperbolic_owner"));
    CHECK(r.reconstructs());
}

TEST_CASE("small-entry search replay finds the frozen generator") {
    Lattice s4 = oracles::fixture_lattice("S4");
    auto hit = oracles::small_salem_search(s4.gram);
    REQUIRE(hit.has_value());
    CHECK(hit->examined == 604);

    Isometry frozen = jsonio::json_isometry(oracles::load_fixture("S4_search"), s4);
    CHECK(hit->matrix == frozen.matrix);

    Isometry m = verify_isometry(s4, hit->matrix);
    auto [deg, rep] = salem_degree(s4, m);
    CHECK(deg == 4);
    REQUIRE(rep.salem.has_value());
    CHECK(rep.salem->first == IntPolynomial{1, -1, -2, -1, 1});
    CHECK(oracles::is_salem_certified(rep.salem->first.coeffs()));
}
