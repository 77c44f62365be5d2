#include <doctest.h>

#include <random>
#include <sstream>

#include "toricmld/cone.hpp"

using namespace toricmld;

namespace {

RatVec rv(std::initializer_list<const char*> entries) {
    RatVec v;
    for (const char* e : entries) v.push_back(parse_rational(e));
    return v;
}

QuotientType qt(std::int64_t n, std::initializer_list<std::int64_t> w) {
    return QuotientType(n, std::vector<std::int64_t>(w));
}

Rational rat(const char* s) { return parse_rational(s); }

SimplicialConeData standard_cone(int n) {
    return SimplicialConeData(LatticeBasis::standard(n), RatMatrix::identity(n));
}

SimplicialConeData klein_cone() {
    auto l = lattice_from_generators(3, {rv({"1", "0", "0"}), rv({"0", "1", "0"}),
                                         rv({"0", "0", "1"}), rv({"1/2", "1/2", "0"}),
                                         rv({"0", "1/2", "1/2"})});
    return SimplicialConeData(std::move(l), RatMatrix::identity(3));
}

}  // namespace

TEST_CASE("cone construction validates its input") {
    CHECK_THROWS_AS(SimplicialConeData(
                        LatticeBasis::standard(2),
                        RatMatrix::from_columns({rv({"1", "0"}), rv({"2", "0"})})),
                    std::invalid_argument);
    CHECK_THROWS_AS(SimplicialConeData(
                        LatticeBasis::standard(2),
                        RatMatrix::from_columns({rv({"1/2", "0"}), rv({"0", "1"})})),
                    std::invalid_argument);
}

TEST_CASE("primitive rays") {
    CHECK(primitive_rays(standard_cone(2)) ==
          std::vector<RatVec>{rv({"1", "0"}), rv({"0", "1"})});

    SimplicialConeData scaled(
        LatticeBasis::standard(2),
        RatMatrix::from_columns({rv({"2", "0"}), rv({"0", "1"})}));
    CHECK(primitive_rays(scaled) == std::vector<RatVec>{rv({"1", "0"}), rv({"0", "1"})});

    CHECK(primitive_rays(induced_cone(qt(2, {1, 1}))) ==
          std::vector<RatVec>{rv({"1", "0"}), rv({"0", "1"})});
}

TEST_CASE("the Q-Gorenstein functional") {
    CHECK(functional(standard_cone(2)).coeffs == rv({"1", "1"}));
    SimplicialConeData scaled(
        LatticeBasis::standard(2),
        RatMatrix::from_columns({rv({"2", "0"}), rv({"0", "1"})}));
    CHECK(functional(scaled).coeffs == rv({"1", "1"}));
    CHECK(functional(klein_cone()).coeffs == rv({"1", "1", "1"}));
}

TEST_CASE("subcone regularity") {
    CHECK(is_regular_subcone(standard_cone(2), {0, 1}));
    CHECK_FALSE(is_regular_subcone(induced_cone(qt(2, {1, 1})), {0, 1}));
    // (1/2,1/2,0) lies in the face lattice of the first two axes
    CHECK_FALSE(is_regular_subcone(klein_cone(), {0, 1}));
    CHECK(is_regular_subcone(klein_cone(), {0}));
    CHECK_THROWS_AS(is_regular_subcone(klein_cone(), {}), std::invalid_argument);
}

TEST_CASE("toric mld") {
    CHECK(mld_toric(standard_cone(2)).is_smooth());
    CHECK(mld_toric(standard_cone(3)).is_smooth());

    auto r = mld_toric(induced_cone(qt(2, {1, 1})));
    CHECK(r.mld_log() == rat("1"));
    CHECK(*r.witness().point == rv({"1/2", "1/2"}));

    auto rk = mld_toric(klein_cone());
    CHECK(rk.mld_log() == rat("1"));
    CHECK(*rk.witness().point == rv({"0", "1/2", "1/2"}));
}

TEST_CASE("reduction to cyclic quotients") {
    SUBCASE("self-reduction of a cyclic cone") {
        auto [q, trace] = reduce_to_cyclic(induced_cone(qt(2, {1, 1})));
        CHECK(q == qt(2, {1, 1}));
        CHECK(trace.support == std::vector<int>{1, 2});
        CHECK(trace.cone_mld == rat("1"));
    }
    SUBCASE("the (Z/2)^2 cone drops to a two-dimensional quotient") {
        auto [q, trace] = reduce_to_cyclic(klein_cone());
        CHECK(q == qt(2, {1, 1}));
        CHECK(trace.support == std::vector<int>{2, 3});
        CHECK(trace.cone_mld == rat("1"));
    }
    SUBCASE("an order-three example") {
        auto [q, trace] = reduce_to_cyclic(induced_cone(qt(3, {1, 1})));
        CHECK(q == qt(3, {1, 1}));
        CHECK(trace.cone_mld == rat("2/3"));
    }
    SUBCASE("smooth cones are rejected") {
        CHECK_THROWS_AS(reduce_to_cyclic(standard_cone(2)), std::domain_error);
    }
}

TEST_CASE("regularity never filters a residue of a primitive-ray cone") {
    std::mt19937_64 rng(300);
    std::uniform_int_distribution<std::int64_t> ord(2, 24);
    int checked = 0;
    while (checked < 40) {
        std::int64_t n = ord(rng);
        std::uniform_int_distribution<std::int64_t> wt(0, n - 1);
        std::vector<std::int64_t> w = {wt(rng), wt(rng), wt(rng)};
        std::int64_t g = n;
        for (auto x : w) g = std::gcd(g, x);
        if (g != 1) continue;
        ++checked;
        auto cone = induced_cone(QuotientType(n, w));
        auto prim = primitive_rays(cone);
        LatticeBasis sub(RatMatrix::from_columns(prim));
        auto residues = enumerate_residues(cone.lattice(), sub);
        for (const auto& x : residues) {
            RatVec y = sub.coords(x);
            std::vector<int> support;
            for (int i = 0; i < static_cast<int>(y.size()); ++i)
                if (y[static_cast<std::size_t>(i)] != 0) support.push_back(i);
            if (support.empty()) continue;
            CHECK_FALSE(is_regular_subcone(cone, support));
        }
    }
}

TEST_CASE("functional denominators recover the Gorenstein index") {
    std::mt19937_64 rng(301);
    std::uniform_int_distribution<std::int64_t> ord(2, 30);
    int checked = 0;
    while (checked < 30) {
        std::int64_t n = ord(rng);
        std::uniform_int_distribution<std::int64_t> wt(1, n - 1);
        QuotientType q(n, {wt(rng), wt(rng)});
        if (!is_well_formed(q).ok()) continue;
        ++checked;
        CHECK(gorenstein_index_toric(induced_cone(q)) == gorenstein_index(q));
    }
}

TEST_CASE("cone files") {
    SUBCASE("a valid file parses") {
        std::istringstream in(
            "# quotient 1/2(1,1)\n"
            "dim 2\n"
            "lattice\n"
            "1 0\n"
            "1/2 1/2\n"
            "rays\n"
            "1 0\n"
            "0 1\n");
        auto cone = parse_cone(in);
        CHECK(mld_toric(cone).mld_log() == rat("1"));
    }
    SUBCASE("floating-point literals are rejected with a line number") {
        std::istringstream in(
            "dim 2\n"
            "lattice\n"
            "1 0\n"
            "0.5 0.5\n"
            "rays\n"
            "1 0\n"
            "0 1\n");
        try {
            parse_cone(in);
            FAIL("expected ParseError");
        } catch (const ParseError& e) {
            CHECK(std::string(e.what()).find("line 4") != std::string::npos);
        }
    }
    SUBCASE("dependent rays are rejected") {
        std::istringstream in(
            "dim 2\n"
            "lattice\n"
            "1 0\n"
            "0 1\n"
            "rays\n"
            "1 1\n"
            "2 2\n");
        CHECK_THROWS_AS(parse_cone(in), ParseError);
    }
    SUBCASE("rays outside the lattice are rejected") {
        std::istringstream in(
            "dim 2\n"
            "lattice\n"
            "1 0\n"
            "0 1\n"
            "rays\n"
            "1/3 0\n"
            "0 1\n");
        CHECK_THROWS_AS(parse_cone(in), ParseError);
    }
}

TEST_CASE("oracle agreement on a sample of quotient types") {
    std::mt19937_64 rng(302);
    std::uniform_int_distribution<std::int64_t> ord(2, 30);
    int checked = 0;
    while (checked < 40) {
        std::int64_t n = ord(rng);
        std::uniform_int_distribution<std::int64_t> wt(1, n - 1);
        int dim = 2 + static_cast<int>(checked % 2);
        std::vector<std::int64_t> w(static_cast<std::size_t>(dim));
        for (auto& x : w) x = wt(rng);
        QuotientType q(n, std::move(w));
        if (!is_well_formed(q).ok()) continue;
        ++checked;
        auto lhs = mld(q);
        auto rhs = mld_toric(induced_cone(q));
        REQUIRE_FALSE(rhs.is_smooth());
        CHECK(lhs.mld_log() == rhs.mld_log());
    }
}
