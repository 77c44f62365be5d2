#include <doctest.h>

#include <algorithm>
#include <random>

#include "toricmld/cone.hpp"
#include "toricmld/quotient.hpp"

using namespace toricmld;

namespace {

QuotientType qt(std::int64_t n, std::initializer_list<std::int64_t> w) {
    return QuotientType(n, std::vector<std::int64_t>(w));
}

HypercubePoint hp(std::initializer_list<const char*> coords) {
    RatVec v;
    for (const char* c : coords) v.push_back(parse_rational(c));
    return HypercubePoint(std::move(v));
}

Rational rat(const char* s) { return parse_rational(s); }

// age via the hypercube route, independent of the integer scan inside mld/age
Rational age_by_multiples(const QuotientType& q, std::int64_t k) {
    return sum(multiple(generating_point(q), Integer(static_cast<long>(k))).coords());
}

QuotientType random_well_formed(std::mt19937_64& rng, int dim, std::int64_t max_order) {
    std::uniform_int_distribution<std::int64_t> ord(2, max_order);
    for (;;) {
        std::int64_t n = ord(rng);
        std::uniform_int_distribution<std::int64_t> wt(1, n - 1);
        std::vector<std::int64_t> w(static_cast<std::size_t>(dim));
        for (auto& x : w) x = wt(rng);
        QuotientType q(n, std::move(w));
        if (is_well_formed(q).ok()) return q;
    }
}

}  // namespace

TEST_CASE("quotient text form round-trips") {
    CHECK(parse_quotient("5:1,2").str() == "5:1,2");
    CHECK(parse_quotient("5:7,2").str() == "5:2,2");  // weights reduced mod N
    CHECK(parse_quotient("2:1,1") == qt(2, {1, 1}));
    CHECK_THROWS_AS(parse_quotient("5:"), ParseError);
    CHECK_THROWS_AS(parse_quotient("5"), ParseError);
    CHECK_THROWS_AS(parse_quotient("5:1, 2"), ParseError);
    CHECK_THROWS_AS(parse_quotient("5:0.5"), ParseError);
    CHECK_THROWS_AS(parse_quotient("0:1"), ParseError);
}

TEST_CASE("generating points") {
    CHECK(generating_point(qt(2, {1, 1})) == hp({"1/2", "1/2"}));
    CHECK(generating_point(qt(5, {1, 2})) == hp({"1/5", "2/5"}));
    CHECK(generating_point(QuotientType(1, {})).dim() == 0);
}

TEST_CASE("multiples of hypercube points") {
    HypercubePoint a = hp({"1/3", "1", "0", "2/5"});
    CHECK(multiple(a, 2) == hp({"2/3", "1", "0", "4/5"}));
    CHECK(multiple(a, -1) == hp({"2/3", "1", "0", "3/5"}));
    CHECK(multiple(hp({"5/6"}), 6) == hp({"0"}));
}

TEST_CASE("multiple composition and identity") {
    std::mt19937_64 rng(91);
    std::uniform_int_distribution<long> num(0, 8), den(1, 8), mm(-5, 5);
    for (int trial = 0; trial < 200; ++trial) {
        RatVec coords;
        for (int i = 0; i < 3; ++i) {
            long d = den(rng);
            long n = num(rng) % (d + 1);
            coords.push_back(make_rational(n, d));  // includes 0 and 1
        }
        HypercubePoint a(coords);
        CHECK(multiple(a, 1) == a);
        long m1 = mm(rng), m2 = mm(rng);
        CHECK(multiple(multiple(a, m1), m2) == multiple(a, Integer(m1 * m2)));
    }
}

TEST_CASE("face signatures") {
    CHECK(face_signature(hp({"1/3", "1", "0", "2/5"})) == FaceSignature{1, 1, 2});
    CHECK(face_signature(hp({"0", "0", "0"})) == FaceSignature{3, 0, 0});
    CHECK(face_signature(hp({"1/2", "1/2"})) == FaceSignature{0, 0, 2});
}

TEST_CASE("ages") {
    CHECK(age(qt(5, {1, 2}), 1) == rat("3/5"));
    CHECK(age(qt(5, {1, 2}), 4) == rat("7/5"));
    CHECK(age(qt(2, {1, 1}), 1) == rat("1"));
    CHECK_THROWS_AS(age(qt(5, {1, 2}), 0), std::domain_error);
    CHECK_THROWS_AS(age(qt(5, {1, 2}), 5), std::domain_error);
}

TEST_CASE("age agrees with the hypercube multiples") {
    std::mt19937_64 rng(17);
    for (int trial = 0; trial < 50; ++trial) {
        QuotientType q = random_well_formed(rng, 3, 30);
        for (std::int64_t k = 1; k < q.order(); ++k)
            CHECK(age(q, k) == age_by_multiples(q, k));
    }
}

TEST_CASE("well-formedness reports") {
    CHECK(is_well_formed(qt(3, {1, 1})).ok());
    auto rep = is_well_formed(qt(4, {1, 2}));
    CHECK_FALSE(rep.ok());
    CHECK(rep.quasi_reflections == std::vector<std::int64_t>{2});
    auto rep2 = is_well_formed(qt(4, {1, 2, 0}));
    CHECK(rep2.zero_weight_indices == std::vector<int>{3});
    auto rep3 = is_well_formed(qt(4, {2, 2}));
    CHECK_FALSE(rep3.generates_group);
    CHECK(is_well_formed(QuotientType(1, {})).ok());
}

TEST_CASE("normalization") {
    SUBCASE("already well-formed") {
        auto [q, trace] = normalize(qt(3, {1, 1}));
        CHECK(q == qt(3, {1, 1}));
        CHECK(trace.dropped.empty());
        CHECK(trace.axis_orders == std::vector<std::int64_t>{1, 1});
    }
    SUBCASE("torus factor and quasi-reflection") {
        auto [q, trace] = normalize(qt(4, {1, 2, 0}));
        CHECK(q == qt(2, {1, 1}));
        CHECK(trace.dropped == std::vector<int>{3});
        CHECK(trace.axis_orders == std::vector<std::int64_t>{2, 1});
    }
    SUBCASE("collapse to smooth") {
        auto [q, trace] = normalize(qt(6, {2, 3}));
        CHECK(q.trivial());
        CHECK(trace.dropped.empty());
        CHECK(trace.axis_orders == std::vector<std::int64_t>{3, 2});
    }
    SUBCASE("rebasing can expose a new torus factor") {
        auto [q, trace] = normalize(qt(6, {3, 2, 2}));
        CHECK(q == qt(3, {1, 1}));
        CHECK(trace.dropped == std::vector<int>{1});
        CHECK(mld(q).mld_log() == rat("2/3"));
    }
    SUBCASE("non-generating weights are rejected") {
        CHECK_THROWS_AS(normalize(qt(4, {2, 2})), std::domain_error);
    }
}

TEST_CASE("mld of quotient types") {
    auto r1 = mld(qt(2, {1, 1}));
    CHECK(r1.mld_log() == rat("1"));
    CHECK(*r1.witness().group_index == 1);

    auto r2 = mld(qt(5, {1, 2}));
    CHECK(r2.mld_log() == rat("3/5"));
    CHECK(r2.discrepancy() == rat("-2/5"));
    CHECK(*r2.witness().group_index == 1);

    auto r3 = mld(qt(7, {1, 2, 4}));
    CHECK(r3.mld_log() == rat("1"));
    CHECK(*r3.witness().group_index == 1);

    CHECK(mld(QuotientType(1, {})).is_smooth());
    CHECK_THROWS_AS(mld(qt(4, {1, 2})), std::domain_error);
}

TEST_CASE("mld witness reproduces the value") {
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 80; ++trial) {
        QuotientType q = random_well_formed(rng, 2 + static_cast<int>(trial % 3), 40);
        auto r = mld(q);
        CHECK(age(q, *r.witness().group_index) == r.mld_log());
    }
}

TEST_CASE("age pairing and the n/2 bound") {
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 80; ++trial) {
        int dim = 2 + static_cast<int>(trial % 3);
        QuotientType q = random_well_formed(rng, dim, 40);
        std::int64_t n_ord = q.order();
        for (std::int64_t k = 1; k < n_ord; ++k) {
            int moving = 0;
            for (auto a : q.weights())
                if ((k * a) % n_ord != 0) ++moving;
            if (n_ord - k >= 1 && k <= n_ord - 1) {
                Rational lhs = (k == n_ord - k) ? Rational(age(q, k) * 2)
                                                : Rational(age(q, k) + age(q, n_ord - k));
                CHECK(lhs == Rational(moving));
            }
            CHECK(Rational(moving) <= Rational(dim));
        }
        CHECK(mld(q).mld_log() <= make_rational(dim, 2));
    }
}

TEST_CASE("classification thresholds") {
    CHECK(classify(mld(qt(2, {1, 1, 1}))) == SingularityClass::Terminal);
    CHECK(mld(qt(2, {1, 1, 1})).mld_log() == rat("3/2"));
    CHECK(classify(mld(qt(7, {1, 2, 4}))) == SingularityClass::CanonicalNotTerminal);
    CHECK(classify(mld(qt(3, {1, 1}))) == SingularityClass::KltNotCanonical);
    CHECK(mld(qt(3, {1, 1})).mld_log() == rat("2/3"));
    CHECK_THROWS_AS(classify(MldResult::smooth()), std::domain_error);
}

TEST_CASE("Gorenstein indices") {
    CHECK(gorenstein_index(qt(2, {1, 1})) == 1);
    CHECK(gorenstein_index(qt(3, {1, 1})) == 3);
    CHECK(gorenstein_index(qt(7, {1, 2, 4})) == 1);
}

TEST_CASE("canonical forms") {
    CHECK(canonical_form(qt(3, {2, 2})) == qt(3, {1, 1}));
    CHECK(canonical_form(qt(5, {2, 4})) == qt(5, {1, 2}));
    CHECK(canonical_form(qt(2, {1, 1})) == qt(2, {1, 1}));
}

TEST_CASE("canonical form is idempotent and orbit-invariant") {
    std::mt19937_64 rng(23);
    for (int trial = 0; trial < 60; ++trial) {
        QuotientType q = random_well_formed(rng, 3, 30);
        QuotientType c = canonical_form(q);
        CHECK(canonical_form(c) == c);
        // permutation invariance
        std::vector<std::int64_t> w = q.weights();
        std::shuffle(w.begin(), w.end(), rng);
        CHECK(canonical_form(QuotientType(q.order(), w)) == c);
        // unit rescaling invariance
        std::int64_t n_ord = q.order();
        for (std::int64_t k = 1; k < n_ord; ++k) {
            if (std::gcd(k, n_ord) != 1) continue;
            std::vector<std::int64_t> kw(w.size());
            for (std::size_t i = 0; i < w.size(); ++i) kw[i] = (k * w[i]) % n_ord;
            CHECK(canonical_form(QuotientType(n_ord, kw)) == c);
            if (k > 7) break;
        }
    }
}

TEST_CASE("normalization preserves the toric mld on small exhaustive input") {
    for (std::int64_t n_ord = 2; n_ord <= 8; ++n_ord) {
        for (std::int64_t a = 0; a < n_ord; ++a)
            for (std::int64_t b = 0; b < n_ord; ++b) {
                if (std::gcd(std::gcd(a, b), n_ord) != 1) continue;
                QuotientType raw(n_ord, {a, b});
                auto cone_mld = mld_toric(induced_cone(raw));
                auto norm_mld = mld(normalize(raw).first);
                CHECK(cone_mld.is_smooth() == norm_mld.is_smooth());
                if (!cone_mld.is_smooth())
                    CHECK(cone_mld.mld_log() == norm_mld.mld_log());
            }
    }
}
