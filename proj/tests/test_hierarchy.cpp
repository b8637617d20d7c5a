#include <doctest.h>

#include <random>

#include "trop/hierarchy.hpp"
#include "trop/vertex_mult.hpp"

using namespace trop;

namespace {

std::vector<Vec2> random_balanced(std::mt19937_64& rng, int n, long bound) {
    std::uniform_int_distribution<long> d(-bound, bound);
    std::vector<Vec2> vs;
    long sx = 0, sy = 0;
    for (int i = 0; i + 1 < n; ++i) {
        Vec2 v{d(rng), d(rng)};
        sx += v.x;
        sy += v.y;
        vs.push_back(v);
    }
    vs.push_back({-sx, -sy});
    return vs;
}

}  // namespace

TEST_CASE("igd constant term is 1 and order does not matter") {
    std::mt19937_64 rng(1);
    std::uniform_int_distribution<long> d(-3, 3);
    for (int dd = 0; dd <= 5; ++dd) {
        std::vector<long> a, b;
        for (int i = 0; i <= dd; ++i) {
            a.push_back(d(rng));
            b.push_back(d(rng));
        }
        USeries s = igd_series(a, b, 6, Exec::kSerial);
        CHECK(s[0] == GQ(1));
        CHECK(s.is_real());
        for (int j = 1; j <= 6; j += 2) CHECK(s[j].is_zero());
        // permuting the pairs leaves the series unchanged
        std::vector<long> a2 = a, b2 = b;
        std::reverse(a2.begin(), a2.end());
        std::reverse(b2.begin(), b2.end());
        CHECK(igd_series(a2, b2, 6, Exec::kSerial) == s);
    }
}

TEST_CASE("igd d=1 is the single cosine") {
    std::vector<long> a{3, -1}, b{2, 5};
    long w = a[1] * b[0] - b[1] * a[0];
    CHECK(igd_series(a, b, 12, Exec::kSerial) == cos_half_series(mpq_class(w), 12));
}

TEST_CASE("igd parallel matches serial") {
    std::vector<long> a{1, 0, -1, 2}, b{0, 1, -1, -2};
    CHECK(igd_series(a, b, 10, Exec::kParallel) == igd_series(a, b, 10, Exec::kSerial));
}

TEST_CASE("f3u equals the q-substitution route for wedges 0..6") {
    std::vector<std::pair<Vec2, Vec2>> pairs = {
        {{1, 1}, {2, 2}}, {{1, 0}, {0, 1}}, {{2, 1}, {0, 1}}, {{3, 1}, {0, 1}},
        {{2, 1}, {-2, 1}}, {{5, 2}, {0, 1}}, {{2, 3}, {-2, 3}}};
    for (const auto& [v1, v2] : pairs) {
        mpz_class w = wedge(v1, v2);
        if (w < 0) w = -w;
        RefinedPoly raw = RefinedPoly::bracket_minus(w.get_si())
                              .scaled(GQ(mpq_class(0), mpq_class(-1)));
        CHECK(f3u_series(v1, v2, 12) == substitute_exponential(raw, 12));
    }
    CHECK(f3u_series({1, 1}, {2, 2}, 8).is_zero());
    USeries s = f3u_series({1, 0}, {0, 1}, 5);
    CHECK(s[1] == GQ(1));
    CHECK(s[3] == GQ(mpq_class(-1, 24)));
}

TEST_CASE("fmp equals mu under substitution, divided by (m-1)!") {
    std::mt19937_64 rng(9);
    for (int m = 3; m <= 5; ++m) {
        for (int t = 0; t < 25; ++t) {
            auto vs = random_balanced(rng, m, 5);
            mpq_class f = 1;
            for (int j = 2; j < m; ++j) f *= j;
            USeries viaq =
                substitute_exponential(mu(vs), 12).scaled(GQ(mpq_class(1) / f));
            CHECK(fmp_series(vs, 12, Exec::kSerial) == viaq);
        }
    }
}

TEST_CASE("fmp m=3 wedge 1 is cos(u/2)") {
    CHECK(fmp_series({{1, 0}, {0, 1}, {-1, -1}}, 12, Exec::kSerial) ==
          cos_half_series(1, 12));
}

TEST_CASE("moyal star basics") {
    FourierSymbol one = FourierSymbol::frequency(0, 0, 6);
    FourierSymbol g(6);
    g.add_term(2, -1, USeries::one(6));
    g.add_term(0, 3, cos_half_series(1, 6));
    CHECK(moyal_star(one, g) == g);
    CHECK(moyal_star(g, one) == g);

    // proportional frequencies commute and multiply plainly
    FourierSymbol f1 = FourierSymbol::frequency(2, 4, 6);
    FourierSymbol f2 = FourierSymbol::frequency(1, 2, 6);
    FourierSymbol prod = moyal_star(f1, f2);
    REQUIRE(prod.terms().size() == 1);
    const auto& [freq, coeff] = *prod.terms().begin();
    CHECK(freq == std::make_pair(3l, 6l));
    CHECK(coeff == USeries::one(6));
}

TEST_CASE("moyal star is associative to truncation order") {
    std::mt19937_64 rng(31);
    std::uniform_int_distribution<long> d(-3, 3);
    for (int t = 0; t < 10; ++t) {
        FourierSymbol f(6), g(6), h(6);
        for (int i = 0; i < 2; ++i) {
            f.add_term(d(rng), d(rng), USeries::one(6));
            g.add_term(d(rng), d(rng), USeries::one(6));
            h.add_term(d(rng), d(rng), USeries::one(6));
        }
        CHECK(moyal_star(moyal_star(f, g), h) == moyal_star(f, moyal_star(g, h)));
    }
}

TEST_CASE("moyal star reduces to the pointwise product at order zero") {
    std::mt19937_64 rng(33);
    std::uniform_int_distribution<long> d(-4, 4);
    for (int t = 0; t < 20; ++t) {
        long a1 = d(rng), b1 = d(rng), a2 = d(rng), b2 = d(rng);
        FourierSymbol p = moyal_star(FourierSymbol::frequency(a1, b1, 4),
                                     FourierSymbol::frequency(a2, b2, 4));
        REQUIRE(p.terms().size() == 1);
        CHECK(p.terms().begin()->second[0] == GQ(1));
    }
}

TEST_CASE("moyal claim for d = 1, 2, 3") {
    CHECK(verify_moyal_claim({1, -1}, {2, 0}, 8).pass);
    CHECK(verify_moyal_claim({1, 0, -1}, {0, 1, -1}, 8).pass);
    std::mt19937_64 rng(41);
    std::uniform_int_distribution<long> d(-3, 3);
    for (int dd = 1; dd <= 3; ++dd) {
        for (int t = 0; t < 5; ++t) {
            std::vector<long> a, b;
            for (int i = 0; i <= dd; ++i) {
                a.push_back(d(rng));
                b.push_back(d(rng));
            }
            MoyalClaimReport rep = verify_moyal_claim(a, b, dd <= 2 ? 8 : 6);
            CHECK(rep.pass);
        }
    }
}
