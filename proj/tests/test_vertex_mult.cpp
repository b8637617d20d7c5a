#include <doctest.h>

#include <random>

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

const std::vector<Vec2> kSquare{{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
const std::vector<Vec2> kTri{{1, 0}, {0, 1}, {-1, -1}};

}  // namespace

TEST_CASE("k_omega on N=3") {
    CHECK(k_omega(kTri, {0, 1, 2}) == 1);
    CHECK(k_omega(kTri, {0, 2, 1}) == -1);
    // N=2: empty sum
    CHECK(k_omega({{3, 5}, {-3, -5}}, {0, 1}) == 0);
}

TEST_CASE("k_omega is independent of the representative") {
    std::mt19937_64 rng(3);
    for (int n = 2; n <= 6; ++n) {
        for (int t = 0; t < 25; ++t) {
            auto vs = random_balanced(rng, n, 5);
            auto reps = cyclic_order_representatives(n);
            for (const auto& rep : reps) {
                mpz_class base = k_omega(vs, rep);
                std::vector<int> rot = rep;
                for (int s = 1; s < n; ++s) {
                    std::rotate(rot.begin(), rot.begin() + 1, rot.end());
                    CHECK(k_omega(vs, rot) == base);
                }
            }
            if (n > 4) break;  // rotation batteries get large
        }
    }
}

TEST_CASE("mu on small vertices") {
    CHECK(mu(kTri) == RefinedPoly::bracket_plus(1));
    CHECK(mu({{2, 3}, {-2, -3}}) == RefinedPoly::constant(GQ(1)));
    // frozen by exhaustive cyclic-order enumeration
    RefinedPoly expect;
    expect.set(-2, GQ(1));
    expect.set(0, GQ(4));
    expect.set(2, GQ(1));
    CHECK(mu(kSquare) == expect);
}

TEST_CASE("mu is palindromic, DP-invariant and counts (N-1)! at q=1") {
    std::mt19937_64 rng(17);
    for (int n = 2; n <= 6; ++n) {
        for (int t = 0; t < 10; ++t) {
            auto vs = random_balanced(rng, n, 5);
            RefinedPoly m = mu(vs);
            CHECK(m.antipode() == m);
            mpq_class fact = 1;
            for (int j = 2; j < n; ++j) fact *= j;
            CHECK(m.eval_at_one() == GQ(fact));
            auto shuffled = vs;
            std::shuffle(shuffled.begin(), shuffled.end(), rng);
            CHECK(mu(shuffled) == m);
        }
    }
}

TEST_CASE("theta_bs base case and recursion") {
    CHECK(theta_bs(kTri) == RefinedPoly::bracket_plus(1));
    CHECK(theta_bs({{1, 0}, {2, 0}, {-3, 0}}) == RefinedPoly::constant(GQ(2)));
    CHECK(theta_bs(kSquare) == mu(kSquare).scaled(GQ(4)));
    CHECK_THROWS(theta_bs({{1, 0}, {-1, 0}}));
}

TEST_CASE("theta_N equals (N!/6) mu_N on random balanced tuples") {
    std::mt19937_64 rng(23);
    for (int n = 3; n <= 6; ++n) {
        for (int t = 0; t < 8; ++t) {
            auto vs = random_balanced(rng, n, 5);
            mpq_class f = 1;
            for (int j = 2; j <= n; ++j) f *= j;
            f /= 6;
            CHECK(theta_bs(vs) == mu(vs).scaled(GQ(f)));
        }
    }
}

TEST_CASE("vertex multiplicities per kind and convention") {
    std::vector<Vec2> tri{{1, 0}, {0, 1}, {-1, -1}};
    CHECK(vertex_multiplicity(VertexKind::kUnpointedTrivalent, tri, Convention::kExample) ==
          RefinedPoly::bracket_minus(1));
    CHECK(vertex_multiplicity(VertexKind::kUnpointedTrivalent, tri, Convention::kDefinition) ==
          RefinedPoly::bracket_minus(1));
    CHECK(vertex_multiplicity(VertexKind::kUnpointedTrivalent, tri, Convention::kRaw) ==
          RefinedPoly::bracket_minus(1).scaled(GQ(mpq_class(0), mpq_class(-1))));

    CHECK(vertex_multiplicity(VertexKind::kPointed, tri, Convention::kExample) ==
          RefinedPoly::bracket_plus(1));
    CHECK(vertex_multiplicity(VertexKind::kPointed, tri, Convention::kDefinition) ==
          RefinedPoly::bracket_plus(1).scaled(GQ(mpq_class(1, 2))));
    CHECK(vertex_multiplicity(VertexKind::kPointed, {{4, 7}, {-4, -7}},
                              Convention::kDefinition) == RefinedPoly::constant(GQ(1)));

    // pointed definition multiplicity evaluates to 1 at q = 1
    std::mt19937_64 rng(29);
    for (int n = 2; n <= 5; ++n) {
        auto vs = random_balanced(rng, n, 4);
        CHECK(vertex_multiplicity(VertexKind::kPointed, vs, Convention::kDefinition)
                  .eval_at_one() == GQ(1));
    }

    CHECK_THROWS(vertex_multiplicity(VertexKind::kUnpointedTrivalent, kSquare,
                                     Convention::kDefinition));
}
