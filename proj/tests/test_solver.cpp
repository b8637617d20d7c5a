#include <doctest.h>

#include "trop/moduli.hpp"
#include "trop/solver.hpp"

using namespace trop;

namespace {

// line type: marked points on the east and north rays
CombinatorialType line_type() {
    CombinatorialType t;
    t.n = 2;
    t.markers = {0, 1, -1};
    t.edges = {{2, 0}, {2, 1}};
    t.edge_weights = {{1, 0}, {0, 1}};
    t.end_vertex = {0, 1, 2};
    t.delta = {{1, 0}, {0, 1}, {-1, -1}};
    return t;
}

}  // namespace

TEST_CASE("line through two points in general position") {
    CombinatorialType t = line_type();
    PointConfiguration p;
    p.points = {qpoint(2, 0), qpoint(0, 1)};
    SolveOutcome out = solve_through_points(t, p);
    REQUIRE(out.status == SolveStatus::kSolved);
    const auto& c = *out.curve;
    // the line's vertex: east ray through p1, north ray through p2
    CHECK(c.positions[2] == qpoint(0, 0));
    CHECK(c.lengths[0] == 2);
    CHECK(c.lengths[1] == 1);
    // edge relation h(V2) - h(V1) = l(E) v_{V1,E} on the first edge
    CHECK(c.positions[0][0] - c.positions[2][0] == c.lengths[0] * 1);
}

TEST_CASE("points ordered against the type give a non-positive length") {
    CombinatorialType t = line_type();
    PointConfiguration p;
    p.points = {qpoint(2, 0), qpoint(0, -1)};  // p2 south of the vertex
    CHECK(solve_through_points(t, p).status == SolveStatus::kNonPositiveLength);
}

TEST_CASE("wall configurations are reported as zero length") {
    CombinatorialType t = line_type();
    PointConfiguration p;
    p.points = {qpoint(2, 0), qpoint(0, 0)};  // p2 exactly at the vertex
    CHECK(solve_through_points(t, p).status == SolveStatus::kZeroLength);
}

TEST_CASE("flexible type yields degenerate or miss, never a curve") {
    // both non-contracted branches of the trivalent pointed vertex hang off
    // one unpointed vertex behind the bivalent point: the last edge length is
    // unconstrained by the evaluation conditions
    CombinatorialType t;
    t.n = 2;
    t.markers = {0, 1, -1};
    t.edges = {{0, 1}, {1, 2}};
    t.edge_weights = {Vec2{-1, -1}, Vec2{-1, -1}};
    t.end_vertex = {0, 0, 2, 2};
    t.delta = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
    DescendantProfile prof{{1, 0}};
    std::string why;
    REQUIRE(t.is_valid(prof, &why));
    REQUIRE_FALSE(t.audit_tree_decomposition());

    PointConfiguration generic;
    generic.points = {qpoint(mpq_class(1, 3), mpq_class(0)), qpoint(mpq_class(7, 5), mpq_class(2))};
    CHECK(solve_through_points(t, generic).status == SolveStatus::kNoSolution);

    // p2 on the line through p1 with direction (1,1): a consistent family
    PointConfiguration aligned;
    aligned.points = {qpoint(0, 0), qpoint(-2, -2)};
    CHECK(solve_through_points(t, aligned).status == SolveStatus::kDegenerate);
}

TEST_CASE("sampling is deterministic and distinct") {
    PointConfiguration a = sample_generic_points(6, 99);
    PointConfiguration b = sample_generic_points(6, 99);
    PointConfiguration c = sample_generic_points(6, 100);
    REQUIRE(a.n() == 6);
    CHECK(a.points == b.points);
    CHECK(a.points != c.points);
    for (int i = 0; i < a.n(); ++i)
        for (int j = i + 1; j < a.n(); ++j) CHECK(a.points[i] != a.points[j]);
    CHECK(sample_generic_points(1, 5).n() == 1);
}

TEST_CASE("audit flags degenerate outcomes and duplicate images") {
    CombinatorialType t = line_type();
    PointConfiguration p;
    p.points = {qpoint(2, 0), qpoint(0, 1)};
    SolveOutcome good = solve_through_points(t, p);
    REQUIRE(good.status == SolveStatus::kSolved);
    SolveOutcome degenerate;
    degenerate.status = SolveStatus::kDegenerate;
    SolveOutcome wall;
    wall.status = SolveStatus::kZeroLength;

    GenericityReport ok = genericity_audit({{&t, &good}});
    CHECK(ok.pass);
    GenericityReport bad = genericity_audit({{&t, &good}, {&t, &degenerate}});
    CHECK_FALSE(bad.pass);
    GenericityReport bad2 = genericity_audit({{&t, &wall}});
    CHECK_FALSE(bad2.pass);
    GenericityReport dup = genericity_audit({{&t, &good}, {&t, &good}});
    CHECK_FALSE(dup.pass);
    GenericityReport lab = genericity_audit({{&t, &good}, {&t, &good}}, false);
    CHECK(lab.pass);
}
