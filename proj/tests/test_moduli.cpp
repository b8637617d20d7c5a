#include <doctest.h>

#include <map>
#include <set>

#include "trop/moduli.hpp"

using namespace trop;

namespace {

// Independent exhaustive oracle: every labeled tree on V vertices from a raw
// Pruefer scan, every end placement, then constraint filtering. Only the
// canonical-form helper is shared with the production path.
std::set<std::string> oracle_keys(const Degree& deg, const DescendantProfile& prof,
                                  bool labeled) {
    const int n = prof.n();
    const int r = deg.size();
    const int U = r - 2 - static_cast<int>(prof.total());
    REQUIRE(U >= 0);
    const int V = n + U;
    std::set<std::string> keys;

    std::vector<int> val(V);
    for (int i = 0; i < n; ++i) val[i] = prof.k[i] + 2;
    for (int v = n; v < V; ++v) val[v] = 3;

    auto try_tree = [&](const std::vector<std::array<int, 2>>& edges) {
        std::vector<int> cap(val);
        for (const auto& e : edges) {
            --cap[e[0]];
            --cap[e[1]];
        }
        for (int v = 0; v < V; ++v)
            if (cap[v] < 0) return;
        // place ends by odometer over V^r
        std::vector<int> endat(r, 0);
        while (true) {
            std::vector<int> used(V, 0);
            for (int j = 0; j < r; ++j) ++used[endat[j]];
            bool ok = true;
            for (int v = 0; v < V; ++v) ok = ok && used[v] == cap[v];
            if (ok) {
                CombinatorialType t;
                t.n = n;
                t.markers.resize(V);
                for (int v = 0; v < V; ++v) t.markers[v] = v < n ? v : -1;
                t.edges = edges;
                t.end_vertex = endat;
                t.delta = deg.entries;
                // balancing weights from subtree sums via repeated leaf peel
                std::vector<std::vector<int>> adj(V);
                for (size_t e = 0; e < edges.size(); ++e) {
                    adj[edges[e][0]].push_back(static_cast<int>(e));
                    adj[edges[e][1]].push_back(static_cast<int>(e));
                }
                t.edge_weights.assign(edges.size(), Vec2{});
                std::vector<long> sx(V, 0), sy(V, 0);
                for (int j = 0; j < r; ++j) {
                    sx[endat[j]] += deg.entries[j].x;
                    sy[endat[j]] += deg.entries[j].y;
                }
                std::vector<int> degseq(V, 0);
                for (const auto& e : edges) {
                    ++degseq[e[0]];
                    ++degseq[e[1]];
                }
                std::vector<char> done_edge(edges.size(), 0), done_v(V, 0);
                bool zero = false;
                for (int round = 0; round < V; ++round) {
                    for (int v = 0; v < V; ++v) {
                        if (done_v[v] || degseq[v] != 1) continue;
                        int eidx = -1;
                        for (int e : adj[v])
                            if (!done_edge[e]) eidx = e;
                        if (eidx < 0) continue;
                        int other = edges[eidx][0] == v ? edges[eidx][1] : edges[eidx][0];
                        Vec2 w{sx[v], sy[v]};
                        if (w.is_zero()) zero = true;
                        t.edge_weights[eidx] = edges[eidx][0] == v ? -w : w;
                        done_edge[eidx] = 1;
                        done_v[v] = 1;
                        --degseq[v];
                        --degseq[other];
                        sx[other] += sx[v];
                        sy[other] += sy[v];
                    }
                }
                std::string why;
                if (!zero && t.is_valid(prof, &why)) keys.insert(t.canonical_key(labeled));
            }
            int j = 0;
            while (j < r && endat[j] == V - 1) endat[j++] = 0;
            if (j == r) break;
            ++endat[j];
        }
    };

    if (V == 1) {
        try_tree({});
        return keys;
    }
    if (V == 2) {
        try_tree({{0, 1}});
        return keys;
    }
    std::vector<int> pruefer(V - 2, 0);
    while (true) {
        // decode
        std::vector<int> degseq(V, 1);
        for (int x : pruefer) ++degseq[x];
        std::set<int> leaves;
        for (int v = 0; v < V; ++v)
            if (degseq[v] == 1) leaves.insert(v);
        std::vector<std::array<int, 2>> edges;
        for (int x : pruefer) {
            int leaf = *leaves.begin();
            leaves.erase(leaves.begin());
            edges.push_back({std::min(leaf, x), std::max(leaf, x)});
            if (--degseq[x] == 1) leaves.insert(x);
        }
        auto it = leaves.begin();
        int a = *it++;
        edges.push_back({std::min(a, *it), std::max(a, *it)});
        try_tree(edges);
        int j = 0;
        while (j < V - 2 && pruefer[j] == V - 1) pruefer[j++] = 0;
        if (j == V - 2) break;
        ++pruefer[j];
    }
    return keys;
}

struct Instance {
    std::vector<Vec2> delta;
    std::vector<int> k;
    size_t unlabeled;
    size_t labeled;
};

const std::vector<Instance> kSmall = {
    {{{1, 0}, {-1, 0}}, {0}, 1, 1},
    {{{1, 0}, {0, 1}, {-1, -1}}, {0, 0}, 12, 12},
    {{{1, 0}, {0, 1}, {-1, 0}, {0, -1}}, {1, 0}, 20, 20},
    {{{1, 0}, {0, 1}, {-1, 0}, {0, -1}}, {0, 0, 0}, 420, 420},
    {{{2, 0}, {0, 1}, {-1, -1}, {-1, 0}}, {1, 0}, 30, 30},
    {{{1, 0}, {1, 0}, {-1, 0}, {-1, 0}}, {0, 0, 0}, 84, 210},
    {{{1, 0}, {1, 0}, {-1, -1}, {-1, 1}}, {0, 0, 0}, 345, 630},
};

}  // namespace

TEST_CASE("enumeration matches the exhaustive labeled-tree oracle") {
    for (const auto& inst : kSmall) {
        auto [deg, prof] = validate_problem(inst.delta, inst.k);
        for (bool labeled : {false, true}) {
            auto types = enumerate_types(
                deg, prof, labeled ? EndLabeling::kLabeled : EndLabeling::kUpToRelabeling);
            std::set<std::string> got;
            for (const auto& t : types) {
                std::string why;
                CHECK_MESSAGE(t.is_valid(prof, &why), why);
                got.insert(t.canonical_key(labeled));
            }
            CHECK(got.size() == types.size());  // no duplicates
            CHECK(types.size() == (labeled ? inst.labeled : inst.unlabeled));
            CHECK(got == oracle_keys(deg, prof, labeled));
        }
    }
}

TEST_CASE("structural counts on enumerated types") {
    for (const auto& inst : kSmall) {
        auto [deg, prof] = validate_problem(inst.delta, inst.k);
        int n = prof.n();
        int expected_trivalent = deg.size() - 2 - static_cast<int>(prof.total());
        for (const auto& t : enumerate_types(deg, prof, EndLabeling::kUpToRelabeling)) {
            CHECK(t.cone_dimension() == 2 * n - 2);
            CHECK(t.unpointed_trivalent_count() == expected_trivalent);
        }
    }
}

TEST_CASE("tree decomposition audit") {
    // line through two points, marked points on distinct rays: passes
    auto [deg, prof] = validate_problem({{1, 0}, {0, 1}, {-1, -1}}, {0, 0});
    auto types = enumerate_types(deg, prof, EndLabeling::kUpToRelabeling);
    int pass = 0, fail = 0;
    for (const auto& t : types) (t.audit_tree_decomposition() ? pass : fail)++;
    // both marked points on one ray leaves the star with two ends: 6 such types
    CHECK(pass == 6);
    CHECK(fail == 6);

    // hand-built negative control: both points on the same ray
    CombinatorialType bad;
    bad.n = 2;
    bad.markers = {0, 1, -1};
    bad.edges = {{0, 1}, {1, 2}};
    bad.edge_weights = {{-1, 0}, {-1, 0}};
    bad.end_vertex = {0, 2, 2};
    bad.delta = {{1, 0}, {0, 1}, {-1, -1}};
    std::string why;
    REQUIRE(bad.is_valid(prof, &why));
    CHECK_FALSE(bad.audit_tree_decomposition());
}

TEST_CASE("single-vertex type has an empty cone") {
    auto [deg, prof] = validate_problem({{1, 0}, {-1, 0}}, {0});
    auto types = enumerate_types(deg, prof, EndLabeling::kUpToRelabeling);
    REQUIRE(types.size() == 1);
    CHECK(types[0].cone_dimension() == 0);
    CHECK(types[0].audit_tree_decomposition());
}

TEST_CASE("type JSON round-trip preserves the canonical key") {
    auto [deg, prof] = validate_problem({{1, 0}, {0, 1}, {-1, 0}, {0, -1}}, {1, 0});
    for (const auto& t : enumerate_types(deg, prof, EndLabeling::kUpToRelabeling)) {
        CombinatorialType back = CombinatorialType::from_json(t.to_json());
        CHECK(back.canonical_key(true) == t.canonical_key(true));
        std::string why;
        CHECK(back.is_valid(prof, &why));
    }
}

TEST_CASE("paper example type appears in the enumeration") {
    std::vector<Vec2> delta{{-1, 0}, {-1, 0}, {0, -1}, {1, 0}, {1, 0}, {0, 1}};
    auto [deg, prof] = validate_problem(delta, {0, 1, 0, 0});
    auto types = enumerate_types(deg, prof, EndLabeling::kUpToRelabeling);
    // the figure's combinatorics: one trivalent pointed vertex, three bivalent
    // pointed vertices, three trivalent unpointed vertices
    bool found = false;
    for (const auto& t : types) {
        int biv = 0, tri_pointed = 0;
        for (int v = 0; v < t.vertex_count(); ++v) {
            if (t.markers[v] >= 0 && t.valency(v) == 2) ++biv;
            if (t.markers[v] >= 0 && t.valency(v) == 3) ++tri_pointed;
        }
        if (biv == 3 && tri_pointed == 1 && t.unpointed_trivalent_count() == 3) found = true;
    }
    CHECK(found);
}
