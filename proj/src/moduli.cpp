#include "trop/moduli.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

namespace trop {

int CombinatorialType::valency(int v) const {
    int val = 0;
    for (const auto& e : edges) val += (e[0] == v) + (e[1] == v);
    for (size_t j = 0; j < end_vertex.size(); ++j)
        if (end_vertex[j] == v && !delta[j].is_zero()) ++val;
    return val;
}

std::vector<Vec2> CombinatorialType::vertex_vectors(int v) const {
    std::vector<Vec2> out;
    for (size_t e = 0; e < edges.size(); ++e) {
        if (edges[e][0] == v) out.push_back(edge_weights[e]);
        if (edges[e][1] == v) out.push_back(-edge_weights[e]);
    }
    for (size_t j = 0; j < end_vertex.size(); ++j)
        if (end_vertex[j] == v) out.push_back(delta[j]);
    return out;
}

int CombinatorialType::unpointed_trivalent_count() const {
    int c = 0;
    for (int m : markers) c += (m < 0);
    return c;
}

bool CombinatorialType::is_valid(const DescendantProfile& profile, std::string* why) const {
    auto fail = [&](const std::string& msg) {
        if (why) *why = msg;
        return false;
    };
    int V = vertex_count();
    if (V == 0) return fail("no vertices");
    if (static_cast<int>(edges.size()) != V - 1) return fail("edge count is not V-1");
    // connectivity
    std::vector<std::vector<int>> adj(V);
    for (const auto& e : edges) {
        if (e[0] < 0 || e[0] >= V || e[1] < 0 || e[1] >= V || e[0] == e[1])
            return fail("bad edge endpoints");
        adj[e[0]].push_back(e[1]);
        adj[e[1]].push_back(e[0]);
    }
    std::vector<char> seen(V, 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    int cnt = 0;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        ++cnt;
        for (int w : adj[v])
            if (!seen[w]) {
                seen[w] = 1;
                stack.push_back(w);
            }
    }
    if (cnt != V) return fail("graph is not connected");
    // markers
    std::vector<int> where(profile.n(), -1);
    for (int v = 0; v < V; ++v) {
        int m = markers[v];
        if (m >= profile.n()) return fail("marker out of range");
        if (m >= 0) {
            if (where[m] != -1) return fail("duplicate marker");
            where[m] = v;
        }
    }
    for (int i = 0; i < profile.n(); ++i)
        if (where[i] == -1) return fail("missing marker");
    // ends
    for (size_t j = 0; j < delta.size(); ++j) {
        if (delta[j].is_zero()) return fail("zero direction on a non-contracted end");
        if (end_vertex[j] < 0 || end_vertex[j] >= V) return fail("end at bad vertex");
    }
    // weights non-zero, balancing, valencies
    for (const Vec2& w : edge_weights)
        if (w.is_zero()) return fail("zero weight on a bounded edge");
    for (int v = 0; v < V; ++v) {
        long sx = 0, sy = 0;
        for (const Vec2& w : vertex_vectors(v)) {
            sx += w.x;
            sy += w.y;
        }
        if (sx != 0 || sy != 0) return fail("balancing fails at a vertex");
        int want = markers[v] >= 0 ? profile.k[markers[v]] + 2 : 3;
        if (valency(v) != want) return fail("wrong valency at a vertex");
    }
    return true;
}

bool CombinatorialType::audit_tree_decomposition() const {
    int V = vertex_count();
    // components of the unpointed subgraph
    std::vector<int> comp(V, -1);
    int ncomp = 0;
    for (int v = 0; v < V; ++v) {
        if (markers[v] >= 0 || comp[v] != -1) continue;
        std::vector<int> stack{v};
        comp[v] = ncomp;
        while (!stack.empty()) {
            int u = stack.back();
            stack.pop_back();
            for (const auto& e : edges) {
                int other = -1;
                if (e[0] == u) other = e[1];
                if (e[1] == u) other = e[0];
                if (other >= 0 && markers[other] < 0 && comp[other] == -1) {
                    comp[other] = ncomp;
                    stack.push_back(other);
                }
            }
        }
        ++ncomp;
    }
    std::vector<int> ends_in(ncomp, 0);
    for (size_t j = 0; j < delta.size(); ++j) {
        int v = end_vertex[j];
        if (markers[v] < 0) ++ends_in[comp[v]];
        // an end at a pointed vertex is its own component with one end: fine
    }
    for (int c = 0; c < ncomp; ++c)
        if (ends_in[c] != 1) return false;
    // an edge joining two pointed vertices is a component with no end
    for (const auto& e : edges)
        if (markers[e[0]] >= 0 && markers[e[1]] >= 0) return false;
    return true;
}

namespace {

std::string end_color(const CombinatorialType& t, size_t j, bool labeled) {
    if (labeled) return "L" + std::to_string(j);
    return "D" + to_string(t.delta[j]);
}

std::string encode(const CombinatorialType& t, bool labeled, int v, int parent,
                   const std::vector<std::vector<int>>& adj,
                   const std::vector<std::vector<std::string>>& vertex_ends) {
    std::vector<std::string> kids;
    for (int w : adj[v])
        if (w != parent) kids.push_back(encode(t, labeled, w, v, adj, vertex_ends));
    std::sort(kids.begin(), kids.end());
    std::ostringstream os;
    os << "(";
    if (t.markers[v] >= 0)
        os << "P" << t.markers[v];
    else
        os << "U";
    os << "[";
    for (const auto& s : vertex_ends[v]) os << s << ";";
    os << "]";
    for (const auto& s : kids) os << s;
    os << ")";
    return os.str();
}

}  // namespace

std::string CombinatorialType::canonical_key(bool labeled) const {
    int V = vertex_count();
    std::vector<std::vector<int>> adj(V);
    for (const auto& e : edges) {
        adj[e[0]].push_back(e[1]);
        adj[e[1]].push_back(e[0]);
    }
    std::vector<std::vector<std::string>> vertex_ends(V);
    for (size_t j = 0; j < delta.size(); ++j)
        vertex_ends[end_vertex[j]].push_back(end_color(*this, j, labeled));
    for (auto& v : vertex_ends) std::sort(v.begin(), v.end());
    std::string best;
    for (int v = 0; v < V; ++v) {
        std::string s = encode(*this, labeled, v, -1, adj, vertex_ends);
        if (best.empty() || s < best) best = s;
    }
    return best;
}

nlohmann::json CombinatorialType::to_json() const {
    nlohmann::json j;
    j["n"] = n;
    j["markers"] = markers;
    nlohmann::json je = nlohmann::json::array();
    for (size_t e = 0; e < edges.size(); ++e)
        je.push_back({{"v", {edges[e][0], edges[e][1]}},
                      {"weight", {edge_weights[e].x, edge_weights[e].y}}});
    j["edges"] = je;
    nlohmann::json jn = nlohmann::json::array();
    for (size_t q = 0; q < delta.size(); ++q)
        jn.push_back({{"vertex", end_vertex[q]}, {"direction", {delta[q].x, delta[q].y}}});
    j["ends"] = jn;
    return j;
}

CombinatorialType CombinatorialType::from_json(const nlohmann::json& j) {
    CombinatorialType t;
    t.n = j.at("n").get<int>();
    t.markers = j.at("markers").get<std::vector<int>>();
    for (const auto& je : j.at("edges")) {
        t.edges.push_back({je.at("v")[0].get<int>(), je.at("v")[1].get<int>()});
        t.edge_weights.push_back(
            {je.at("weight")[0].get<long>(), je.at("weight")[1].get<long>()});
    }
    for (const auto& jn : j.at("ends")) {
        t.end_vertex.push_back(jn.at("vertex").get<int>());
        t.delta.push_back(
            {jn.at("direction")[0].get<long>(), jn.at("direction")[1].get<long>()});
    }
    return t;
}

// ---------------------------------------------------------------------------
// enumeration
// ---------------------------------------------------------------------------

namespace {

// Assign bounded-edge weights from the end data by pushing subtree sums up a
// rooted copy of the tree. Returns false if a bounded edge gets weight zero.
bool propagate_weights(CombinatorialType& t) {
    int V = t.vertex_count();
    t.edge_weights.assign(t.edges.size(), Vec2{});
    if (V == 1) return true;
    std::vector<std::vector<std::pair<int, int>>> adj(V);  // (edge, other)
    for (size_t e = 0; e < t.edges.size(); ++e) {
        adj[t.edges[e][0]].push_back({static_cast<int>(e), t.edges[e][1]});
        adj[t.edges[e][1]].push_back({static_cast<int>(e), t.edges[e][0]});
    }
    std::vector<long> sx(V, 0), sy(V, 0);
    for (size_t j = 0; j < t.delta.size(); ++j) {
        sx[t.end_vertex[j]] += t.delta[j].x;
        sy[t.end_vertex[j]] += t.delta[j].y;
    }
    std::vector<int> order, parent(V, -1), paredge(V, -1);
    std::vector<char> seen(V, 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        order.push_back(v);
        for (auto [e, w] : adj[v])
            if (!seen[w]) {
                seen[w] = 1;
                parent[w] = v;
                paredge[w] = e;
                stack.push_back(w);
            }
    }
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
        int v = *it;
        if (parent[v] < 0) continue;
        // weight from parent's side equals the sum of end directions below v
        Vec2 w{sx[v], sy[v]};
        if (w.is_zero()) return false;
        int e = paredge[v];
        t.edge_weights[e] = (t.edges[e][0] == parent[v]) ? w : -w;
        sx[parent[v]] += sx[v];
        sy[parent[v]] += sy[v];
    }
    return true;
}

}  // namespace

std::vector<CombinatorialType> enumerate_types(const Degree& degree,
                                               const DescendantProfile& profile,
                                               EndLabeling labeling) {
    const int n = profile.n();
    const int r = degree.size();
    const long U = r - 2 - profile.total();
    std::vector<CombinatorialType> out;
    if (U < 0) return out;
    const int V = n + static_cast<int>(U);
    const bool labeled = labeling == EndLabeling::kLabeled;

    std::vector<int> val(V);
    for (int i = 0; i < n; ++i) val[i] = profile.k[i] + 2;
    for (int v = n; v < V; ++v) val[v] = 3;

    std::map<std::string, CombinatorialType> seen;

    // capacities after choosing tree degrees, then end placements
    std::vector<int> treedeg(V, 0);

    auto handle_tree = [&](const std::vector<std::array<int, 2>>& edges) {
        std::vector<int> cap(V);
        for (int v = 0; v < V; ++v) cap[v] = val[v];
        for (const auto& e : edges) {
            --cap[e[0]];
            --cap[e[1]];
        }
        for (int v = 0; v < V; ++v)
            if (cap[v] < 0) return;
        long capsum = std::accumulate(cap.begin(), cap.end(), 0LL);
        if (capsum != r) return;
        // place labeled ends one by one into remaining capacity
        std::vector<int> endat(r, -1);
        std::function<void(int)> place = [&](int j) {
            if (j == r) {
                CombinatorialType t;
                t.n = n;
                t.markers.resize(V);
                for (int v = 0; v < V; ++v) t.markers[v] = v < n ? v : -1;
                t.edges = edges;
                t.end_vertex = endat;
                t.delta = degree.entries;
                if (!propagate_weights(t)) return;
                std::string key = t.canonical_key(labeled);
                if (!seen.count(key)) seen.emplace(std::move(key), std::move(t));
                return;
            }
            // identical ends (same direction) are placed in nondecreasing
            // vertex order, cutting the permutation factor early
            int floor_v = 0;
            if (!labeled) {
                for (int p = 0; p < j; ++p)
                    if (degree.entries[p] == degree.entries[j]) floor_v = std::max(floor_v, endat[p]);
            }
            for (int v = floor_v; v < V; ++v) {
                if (cap[v] == 0) continue;
                --cap[v];
                endat[j] = v;
                place(j + 1);
                ++cap[v];
                endat[j] = -1;
            }
        };
        place(0);
    };

    if (V == 1) {
        handle_tree({});
        return [&] {
            std::vector<CombinatorialType> res;
            for (auto& [k, t] : seen) res.push_back(std::move(t));
            return res;
        }();
    }

    // trees with prescribed degree sequence == distinct permutations of the
    // Pruefer multiset {v repeated d_v - 1}
    std::function<void(int, int)> degrees = [&](int v, int sum) {
        if (v == V) {
            if (sum != 2 * (V - 1)) return;
            std::vector<int> pruefer;
            for (int u = 0; u < V; ++u)
                for (int c = 0; c < treedeg[u] - 1; ++c) pruefer.push_back(u);
            std::sort(pruefer.begin(), pruefer.end());
            do {
                // decode
                std::vector<int> deg(V, 1);
                for (int x : pruefer) ++deg[x];
                std::set<int> leaves;
                for (int u = 0; u < V; ++u)
                    if (deg[u] == 1) leaves.insert(u);
                std::vector<std::array<int, 2>> edges;
                std::vector<int> seq = pruefer;
                for (int x : seq) {
                    int leaf = *leaves.begin();
                    leaves.erase(leaves.begin());
                    edges.push_back({std::min(leaf, x), std::max(leaf, x)});
                    if (--deg[x] == 1) leaves.insert(x);
                }
                auto it = leaves.begin();
                int a = *it++;
                int b = *it;
                edges.push_back({std::min(a, b), std::max(a, b)});
                handle_tree(edges);
            } while (std::next_permutation(pruefer.begin(), pruefer.end()));
            return;
        }
        int remaining = V - v - 1;
        for (int d = 1; d <= std::min(val[v], 2 * (V - 1)); ++d) {
            if (sum + d + remaining > 2 * (V - 1)) break;
            treedeg[v] = d;
            degrees(v + 1, sum + d);
        }
        treedeg[v] = 0;
    };
    degrees(0, 0);

    std::vector<CombinatorialType> res;
    res.reserve(seen.size());
    for (auto& [k, t] : seen) res.push_back(std::move(t));
    return res;
}

}  // namespace trop
