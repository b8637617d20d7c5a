#include "trop/solver.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <sstream>

namespace trop {

namespace {

constexpr std::array<int, 24> kPrimeLadder = {2,  3,  5,  7,  11, 13, 17, 19, 23, 29, 31, 37,
                                              41, 43, 47, 53, 59, 61, 67, 71, 73, 79, 83, 89};

}  // namespace

PointConfiguration sample_generic_points(int n, unsigned long seed, long bound) {
    if (n < 1) throw std::invalid_argument("need n >= 1 points");
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<long> dist(-bound, bound);
    PointConfiguration cfg;
    cfg.seed = seed;
    std::set<std::pair<std::string, std::string>> used;
    for (int i = 0; i < n; ++i) {
        int px = kPrimeLadder[(2 * i) % kPrimeLadder.size()];
        int py = kPrimeLadder[(2 * i + 1) % kPrimeLadder.size()];
        while (true) {
            mpq_class x(dist(rng), px), y(dist(rng), py);
            x.canonicalize();
            y.canonicalize();
            auto key = std::make_pair(x.get_str(), y.get_str());
            if (used.insert(key).second) {
                cfg.points.push_back({x, y});
                break;
            }
        }
    }
    return cfg;
}

namespace {

// Fraction-free elimination of an integer augmented matrix. Returns the list
// of pivot columns; rows end up in echelon form.
std::vector<int> bareiss_echelon(std::vector<std::vector<mpz_class>>& m, int cols) {
    int rows = static_cast<int>(m.size());
    std::vector<int> pivots;
    mpz_class prev = 1;
    int row = 0;
    for (int col = 0; col < cols && row < rows; ++col) {
        int sel = -1;
        for (int i = row; i < rows; ++i)
            if (m[i][col] != 0) {
                sel = i;
                break;
            }
        if (sel < 0) continue;
        std::swap(m[row], m[sel]);
        for (int i = row + 1; i < rows; ++i) {
            for (int j = col + 1; j <= cols; ++j) {
                mpz_class t = m[row][col] * m[i][j] - m[i][col] * m[row][j];
                mpz_divexact(m[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
            }
            m[i][col] = 0;
        }
        prev = m[row][col];
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

}  // namespace

SolveOutcome solve_through_points(const CombinatorialType& type, const PointConfiguration& p) {
    const int V = type.vertex_count();
    const int E = static_cast<int>(type.edges.size());
    const int n = type.n;
    if (p.n() != n) throw std::invalid_argument("point count does not match marked ends");

    // rooted orientation from vertex 0
    std::vector<std::vector<std::pair<int, int>>> adj(V);
    for (int e = 0; e < E; ++e) {
        adj[type.edges[e][0]].push_back({e, type.edges[e][1]});
        adj[type.edges[e][1]].push_back({e, type.edges[e][0]});
    }
    std::vector<int> parent(V, -1), paredge(V, -1), order;
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
    // weight of parent edge oriented parent -> child
    auto down_weight = [&](int child) {
        int e = paredge[child];
        return type.edges[e][0] == parent[child] ? type.edge_weights[e] : -type.edge_weights[e];
    };

    std::vector<int> vertex_of_mark(n, -1);
    for (int v = 0; v < V; ++v)
        if (type.markers[v] >= 0) vertex_of_mark[type.markers[v]] = v;

    // unknowns: x0, y0, lengths; equations: 2 per marked point
    const int cols = 2 + E;
    std::vector<std::vector<mpz_class>> m;
    m.reserve(2 * n);
    std::vector<std::vector<mpq_class>> qrows;  // rational copy for re-substitution
    for (int i = 0; i < n; ++i) {
        int v = vertex_of_mark[i];
        std::vector<long> cx(E, 0), cy(E, 0);
        for (int u = v; parent[u] >= 0; u = parent[u]) {
            Vec2 w = down_weight(u);
            cx[paredge[u]] += w.x;
            cy[paredge[u]] += w.y;
        }
        for (int c = 0; c < 2; ++c) {
            std::vector<mpq_class> qrow(cols + 1);
            qrow[c] = 1;
            for (int e = 0; e < E; ++e) qrow[2 + e] = c == 0 ? cx[e] : cy[e];
            qrow[cols] = p.points[i][c];
            // clear denominators
            mpz_class den = qrow[cols].get_den();
            std::vector<mpz_class> irow(cols + 1);
            for (int j = 0; j <= cols; ++j) {
                mpq_class scaled = qrow[j] * den;
                irow[j] = scaled.get_num();  // scaled is integral
            }
            qrows.push_back(std::move(qrow));
            m.push_back(std::move(irow));
        }
    }

    std::vector<std::vector<mpz_class>> msave = m;
    std::vector<int> pivots = bareiss_echelon(m, cols);

    if (static_cast<int>(pivots.size()) < cols) {
        // rank deficient; decide consistency from the echelon form
        bool inconsistent = false;
        for (size_t i = pivots.size(); i < m.size(); ++i)
            if (m[i][cols] != 0) inconsistent = true;
        SolveOutcome out;
        out.status = inconsistent ? SolveStatus::kNoSolution : SolveStatus::kDegenerate;
        return out;
    }

    // unique solution: back-substitute in rationals
    std::vector<mpq_class> sol(cols);
    for (int i = cols - 1; i >= 0; --i) {
        mpq_class acc = m[i][cols];
        for (int j = i + 1; j < cols; ++j) acc -= mpq_class(m[i][j]) * sol[j];
        acc /= mpq_class(m[i][i]);
        acc.canonicalize();
        sol[i] = acc;
    }
    // exact re-substitution into the original rows
    for (const auto& qrow : qrows) {
        mpq_class acc = 0;
        for (int j = 0; j < cols; ++j) acc += qrow[j] * sol[j];
        if (acc != qrow[cols]) {
            SolveOutcome out;
            out.status = SolveStatus::kNoSolution;
            return out;
        }
    }

    bool zero = false, negative = false;
    for (int e = 0; e < E; ++e) {
        if (sol[2 + e] == 0) zero = true;
        if (sol[2 + e] < 0) negative = true;
    }
    if (negative) return SolveOutcome{SolveStatus::kNonPositiveLength, std::nullopt};
    if (zero) return SolveOutcome{SolveStatus::kZeroLength, std::nullopt};

    ParametrizedCurve curve;
    curve.type = type;
    curve.lengths.assign(sol.begin() + 2, sol.end());
    curve.positions.assign(V, QPoint{});
    curve.positions[0] = {sol[0], sol[1]};
    for (int v : order) {
        if (parent[v] < 0) continue;
        Vec2 w = down_weight(v);
        const mpq_class& l = curve.lengths[paredge[v]];
        curve.positions[v] = qpoint(curve.positions[parent[v]][0] + l * w.x,
                                    curve.positions[parent[v]][1] + l * w.y);
    }
    return SolveOutcome{SolveStatus::kSolved, std::move(curve)};
}

std::string image_fingerprint(const ParametrizedCurve& c) {
    std::vector<std::string> parts;
    auto pt = [](const QPoint& q) { return q[0].get_str() + "," + q[1].get_str(); };
    for (size_t e = 0; e < c.type.edges.size(); ++e) {
        std::string a = pt(c.positions[c.type.edges[e][0]]);
        std::string b = pt(c.positions[c.type.edges[e][1]]);
        if (b < a) std::swap(a, b);
        parts.push_back("S" + a + "|" + b);
    }
    for (size_t j = 0; j < c.type.delta.size(); ++j) {
        Vec2 d = primitive_direction(c.type.delta[j]);
        parts.push_back("R" + pt(c.positions[c.type.end_vertex[j]]) + "|" + to_string(d));
    }
    std::sort(parts.begin(), parts.end());
    std::string out;
    for (const auto& s : parts) out += s + ";";
    return out;
}

GenericityReport genericity_audit(
    const std::vector<std::pair<const CombinatorialType*, const SolveOutcome*>>& results,
    bool check_images) {
    GenericityReport rep;
    std::map<std::string, int> images;
    int idx = 0;
    for (const auto& [type, outcome] : results) {
        std::ostringstream os;
        switch (outcome->status) {
            case SolveStatus::kDegenerate:
                os << "type " << idx << ": positive-dimensional solution family";
                rep.pass = false;
                rep.diagnostics.push_back(os.str());
                break;
            case SolveStatus::kZeroLength:
                os << "type " << idx << ": solution on a cone wall (zero length)";
                rep.pass = false;
                rep.diagnostics.push_back(os.str());
                break;
            case SolveStatus::kSolved: {
                if (!check_images) break;
                std::string fp = image_fingerprint(*outcome->curve);
                auto [it, fresh] = images.emplace(fp, idx);
                if (!fresh) {
                    os << "types " << it->second << " and " << idx << " share an image";
                    rep.pass = false;
                    rep.diagnostics.push_back(os.str());
                }
                break;
            }
            default: break;
        }
        ++idx;
    }
    return rep;
}

}  // namespace trop
