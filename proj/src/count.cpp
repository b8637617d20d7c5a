#include "trop/count.hpp"

#include <algorithm>
#include <cstdint>
#include <deque>
#include <functional>
#include <map>
#include <numeric>
#include <sstream>
#include <unordered_map>

#include "trop/geom.hpp"

namespace trop {

RefinedPoly curve_multiplicity(const CombinatorialType& type, Convention convention) {
    RefinedPoly m = RefinedPoly::constant(GQ(1));
    for (int v = 0; v < type.vertex_count(); ++v) {
        std::vector<Vec2> vecs = type.vertex_vectors(v);
        if (type.markers[v] < 0)
            m = m * vertex_multiplicity(VertexKind::kUnpointedTrivalent, vecs, convention);
        else
            m = m * vertex_multiplicity(VertexKind::kPointed, vecs, convention);
    }
    return m;
}

long end_symmetry_order(const CombinatorialType& type) {
    long order = 1;
    for (int v = 0; v < type.vertex_count(); ++v) {
        std::map<Vec2, int> counts;
        for (size_t j = 0; j < type.delta.size(); ++j)
            if (type.end_vertex[j] == v) ++counts[type.delta[j]];
        for (const auto& [dir, c] : counts)
            for (int t = 2; t <= c; ++t) order *= t;
    }
    return order;
}

namespace {

// one class per distinct direction, or one per end in labeled mode
struct ClassTable {
    std::vector<Vec2> dirs;
    std::vector<int> mult;
    std::vector<std::vector<int>> delta_idx;  // concrete end indices per class
    int root_class = 0;
    int root_end = 0;  // concrete index of the end the tree is rooted at
};

ClassTable build_classes(const Degree& degree, EndLabeling labeling) {
    ClassTable t;
    if (labeling == EndLabeling::kLabeled) {
        for (int j = 0; j < degree.size(); ++j) {
            t.dirs.push_back(degree.entries[j]);
            t.mult.push_back(1);
            t.delta_idx.push_back({j});
        }
        t.root_class = degree.size() - 1;
        t.root_end = degree.size() - 1;
        return t;
    }
    std::map<Vec2, int> where;
    for (int j = 0; j < degree.size(); ++j) {
        auto it = where.find(degree.entries[j]);
        if (it == where.end()) {
            where[degree.entries[j]] = static_cast<int>(t.dirs.size());
            t.dirs.push_back(degree.entries[j]);
            t.mult.push_back(1);
            t.delta_idx.push_back({j});
        } else {
            ++t.mult[it->second];
            t.delta_idx[it->second].push_back(j);
        }
    }
    // fixed but arbitrary root direction; rooting a type at different equal
    // ends can rediscover it, which canonical deduplication removes
    t.root_class =
        static_cast<int>(std::max_element(t.dirs.begin(), t.dirs.end()) - t.dirs.begin());
    t.root_end = t.delta_idx[t.root_class].back();
    return t;
}

// A derivation is a rooted subtree hanging below one bounded edge: the root
// vertex kind, the child subtrees, the bare ends attached at the root, the
// exact set of possible root positions, and the count of ends joined to the
// root through unpointed vertices only (each such component may hold exactly
// one end).
struct DerivNode {
    bool pointed = false;
    int marker = -1;
    std::vector<const DerivNode*> kids;
    std::vector<int> end_kids;
    geom::Iface pos;
    int open_ends = 0;
    Vec2 weight{};
};

struct DpKey {
    std::vector<int> a;
    uint32_t q = 0;
    bool operator==(const DpKey&) const = default;
};

struct DpKeyHash {
    size_t operator()(const DpKey& k) const {
        size_t h = std::hash<uint32_t>()(k.q);
        for (int v : k.a) h = h * 1315423911u + static_cast<size_t>(v) + 0x9e3779b9;
        return h;
    }
};

struct SubPart {
    std::vector<int> a;
    uint32_t q = 0;
    int deriv = 0;
};

class DpEngine {
  public:
    DpEngine(const ClassTable& classes, const DescendantProfile& profile,
             const PointConfiguration& pts)
        : classes_(classes), profile_(profile), pts_(pts) {}

    const std::vector<DerivNode*>& subtrees(const std::vector<int>& a, uint32_t q) {
        DpKey key{a, q};
        if (auto it = memo_.find(key); it != memo_.end()) return it->second;
        std::vector<DerivNode*>& out = memo_.emplace(key, std::vector<DerivNode*>{}).first->second;
        if (q == 0) return out;  // every subtree holds a marked point

        for (int i = 0; i < profile_.n(); ++i) {
            if (!(q >> i & 1)) continue;
            geom::Iface at = geom::make_point(pts_.points[i]);
            for_each_combo(a, q & ~(1u << i), profile_.k[i] + 1, &at,
                           [&](std::vector<const DerivNode*> kids, std::vector<int> ends,
                               const geom::Iface&) {
                               DerivNode node;
                               node.pointed = true;
                               node.marker = i;
                               node.kids = std::move(kids);
                               node.end_kids = std::move(ends);
                               node.pos = geom::make_point(pts_.points[i]);
                               node.weight = weight_of(a);
                               arena_.push_back(std::move(node));
                               out.push_back(&arena_.back());
                           });
        }
        for_each_combo(a, q, 2, nullptr,
                       [&](std::vector<const DerivNode*> kids, std::vector<int> ends,
                           const geom::Iface& pos) {
                           DerivNode node;
                           node.pointed = false;
                           node.kids = std::move(kids);
                           node.end_kids = std::move(ends);
                           node.pos = pos;
                           node.open_ends = static_cast<int>(node.end_kids.size());
                           for (const DerivNode* kd : node.kids)
                               if (!kd->pointed) node.open_ends += kd->open_ends;
                           node.weight = weight_of(a);
                           arena_.push_back(std::move(node));
                           out.push_back(&arena_.back());
                       });
        return memo_.at(key);
    }

    Vec2 weight_of(const std::vector<int>& a) const {
        long x = 0, y = 0;
        for (size_t c = 0; c < a.size(); ++c) {
            x += a[c] * classes_.dirs[c].x;
            y += a[c] * classes_.dirs[c].y;
        }
        return {x, y};
    }

    // Split (a, q) into nparts children, each a bare end or a subtree, in
    // canonical non-decreasing part order. With a pointed parent (at != null)
    // every subtree child must be reachable from the parent point along its
    // edge direction and must close its unpointed component; with an
    // unpointed parent the shifted child interfaces are intersected and at
    // most one end may stay open.
    template <typename Sink>
    void for_each_combo(const std::vector<int>& a, uint32_t q, int nparts,
                        const geom::Iface* at, Sink&& sink) {
        std::vector<int> end_parts;
        std::vector<SubPart> sub_parts;

        auto part_key = [](bool is_end, int cls, const std::vector<int>& pa, uint32_t pq,
                           int deriv) {
            std::vector<long> k;
            k.push_back(is_end ? 0 : 1);
            if (is_end) {
                k.push_back(cls);
            } else {
                for (int v : pa) k.push_back(v);
                k.push_back(pq);
                k.push_back(deriv);
            }
            return k;
        };

        std::function<void(std::vector<int>, uint32_t, int, std::vector<long>)> rec =
            [&](std::vector<int> rem_a, uint32_t rem_q, int pidx, std::vector<long> last) {
                if (pidx == nparts) {
                    if (rem_q != 0) return;
                    if (std::accumulate(rem_a.begin(), rem_a.end(), 0) != 0) return;
                    finish(at, end_parts, sub_parts, sink);
                    return;
                }
                for (size_t c = 0; c < rem_a.size(); ++c) {
                    if (rem_a[c] == 0) continue;
                    auto key = part_key(true, static_cast<int>(c), {}, 0, 0);
                    if (key < last) continue;
                    auto na = rem_a;
                    --na[c];
                    end_parts.push_back(static_cast<int>(c));
                    rec(na, rem_q, pidx + 1, key);
                    end_parts.pop_back();
                }
                if (rem_q == 0) return;  // remaining parts would all be pointless
                iterate_submultisets(rem_a, [&](const std::vector<int>& pa) {
                    uint32_t pq = rem_q;
                    while (true) {
                        const std::vector<DerivNode*>& ds = subtrees(pa, pq);
                        size_t count = ds.size();  // self-referential growth is sterile
                        for (size_t di = 0; di < count; ++di) {
                            auto key = part_key(false, 0, pa, pq, static_cast<int>(di));
                            if (key < last) continue;
                            std::vector<int> na(rem_a.size());
                            for (size_t c = 0; c < rem_a.size(); ++c) na[c] = rem_a[c] - pa[c];
                            sub_parts.push_back({pa, pq, static_cast<int>(di)});
                            rec(na, rem_q & ~pq, pidx + 1, key);
                            sub_parts.pop_back();
                        }
                        if (pq == 0) break;
                        pq = (pq - 1) & rem_q;
                        if (pq == 0) break;
                    }
                });
            };
        rec(a, q, 0, {});
    }

    template <typename Fn>
    void iterate_submultisets(const std::vector<int>& bound, Fn&& fn) {
        std::vector<int> cur(bound.size(), 0);
        while (true) {
            if (std::any_of(cur.begin(), cur.end(), [](int v) { return v > 0; })) fn(cur);
            size_t i = 0;
            while (i < cur.size() && cur[i] == bound[i]) cur[i++] = 0;
            if (i == cur.size()) break;
            ++cur[i];
        }
    }

  private:
    template <typename Sink>
    void finish(const geom::Iface* at, const std::vector<int>& end_parts,
                const std::vector<SubPart>& sub_parts, Sink& sink) {
        std::vector<const DerivNode*> kids;
        kids.reserve(sub_parts.size());
        for (const auto& sp : sub_parts) kids.push_back(memo_.at(DpKey{sp.a, sp.q})[sp.deriv]);
        if (at) {
            for (const DerivNode* kd : kids) {
                if (kd->weight.is_zero()) return;
                if (!kd->pointed && kd->open_ends != 1) return;
                geom::Iface ray = geom::make_ray(at->p, kd->weight);
                if (geom::intersect(ray, kd->pos).empty()) return;
            }
            sink(std::move(kids), end_parts, *at);
            return;
        }
        int open = static_cast<int>(end_parts.size());
        for (const DerivNode* kd : kids)
            if (!kd->pointed) open += kd->open_ends;
        if (open > 1) return;
        if (kids.empty()) return;
        geom::Iface pos;
        bool first = true;
        for (const DerivNode* kd : kids) {
            if (kd->weight.is_zero()) return;
            geom::Iface sh = geom::shift_ray(kd->pos, kd->weight);
            pos = first ? sh : geom::intersect(pos, sh);
            first = false;
            if (pos.empty()) return;
        }
        sink(std::move(kids), end_parts, pos);
    }

    const ClassTable& classes_;
    const DescendantProfile& profile_;
    const PointConfiguration& pts_;
    std::deque<DerivNode> arena_;
    std::unordered_map<DpKey, std::vector<DerivNode*>, DpKeyHash> memo_;
};

CombinatorialType materialize(const DerivNode* top, const ClassTable& classes,
                              const Degree& degree, int n) {
    CombinatorialType t;
    t.n = n;
    t.delta = degree.entries;
    t.end_vertex.assign(degree.size(), -1);

    std::vector<std::vector<int>> queues = classes.delta_idx;
    auto& rootq = queues[classes.root_class];
    rootq.erase(std::find(rootq.begin(), rootq.end(), classes.root_end));

    t.markers.assign(n, 0);
    for (int i = 0; i < n; ++i) t.markers[i] = i;
    int next_unpointed = n;

    std::function<int(const DerivNode*)> walk = [&](const DerivNode* d) -> int {
        int vid;
        if (d->pointed) {
            vid = d->marker;
        } else {
            vid = next_unpointed++;
            t.markers.push_back(-1);
        }
        for (int cls : d->end_kids) {
            int j = queues[cls].front();
            queues[cls].erase(queues[cls].begin());
            t.end_vertex[j] = vid;
        }
        for (const DerivNode* kd : d->kids) {
            int kid = walk(kd);
            t.edges.push_back({vid, kid});
            t.edge_weights.push_back(kd->weight);
        }
        return vid;
    };
    int top_vertex = walk(top);
    t.end_vertex[classes.root_end] = top_vertex;
    return t;
}

struct Candidate {
    CombinatorialType type;
    SolveOutcome outcome;
    std::string key;
};

std::vector<Candidate> dp_find_candidates(const Degree& degree, const DescendantProfile& profile,
                                          const PointConfiguration& pts,
                                          const CountOptions& opt) {
    const int n = profile.n();
    ClassTable classes = build_classes(degree, opt.labeling);
    DpEngine engine(classes, profile, pts);

    std::vector<int> a0(classes.mult.begin(), classes.mult.end());
    --a0[classes.root_class];
    uint32_t qall = (1u << n) - 1;

    std::vector<const DerivNode*> tops;
    std::deque<DerivNode> local;

    for (const DerivNode* d : engine.subtrees(a0, qall))
        if (d->pointed) tops.push_back(d);

    // unpointed top vertex: the root end joins its component, so both child
    // components must already be closed below
    engine.for_each_combo(a0, qall, 2, nullptr,
                          [&](std::vector<const DerivNode*> kids, std::vector<int> ends,
                              const geom::Iface& pos) {
                              if (!ends.empty()) return;
                              for (const DerivNode* kd : kids)
                                  if (!kd->pointed && kd->open_ends != 0) return;
                              DerivNode node;
                              node.pointed = false;
                              node.kids = std::move(kids);
                              node.pos = pos;
                              node.weight = engine.weight_of(a0);
                              local.push_back(std::move(node));
                              tops.push_back(&local.back());
                          });

    const bool labeled = opt.labeling == EndLabeling::kLabeled;
    std::map<std::string, CombinatorialType> unique;
    for (const DerivNode* d : tops) {
        CombinatorialType t = materialize(d, classes, degree, n);
        std::string key = t.canonical_key(labeled);
        unique.emplace(std::move(key), std::move(t));
    }
    std::vector<Candidate> cands;
    cands.reserve(unique.size());
    for (auto& [key, t] : unique) {
        Candidate c;
        c.key = key;
        c.type = std::move(t);
        cands.push_back(std::move(c));
    }

    if (opt.exec == Exec::kParallel) {
#pragma omp parallel for schedule(dynamic)
        for (long i = 0; i < static_cast<long>(cands.size()); ++i)
            cands[i].outcome = solve_through_points(cands[i].type, pts);
    } else {
        for (auto& c : cands) c.outcome = solve_through_points(c.type, pts);
    }
    return cands;
}

CountResult assemble(const Degree& degree, const DescendantProfile& profile,
                     const PointConfiguration& pts, const CountOptions& opt,
                     std::vector<Candidate> cands) {
    std::vector<std::pair<const CombinatorialType*, const SolveOutcome*>> audit_in;
    audit_in.reserve(cands.size());
    for (const auto& c : cands) audit_in.push_back({&c.type, &c.outcome});
    // distinct labeled types may legitimately share an image (relabelings of
    // equal ends), so the coincidence check only runs up to relabeling
    GenericityReport rep =
        genericity_audit(audit_in, opt.labeling == EndLabeling::kUpToRelabeling);
    if (!rep.pass) {
        std::string msg = "genericity audit failed";
        for (const auto& d : rep.diagnostics) msg += "; " + d;
        throw genericity_error(msg);
    }

    CountResult res;
    res.degree = degree;
    res.profile = profile;
    res.convention = opt.convention;
    res.labeling = opt.labeling;
    res.points = pts;
    res.seed = pts.seed;
    for (auto& c : cands) {
        if (c.outcome.status != SolveStatus::kSolved) continue;
        CountedCurve cc;
        cc.type = std::move(c.type);
        cc.curve = std::move(*c.outcome.curve);
        cc.multiplicity = curve_multiplicity(cc.type, opt.convention);
        cc.end_symmetry =
            opt.labeling == EndLabeling::kUpToRelabeling ? end_symmetry_order(cc.type) : 1;
        res.polynomial =
            res.polynomial + cc.multiplicity.scaled(GQ(mpq_class(1, cc.end_symmetry)));
        res.curves.push_back(std::move(cc));
    }
    return res;
}

}  // namespace

CountResult count_refined_at(const Degree& degree, const DescendantProfile& profile,
                             const PointConfiguration& points, const CountOptions& opt) {
    if (points.n() != profile.n())
        throw std::invalid_argument("point configuration size does not match profile");
    try {
        return assemble(degree, profile, points, opt,
                        dp_find_candidates(degree, profile, points, opt));
    } catch (const geom::degenerate_position& e) {
        throw genericity_error(std::string("degenerate point configuration: ") + e.what());
    }
}

CountResult count_refined(const Degree& degree, const DescendantProfile& profile,
                          unsigned long seed, const CountOptions& opt) {
    std::string last;
    for (int attempt = 0; attempt < std::max(1, opt.max_resamples); ++attempt) {
        PointConfiguration pts =
            sample_generic_points(profile.n(), seed + attempt, opt.point_bound);
        try {
            CountResult r = count_refined_at(degree, profile, pts, opt);
            r.resamples = attempt;
            return r;
        } catch (const genericity_error& e) {
            last = e.what();
        }
    }
    throw genericity_error("resampling budget exhausted: " + last);
}

CountResult count_refined_reference(const Degree& degree, const DescendantProfile& profile,
                                    const PointConfiguration& points, const CountOptions& opt) {
    std::vector<CombinatorialType> types = enumerate_types(degree, profile, opt.labeling);
    std::vector<Candidate> cands;
    cands.reserve(types.size());
    for (auto& t : types) {
        Candidate c;
        c.key = t.canonical_key(opt.labeling == EndLabeling::kLabeled);
        c.type = std::move(t);
        c.outcome = solve_through_points(c.type, points);
        cands.push_back(std::move(c));
    }
    return assemble(degree, profile, points, opt, std::move(cands));
}

UExpansion u_expansion(const CountResult& result, int order) {
    const int t = result.trivalent_count();
    if (order < t) throw std::invalid_argument("truncation order below leading power");
    RefinedPoly def_total;
    for (const auto& cc : result.curves)
        def_total = def_total + curve_multiplicity(cc.type, Convention::kDefinition)
                                    .scaled(GQ(mpq_class(1, cc.end_symmetry)));
    RefinedPoly raw = def_total.scaled(GQ::i_pow(-t));  // (-i)^t
    UExpansion ux;
    ux.series = substitute_exponential(raw, order);
    ux.leading_power = t;
    if (!ux.series.is_real()) throw std::runtime_error("u-expansion is not real");
    for (int j = 0; j < t && j <= order; ++j)
        if (!ux.series[j].is_zero())
            throw std::runtime_error("u-expansion does not vanish below the leading power");
    for (int j = t; j <= order; ++j)
        if ((j - t) % 2 == 1 && !ux.series[j].is_zero())
            throw std::runtime_error("u-expansion has an odd gap");
    for (int j = t; j <= order; j += 2) ux.genus_coeff.push_back(ux.series[j].re);
    return ux;
}

mpq_class classical_limit(const CountResult& result) {
    UExpansion ux = u_expansion(result, result.trivalent_count());
    return ux.genus_coeff.at(0);
}

InvarianceOutcome invariance_suite(const Degree& degree, const DescendantProfile& profile,
                                   const std::vector<unsigned long>& seeds,
                                   const CountOptions& opt) {
    InvarianceOutcome out;
    for (unsigned long s : seeds) out.results.push_back(count_refined(degree, profile, s, opt));
    out.pass = !out.results.empty();
    for (size_t i = 1; i < out.results.size(); ++i)
        if (!(out.results[i].polynomial == out.results[0].polynomial)) out.pass = false;
    return out;
}

}  // namespace trop
