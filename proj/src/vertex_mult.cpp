#include "trop/vertex_mult.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <stdexcept>

namespace trop {

Convention convention_from_string(const std::string& s) {
    if (s == "raw") return Convention::kRaw;
    if (s == "definition") return Convention::kDefinition;
    if (s == "example") return Convention::kExample;
    throw std::invalid_argument("unknown convention: " + s);
}

std::string to_string(Convention c) {
    switch (c) {
        case Convention::kRaw: return "raw";
        case Convention::kDefinition: return "definition";
        default: return "example";
    }
}

std::vector<std::vector<int>> cyclic_order_representatives(int n) {
    std::vector<int> rest(n - 1);
    std::iota(rest.begin(), rest.end(), 1);
    std::vector<std::vector<int>> out;
    do {
        std::vector<int> rep;
        rep.reserve(n);
        rep.push_back(0);
        rep.insert(rep.end(), rest.begin(), rest.end());
        out.push_back(std::move(rep));
    } while (std::next_permutation(rest.begin(), rest.end()));
    return out;
}

namespace {

void require_balanced(const std::vector<Vec2>& vectors) {
    long sx = 0, sy = 0;
    for (const Vec2& v : vectors) {
        sx += v.x;
        sy += v.y;
    }
    if (sx != 0 || sy != 0) throw std::invalid_argument("vectors are not balanced");
}

}  // namespace

mpz_class k_omega(const std::vector<Vec2>& vectors, const std::vector<int>& rep) {
    require_balanced(vectors);
    int n = static_cast<int>(rep.size());
    if (n < 2) throw std::invalid_argument("k_omega needs N >= 2");
    mpz_class s = 0;
    for (int i = 1; i < n; ++i)
        for (int j = i + 1; j < n; ++j) s += wedge(vectors[rep[i]], vectors[rep[j]]);
    return s;
}

RefinedPoly mu(const std::vector<Vec2>& vectors) {
    int n = static_cast<int>(vectors.size());
    if (n < 2) throw std::invalid_argument("mu needs N >= 2");
    require_balanced(vectors);
    RefinedPoly out;
    for (const auto& rep : cyclic_order_representatives(n)) {
        mpz_class k = k_omega(vectors, rep);
        if (!k.fits_slong_p()) throw std::overflow_error("k(omega) exponent out of range");
        long e = k.get_si();
        out.set(e, out.at(e) + GQ(1));
    }
    return out;
}

namespace {

RefinedPoly theta_impl(std::vector<Vec2> vectors,
                       std::map<std::vector<Vec2>, RefinedPoly>& memo) {
    int n = static_cast<int>(vectors.size());
    if (n == 3) return RefinedPoly::bracket_plus(wedge_ll(vectors[0], vectors[1]));
    std::vector<Vec2> key = vectors;
    std::sort(key.begin(), key.end());
    if (auto it = memo.find(key); it != memo.end()) return it->second;
    RefinedPoly out;
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            std::vector<Vec2> rest;
            rest.reserve(n - 1);
            for (int t = 0; t < n; ++t)
                if (t != i && t != j) rest.push_back(vectors[t]);
            Vec2 merged = vectors[i] + vectors[j];
            rest.push_back(merged);
            RefinedPoly th3 = RefinedPoly::bracket_plus(wedge_ll(vectors[i], vectors[j]));
            out = out + theta_impl(std::move(rest), memo) * th3;
        }
    }
    memo.emplace(std::move(key), out);
    return out;
}

}  // namespace

RefinedPoly theta_bs(const std::vector<Vec2>& vectors) {
    if (vectors.size() < 3) throw std::invalid_argument("theta_bs needs N >= 3");
    require_balanced(vectors);
    // memo confined to this call tree; safe under concurrent callers
    std::map<std::vector<Vec2>, RefinedPoly> memo;
    return theta_impl(vectors, memo);
}

RefinedPoly vertex_multiplicity(VertexKind kind, const std::vector<Vec2>& vectors,
                                Convention convention) {
    if (kind == VertexKind::kUnpointedTrivalent) {
        if (vectors.size() != 3)
            throw std::invalid_argument("unpointed trivalent vertex needs exactly 3 vectors");
        for (const Vec2& v : vectors)
            if (v.is_zero())
                throw std::invalid_argument("unpointed trivalent vertex has a zero weight");
        require_balanced(vectors);
        long w = wedge_ll(vectors[0], vectors[1]);
        if (w < 0) w = -w;
        RefinedPoly b = RefinedPoly::bracket_minus(w);
        if (convention == Convention::kRaw) return b.scaled(GQ(mpq_class(0), mpq_class(-1)));
        return b;
    }
    int n = static_cast<int>(vectors.size());
    if (n < 2) throw std::invalid_argument("pointed vertex needs N >= 2 vectors");
    if (n == 2) return RefinedPoly::constant(GQ(1));
    RefinedPoly m = mu(vectors);
    if (convention == Convention::kExample) return m;
    mpq_class inv_fact(1);
    for (int j = 2; j <= n - 1; ++j) inv_fact *= j;
    return m.scaled(GQ(mpq_class(1) / inv_fact));
}

}  // namespace trop
