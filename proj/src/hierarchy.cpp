#include "trop/hierarchy.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "trop/vertex_mult.hpp"

namespace trop {

namespace {

std::vector<std::vector<int>> all_permutations(int m) {
    std::vector<int> idx(m);
    std::iota(idx.begin(), idx.end(), 0);
    std::vector<std::vector<int>> out;
    do {
        out.push_back(idx);
    } while (std::next_permutation(idx.begin(), idx.end()));
    return out;
}

mpq_class inverse_factorial(int m) {
    mpq_class f = 1;
    for (int j = 2; j <= m; ++j) f *= j;
    return mpq_class(1) / f;
}

// accumulate `term` over permutations, optionally in parallel
template <typename Term>
USeries symmetrize(int m, int order, Exec exec, Term&& term) {
    std::vector<std::vector<int>> perms = all_permutations(m);
    USeries total(order);
    if (exec == Exec::kParallel) {
#ifdef _OPENMP
        int threads = omp_get_max_threads();
#else
        int threads = 1;
#endif
        std::vector<USeries> partial(threads, USeries(order));
#pragma omp parallel for schedule(static)
        for (long p = 0; p < static_cast<long>(perms.size()); ++p) {
#ifdef _OPENMP
            int tid = omp_get_thread_num();
#else
            int tid = 0;
#endif
            partial[tid] = partial[tid] + term(perms[p]);
        }
        for (const USeries& s : partial) total = total + s;
    } else {
        for (const auto& perm : perms) total = total + term(perm);
    }
    return total;
}

}  // namespace

USeries igd_series(const std::vector<long>& a, const std::vector<long>& b, int order,
                   Exec exec) {
    if (a.size() != b.size() || a.empty())
        throw std::invalid_argument("igd_series needs matching non-empty tuples");
    const int m = static_cast<int>(a.size());  // = d + 1
    USeries total = symmetrize(m, order, exec, [&](const std::vector<int>& perm) {
        USeries prod = USeries::one(order);
        long sa = 0, sb = 0;
        for (int j = 0; j + 1 < m; ++j) {
            sa += a[perm[j]];
            sb += b[perm[j]];
            mpq_class w(a[perm[j + 1]] * sb - b[perm[j + 1]] * sa);
            prod = prod * cos_half_series(w, order);
        }
        return prod;
    });
    return total.scaled(GQ(inverse_factorial(m)));
}

USeries f3u_series(const Vec2& v1, const Vec2& v2, int order) {
    mpz_class w = wedge(v1, v2);
    if (w < 0) w = -w;
    return two_sin_half_series(mpq_class(w), order);
}

USeries fmp_series(const std::vector<Vec2>& vectors, int order, Exec exec) {
    const int m = static_cast<int>(vectors.size());
    if (m < 3) throw std::invalid_argument("fmp_series needs m >= 3");
    {
        long sx = 0, sy = 0;
        for (const Vec2& v : vectors) {
            sx += v.x;
            sy += v.y;
        }
        if (sx != 0 || sy != 0) throw std::invalid_argument("fmp_series needs balanced vectors");
    }
    USeries total = symmetrize(m - 1, order, exec, [&](const std::vector<int>& perm) {
        USeries prod = USeries::one(order);
        long sx = 0, sy = 0;
        for (int j = 0; j < m - 2; ++j) {
            sx += vectors[perm[j]].x;
            sy += vectors[perm[j]].y;
            const Vec2& nxt = vectors[perm[j + 1]];
            mpq_class w(nxt.x * sy - nxt.y * sx);  // wedge(nxt, partial sum)
            prod = prod * cos_half_series(w, order).scaled(GQ(2));
        }
        return prod;
    });
    mpq_class norm = inverse_factorial(m - 1);
    for (int j = 0; j < m - 2; ++j) norm /= 2;
    return total.scaled(GQ(norm));
}

FourierSymbol FourierSymbol::frequency(long a, long b, int eps_order) {
    FourierSymbol f(eps_order);
    f.add_term(a, b, USeries::one(eps_order));
    return f;
}

void FourierSymbol::add_term(long a, long b, const USeries& coeff) {
    auto key = std::make_pair(a, b);
    auto it = terms_.find(key);
    if (it == terms_.end()) {
        if (!coeff.is_zero()) terms_.emplace(key, coeff);
    } else {
        it->second = it->second + coeff;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

bool FourierSymbol::operator==(const FourierSymbol& o) const {
    return order_ == o.order_ && terms_ == o.terms_;
}

FourierSymbol moyal_star(const FourierSymbol& f, const FourierSymbol& g) {
    if (f.eps_order() != g.eps_order())
        throw std::invalid_argument("moyal_star needs a shared truncation order");
    const int K = f.eps_order();
    FourierSymbol out(K);
    for (const auto& [fa, fc] : f.terms()) {
        for (const auto& [ga, gc] : g.terms()) {
            // scalar factor for the frequency pair, as an eps-series
            USeries scalar(K);
            mpq_class fact_n = 1;
            for (int n = 0; n <= K; ++n) {
                if (n > 0) fact_n *= n;
                GQ tot;
                mpq_class binom_den = 1;  // k1! k2!
                for (int k1 = 0; k1 <= n; ++k1) {
                    int k2 = n - k1;
                    // (i b1)^{k1} (i a1)^{k2} (i b2)^{k2} (i a2)^{k1} (-1)^{k2} i^n
                    mpz_class mag = 1;
                    for (int t = 0; t < k1; ++t) mag *= fa.second;  // b1
                    for (int t = 0; t < k2; ++t) mag *= fa.first;   // a1
                    for (int t = 0; t < k2; ++t) mag *= ga.second;  // b2
                    for (int t = 0; t < k1; ++t) mag *= ga.first;   // a2
                    mpq_class den = 1;
                    for (int t = 2; t <= k1; ++t) den *= t;
                    for (int t = 2; t <= k2; ++t) den *= t;
                    GQ val = GQ::i_pow(3 * n) * mpq_class(mpq_class(mag) / den);
                    if (k2 % 2 == 1) val = -val;
                    tot += val;
                }
                mpq_class pow2 = 1;
                for (int t = 0; t < n; ++t) pow2 *= 2;
                scalar[n] = tot * mpq_class(1 / pow2);
            }
            USeries coeff = (fc * gc) * scalar;
            out.add_term(fa.first + ga.first, fa.second + ga.second, coeff);
        }
    }
    return out;
}

MoyalClaimReport verify_moyal_claim(const std::vector<long>& a,
                                    const std::vector<long>& b, int eps_order) {
    if (a.size() != b.size() || a.empty())
        throw std::invalid_argument("verify_moyal_claim needs matching non-empty tuples");
    const int m = static_cast<int>(a.size());
    MoyalClaimReport rep;

    // star side: average the iterated star over all orderings
    std::vector<std::vector<int>> perms = all_permutations(m);
    USeries acc(eps_order);
    long sa = std::accumulate(a.begin(), a.end(), 0LL);
    long sb = std::accumulate(b.begin(), b.end(), 0LL);
    for (const auto& perm : perms) {
        FourierSymbol prod = FourierSymbol::frequency(a[perm[0]], b[perm[0]], eps_order);
        for (int j = 1; j < m; ++j)
            prod = moyal_star(prod, FourierSymbol::frequency(a[perm[j]], b[perm[j]], eps_order));
        if (prod.terms().size() != 1) throw std::runtime_error("iterated star is not a phase");
        const auto& [freq, coeff] = *prod.terms().begin();
        if (freq.first != sa || freq.second != sb)
            throw std::runtime_error("iterated star has the wrong frequency");
        acc = acc + coeff;
    }
    rep.star_side = acc.scaled(GQ(inverse_factorial(m)));

    // cosine side: the same symmetrized product the I_{g,d} series is built
    // from, in the eps variable
    rep.cosine_side = igd_series(a, b, eps_order, Exec::kSerial);

    // the claim lives on even real series; check that before comparing
    bool structural = rep.star_side.is_real();
    for (int j = 1; j <= eps_order && structural; j += 2)
        if (!rep.star_side[j].is_zero()) structural = false;
    rep.pass = structural && rep.star_side == rep.cosine_side;
    return rep;
}

bool curve_series_consistency(const CombinatorialType& type, int order) {
    const int t = type.unpointed_trivalent_count();
    USeries lhs = USeries::one(order);
    for (int v = 0; v < type.vertex_count(); ++v) {
        std::vector<Vec2> vecs = type.vertex_vectors(v);
        if (type.markers[v] < 0) {
            lhs = lhs * f3u_series(vecs[0], vecs[1], order);
        } else if (vecs.size() >= 3) {
            lhs = lhs * fmp_series(vecs, order, Exec::kSerial);
        }
        // pointed bivalent vertices contribute 1
    }
    RefinedPoly raw = curve_multiplicity(type, Convention::kDefinition).scaled(GQ::i_pow(-t));
    USeries rhs = substitute_exponential(raw, order);
    return lhs == rhs;
}

}  // namespace trop
