#pragma once

#include <map>
#include <utility>
#include <vector>

#include "trop/count.hpp"
#include "trop/lattice.hpp"
#include "trop/refined_poly.hpp"

namespace trop {

// Generating series of the descendant integrals behind the m-valent vertex
// contributions, computed purely through the symmetrized cosine-product
// closed form: the coefficient of u^{2g} is I_{g,d} for the padded tuples.
// a, b have length d+1; the balancing entries are implicit.
USeries igd_series(const std::vector<long>& a, const std::vector<long>& b, int order,
                   Exec exec = Exec::kParallel);

// 2*sin(u*|v1^v2|/2); equals the q = e^{iu} substitution of
// (-i)(q^{|v1^v2|/2} - q^{-|v1^v2|/2}).
USeries f3u_series(const Vec2& v1, const Vec2& v2, int order);

// m-valent pointed vertex series
//   1/(2^{m-2}(m-1)!) * sum over S_{m-1} of prod 2cos(u * wedge/2),
// equal to substitute_exponential(mu)/(m-1)!.
USeries fmp_series(const std::vector<Vec2>& vectors, int order, Exec exec = Exec::kParallel);

// Fourier symbols: finite sums of frequencies e^{i(a y + b x)} with truncated
// eps-series coefficients. d/dx scales the (a,b) term by i*b, d/dy by i*a.
class FourierSymbol {
  public:
    explicit FourierSymbol(int eps_order) : order_(eps_order) {}

    static FourierSymbol frequency(long a, long b, int eps_order);

    int eps_order() const { return order_; }
    const std::map<std::pair<long, long>, USeries>& terms() const { return terms_; }

    void add_term(long a, long b, const USeries& coeff);
    bool operator==(const FourierSymbol& o) const;

  private:
    std::map<std::pair<long, long>, USeries> terms_;
    int order_;
};

// Non-commutative Moyal product
//   f*g = sum_n sum_{k1+k2=n} (-1)^{k2} (i eps)^n / (2^n k1! k2!)
//         dx^{k1} dy^{k2} f . dx^{k2} dy^{k1} g
// exact and truncated at the shared eps order.
FourierSymbol moyal_star(const FourierSymbol& f, const FourierSymbol& g);

struct MoyalClaimReport {
    bool pass = false;
    USeries star_side;    // eps-series of the symmetrized iterated star
    USeries cosine_side;  // symmetrized cosine products from igd_series
};

// Verifies the claim behind the cosine formula: the (d+1)!-symmetrized
// iterated star of the single frequencies (a_j, b_j) is a single frequency
// at the summed exponent whose scalar eps-series equals the symmetrized
// cosine products. Both sides are even with real coefficients, so the
// u = i*eps change of variables identifies the expansions coefficient by
// coefficient; the comparison is performed in that normalization.
MoyalClaimReport verify_moyal_claim(const std::vector<long>& a,
                                    const std::vector<long>& b, int eps_order);

// Per-curve factorization check: the product of f3u factors over trivalent
// unpointed vertices and fmp factors over pointed vertices equals the
// u-substitution of the curve's raw multiplicity, to the given order.
bool curve_series_consistency(const CombinatorialType& type, int order);

}  // namespace trop
