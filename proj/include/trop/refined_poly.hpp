#pragma once

#include <map>
#include <string>
#include <vector>

#include "trop/gaussian.hpp"

namespace trop {

// Laurent polynomial in s = q^{1/2} over Q(i). Exponents are stored in units
// of q^{1/2} so odd wedge sums never force rational exponents. The zero
// coefficient is never stored.
class RefinedPoly {
  public:
    RefinedPoly() = default;

    static RefinedPoly zero() { return {}; }
    static RefinedPoly constant(const GQ& c);
    // c * s^e
    static RefinedPoly monomial(long e, const GQ& c);
    // s^m + s^{-m}
    static RefinedPoly bracket_plus(long m);
    // s^m - s^{-m}
    static RefinedPoly bracket_minus(long m);

    bool is_zero() const { return coeff_.empty(); }
    const std::map<long, GQ>& coefficients() const { return coeff_; }
    GQ at(long e) const;

    RefinedPoly operator+(const RefinedPoly& o) const;
    RefinedPoly operator-(const RefinedPoly& o) const;
    RefinedPoly operator*(const RefinedPoly& o) const;
    RefinedPoly scaled(const GQ& c) const;
    bool operator==(const RefinedPoly& o) const { return coeff_ == o.coeff_; }

    // s -> s^{-1}
    RefinedPoly antipode() const;

    // value at q = 1 (s = 1)
    GQ eval_at_one() const;

    // lowest / highest stored exponent; polynomial must be non-zero
    long min_exp() const;
    long max_exp() const;

    void set(long e, const GQ& c);

    // Canonical text, ascending exponents, halves as q^(e/2):
    //   "-q^-2 + 2*q^-1 - 2*q + q^2",  "(1/2)*q^(-1/2) + (1/2)*q^(1/2)"
    std::string str() const;

  private:
    std::map<long, GQ> coeff_;
};

// Truncated power series sum_{j<=K} c_j u^j with exact coefficients.
// Binary operations truncate to the smaller order.
class USeries {
  public:
    USeries() = default;
    explicit USeries(int order) : coeff_(order + 1) {}

    static USeries one(int order);

    int order() const { return static_cast<int>(coeff_.size()) - 1; }
    const GQ& operator[](int j) const { return coeff_[j]; }
    GQ& operator[](int j) { return coeff_[j]; }

    USeries operator+(const USeries& o) const;
    USeries operator-(const USeries& o) const;
    USeries operator*(const USeries& o) const;
    USeries scaled(const GQ& c) const;
    bool operator==(const USeries& o) const { return coeff_ == o.coeff_; }

    bool is_real() const;
    bool is_zero() const;

    std::string str(const std::string& var = "u") const;

  private:
    std::vector<GQ> coeff_;
};

// Order-K Taylor expansion of p under q = e^{iu}, i.e. s^e -> e^{i e u / 2}.
USeries substitute_exponential(const RefinedPoly& p, int order);

// cos(u*w/2) and 2*sin(u*w/2) as exact series
USeries cos_half_series(const mpq_class& w, int order);
USeries two_sin_half_series(const mpq_class& w, int order);

}  // namespace trop
