#pragma once

#include <gmpxx.h>
#include <string>

namespace trop {

// Exact element of Q(i). All coefficient arithmetic in the project runs on
// this type; no floating point anywhere.
struct GQ {
    mpq_class re;
    mpq_class im;

    GQ() : re(0), im(0) {}
    GQ(long v) : re(v), im(0) {}            // NOLINT(google-explicit-constructor)
    GQ(mpq_class r) : re(std::move(r)), im(0) {}  // NOLINT
    GQ(mpq_class r, mpq_class i) : re(std::move(r)), im(std::move(i)) {}

    static GQ i() { return GQ(mpq_class(0), mpq_class(1)); }

    // i^k for any integer k
    static GQ i_pow(long k) {
        switch (((k % 4) + 4) % 4) {
            case 0: return GQ(1);
            case 1: return GQ(mpq_class(0), mpq_class(1));
            case 2: return GQ(-1);
            default: return GQ(mpq_class(0), mpq_class(-1));
        }
    }

    bool is_zero() const { return re == 0 && im == 0; }
    bool is_real() const { return im == 0; }

    GQ conj() const { return GQ(re, -im); }

    GQ operator-() const { return GQ(-re, -im); }
    GQ operator+(const GQ& o) const { return GQ(re + o.re, im + o.im); }
    GQ operator-(const GQ& o) const { return GQ(re - o.re, im - o.im); }
    GQ operator*(const GQ& o) const {
        return GQ(re * o.re - im * o.im, re * o.im + im * o.re);
    }
    GQ& operator+=(const GQ& o) {
        re += o.re;
        im += o.im;
        return *this;
    }
    GQ& operator-=(const GQ& o) {
        re -= o.re;
        im -= o.im;
        return *this;
    }
    GQ& operator*=(const GQ& o) {
        *this = *this * o;
        return *this;
    }
    GQ operator*(const mpq_class& c) const { return GQ(re * c, im * c); }
    bool operator==(const GQ& o) const { return re == o.re && im == o.im; }
    bool operator!=(const GQ& o) const { return !(*this == o); }
};

// "3", "-1/2", "i", "-i", "(1/2)i", "(1 + i)", "(2 - 1/3i)"
std::string to_string(const GQ& g);

// exact rational from "a/b" or "a"; throws std::invalid_argument on junk
mpq_class parse_rational(const std::string& s);
std::string rational_string(const mpq_class& q);

}  // namespace trop
