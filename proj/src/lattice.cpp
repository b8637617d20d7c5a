#include "trop/lattice.hpp"

#include <numeric>
#include <sstream>

namespace trop {

mpz_class wedge(const Vec2& v, const Vec2& w) {
    mpz_class a(v.x), b(v.y), c(w.x), d(w.y);
    return a * d - b * c;
}

long wedge_ll(const Vec2& v, const Vec2& w) {
    mpz_class r = wedge(v, w);
    if (!r.fits_slong_p()) throw std::overflow_error("wedge out of machine range");
    return r.get_si();
}

long lattice_length(const Vec2& v) {
    if (v.is_zero()) throw std::domain_error("no lattice length: zero vector");
    return std::gcd(v.x < 0 ? -v.x : v.x, v.y < 0 ? -v.y : v.y);
}

Vec2 primitive_direction(const Vec2& v) {
    long l = lattice_length(v);
    return {v.x / l, v.y / l};
}

std::pair<Degree, DescendantProfile> validate_problem(const std::vector<Vec2>& delta,
                                                      const std::vector<int>& k) {
    long sx = 0, sy = 0;
    for (const Vec2& d : delta) {
        if (d.is_zero())
            throw validation_error(ValidationError::kZeroEntry, "degree entry is the zero vector");
        sx += d.x;
        sy += d.y;
    }
    if (sx != 0 || sy != 0)
        throw validation_error(ValidationError::kNonZeroSum, "degree entries do not sum to zero");
    long ktot = 0;
    for (int v : k) {
        if (v < 0)
            throw validation_error(ValidationError::kNegativeDescendant,
                                   "negative descendant exponent");
        ktot += v;
    }
    long n = static_cast<long>(k.size());
    long r = static_cast<long>(delta.size());
    if (n - 1 + r != 2 * n + ktot) {
        std::ostringstream os;
        os << "balance violation: n-1+r = " << (n - 1 + r) << " but 2n+sum(k) = "
           << (2 * n + ktot);
        throw validation_error(ValidationError::kBalanceViolation, os.str());
    }
    return {Degree{delta}, DescendantProfile{k}};
}

std::string to_string(const Vec2& v) {
    std::ostringstream os;
    os << "(" << v.x << "," << v.y << ")";
    return os.str();
}

}  // namespace trop
