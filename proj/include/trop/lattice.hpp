#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace trop {

// Integer vector in Z^2. Entries stay word sized; products and larger
// accumulations are done through mpz to keep everything exact.
struct Vec2 {
    long x = 0;
    long y = 0;

    bool operator==(const Vec2&) const = default;
    auto operator<=>(const Vec2&) const = default;
    Vec2 operator+(const Vec2& o) const { return {x + o.x, y + o.y}; }
    Vec2 operator-() const { return {-x, -y}; }
    bool is_zero() const { return x == 0 && y == 0; }
};

// determinant of the matrix with columns v, w
mpz_class wedge(const Vec2& v, const Vec2& w);

// wedge as a machine integer; throws if it does not fit (does not happen at
// the scales this engine is meant for)
long wedge_ll(const Vec2& v, const Vec2& w);

// maximal ell with v = ell * primitive; gcd of absolute entries
long lattice_length(const Vec2& v);
Vec2 primitive_direction(const Vec2& v);

enum class ValidationError {
    kZeroEntry,
    kNonZeroSum,
    kNegativeDescendant,
    kBalanceViolation,
};

class validation_error : public std::runtime_error {
  public:
    validation_error(ValidationError code, const std::string& what)
        : std::runtime_error(what), code_(code) {}
    ValidationError code() const { return code_; }

  private:
    ValidationError code_;
};

// A chosen ordering of the multiset of end directions.
struct Degree {
    std::vector<Vec2> entries;
    int size() const { return static_cast<int>(entries.size()); }
};

struct DescendantProfile {
    std::vector<int> k;
    int n() const { return static_cast<int>(k.size()); }
    long total() const {
        long s = 0;
        for (int v : k) s += v;
        return s;
    }
};

// Checks non-zero entries, zero sum, non-negative k and the balance equation
// n - 1 + r = 2n + sum(k); throws validation_error with a distinct code.
std::pair<Degree, DescendantProfile> validate_problem(const std::vector<Vec2>& delta,
                                                      const std::vector<int>& k);

std::string to_string(const Vec2& v);

}  // namespace trop
