#pragma once

#include <gmpxx.h>

#include <optional>
#include <stdexcept>

#include "trop/lattice.hpp"
#include "trop/solver.hpp"

namespace trop::geom {

// Raised when p sits on a degenerate locus the interface algebra cannot
// represent; callers resample.
struct degenerate_position : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Exact convex subsets of Q^2 of dimension <= 1, plus the transient sweep of
// an interval by a ray. These track the possible positions of a subtree's
// root vertex and never grow past dimension one for points in general
// position.
struct Iface {
    enum class Kind { kEmpty, kPoint, kInterval, kSweep };
    Kind kind = Kind::kEmpty;

    // kPoint: P. kInterval: {P + t*dir : lo <= t <= hi} with missing bounds
    // meaning unbounded. kSweep: the interval swept by -sweep_dir, i.e.
    // {P + t*dir - s*sweep_dir : t in range, s >= 0}.
    QPoint p{};
    Vec2 dir{};
    std::optional<mpq_class> lo, hi;
    Vec2 sweep_dir{};

    bool empty() const { return kind == Kind::kEmpty; }
    bool is_point() const { return kind == Kind::kPoint; }
};

Iface make_point(const QPoint& p);
Iface make_ray(const QPoint& p, const Vec2& dir);

// S - R_{>=0} w (closure of the positive-length constraint; exact positivity
// is re-checked by the final solve)
Iface shift_ray(const Iface& s, const Vec2& w);

Iface intersect(const Iface& a, const Iface& b);

bool contains(const Iface& s, const QPoint& x);

}  // namespace trop::geom
