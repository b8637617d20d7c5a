#include "trop/geom.hpp"

namespace trop::geom {

namespace {

mpq_class cross_qv(const mpq_class& ax, const mpq_class& ay, const Vec2& b) {
    return ax * b.y - ay * b.x;
}

// interval bound combination: max of lower bounds / min of upper bounds
std::optional<mpq_class> max_lo(const std::optional<mpq_class>& a,
                                const std::optional<mpq_class>& b) {
    if (!a) return b;
    if (!b) return a;
    return *a > *b ? a : b;
}
std::optional<mpq_class> min_hi(const std::optional<mpq_class>& a,
                                const std::optional<mpq_class>& b) {
    if (!a) return b;
    if (!b) return a;
    return *a < *b ? a : b;
}

Iface interval(const QPoint& p, const Vec2& dir, std::optional<mpq_class> lo,
               std::optional<mpq_class> hi) {
    if (lo && hi) {
        if (*lo > *hi) return Iface{};
        if (*lo == *hi) {
            Iface r;
            r.kind = Iface::Kind::kPoint;
            r.p = qpoint(p[0] + *lo * dir.x, p[1] + *lo * dir.y);
            return r;
        }
    }
    Iface r;
    r.kind = Iface::Kind::kInterval;
    r.p = p;
    r.dir = dir;
    r.lo = std::move(lo);
    r.hi = std::move(hi);
    return r;
}

// t with x = p + t*dir, assuming dir != 0 and x on the line
mpq_class param_on(const QPoint& p, const Vec2& dir, const QPoint& x) {
    if (dir.x != 0) return (x[0] - p[0]) / dir.x;
    return (x[1] - p[1]) / dir.y;
}

// clamp interval [lo,hi] (in t) by  lob <= a + b t <= hib; returns false if empty
bool clamp(std::optional<mpq_class>& lo, std::optional<mpq_class>& hi, const mpq_class& a,
           const mpq_class& b, const std::optional<mpq_class>& lob,
           const std::optional<mpq_class>& hib) {
    if (b == 0) {
        if (lob && a < *lob) return false;
        if (hib && a > *hib) return false;
        return true;
    }
    std::optional<mpq_class> nlo, nhi;
    if (b > 0) {
        if (lob) nlo = (*lob - a) / b;
        if (hib) nhi = (*hib - a) / b;
    } else {
        if (hib) nlo = (*hib - a) / b;
        if (lob) nhi = (*lob - a) / b;
    }
    lo = max_lo(lo, nlo);
    hi = min_hi(hi, nhi);
    return !(lo && hi && *lo > *hi);
}

}  // namespace

Iface make_point(const QPoint& p) {
    Iface r;
    r.kind = Iface::Kind::kPoint;
    r.p = p;
    return r;
}

Iface make_ray(const QPoint& p, const Vec2& dir) {
    return interval(p, dir, mpq_class(0), std::nullopt);
}

Iface shift_ray(const Iface& s, const Vec2& w) {
    if (w.is_zero()) throw std::invalid_argument("shift by zero direction");
    switch (s.kind) {
        case Iface::Kind::kEmpty: return s;
        case Iface::Kind::kPoint: return make_ray(s.p, -w);
        case Iface::Kind::kInterval: {
            mpz_class cr = wedge(s.dir, w);
            if (cr == 0) {
                // w = c*dir with c != 0
                mpq_class c = s.dir.x != 0 ? mpq_class(w.x, s.dir.x) : mpq_class(w.y, s.dir.y);
                c.canonicalize();
                if (c > 0) return interval(s.p, s.dir, std::nullopt, s.hi);
                return interval(s.p, s.dir, s.lo, std::nullopt);
            }
            Iface r = s;
            r.kind = Iface::Kind::kSweep;
            r.sweep_dir = w;
            return r;
        }
        case Iface::Kind::kSweep: throw degenerate_position("sweep of a sweep");
    }
    return {};
}

bool contains(const Iface& s, const QPoint& x) {
    switch (s.kind) {
        case Iface::Kind::kEmpty: return false;
        case Iface::Kind::kPoint: return s.p == x;
        case Iface::Kind::kInterval: {
            if (cross_qv(x[0] - s.p[0], x[1] - s.p[1], s.dir) != 0) return false;
            mpq_class t = param_on(s.p, s.dir, x);
            if (s.lo && t < *s.lo) return false;
            if (s.hi && t > *s.hi) return false;
            return true;
        }
        case Iface::Kind::kSweep: {
            // x + l*sweep_dir in the interval for some l >= 0
            Iface base = s;
            base.kind = Iface::Kind::kInterval;
            return !intersect(make_ray(x, s.sweep_dir), base).empty();
        }
    }
    return false;
}

Iface intersect(const Iface& a, const Iface& b) {
    using K = Iface::Kind;
    if (a.kind == K::kEmpty || b.kind == K::kEmpty) return Iface{};
    if (a.kind == K::kSweep && b.kind == K::kSweep)
        throw degenerate_position("sweep against sweep");
    if (b.kind == K::kPoint) return contains(a, b.p) ? b : Iface{};
    if (a.kind == K::kPoint) return contains(b, a.p) ? a : Iface{};
    if (a.kind == K::kSweep) return intersect(b, a);

    // a is an interval
    if (b.kind == K::kInterval) {
        mpz_class cr = wedge(a.dir, b.dir);
        mpq_class dx = b.p[0] - a.p[0], dy = b.p[1] - a.p[1];
        if (cr == 0) {
            if (cross_qv(dx, dy, a.dir) != 0) return Iface{};
            // same line; express b's range in a's parameter
            mpq_class c = a.dir.x != 0 ? mpq_class(b.dir.x, a.dir.x) : mpq_class(b.dir.y, a.dir.y);
            c.canonicalize();
            mpq_class t0 = a.dir.x != 0 ? dx / a.dir.x : dy / a.dir.y;
            std::optional<mpq_class> nlo, nhi;
            if (c > 0) {
                if (b.lo) nlo = t0 + *b.lo * c;
                if (b.hi) nhi = t0 + *b.hi * c;
            } else {
                if (b.hi) nlo = t0 + *b.hi * c;
                if (b.lo) nhi = t0 + *b.lo * c;
            }
            return interval(a.p, a.dir, max_lo(a.lo, nlo), min_hi(a.hi, nhi));
        }
        mpq_class crq(cross_qv(dx, dy, b.dir)), crq2(cross_qv(dx, dy, a.dir));
        mpq_class t = crq / mpq_class(cr);
        mpq_class u = crq2 / mpq_class(cr);
        if (a.lo && t < *a.lo) return Iface{};
        if (a.hi && t > *a.hi) return Iface{};
        if (b.lo && u < *b.lo) return Iface{};
        if (b.hi && u > *b.hi) return Iface{};
        Iface r;
        r.kind = K::kPoint;
        r.p = qpoint(a.p[0] + t * a.dir.x, a.p[1] + t * a.dir.y);
        return r;
    }

    // a interval, b sweep: points a.p + t*a.dir reachable as base + s*base.dir - l*w
    const Vec2 w = b.sweep_dir;
    mpz_class det = wedge(b.dir, -w);
    if (det == 0) {
        // sweep direction parallel to its interval: the sweep is 1-dimensional
        Iface base = b;
        base.kind = K::kInterval;
        return intersect(a, shift_ray(base, w));
    }
    // solve s*b.dir - l*w = (a.p - b.p) + t*a.dir  for (s, l), affine in t
    mpq_class rx = a.p[0] - b.p[0], ry = a.p[1] - b.p[1];
    mpq_class detq(det);
    // s(t) = cross(R(t), -w)/det, l(t) = cross(b.dir, R(t))/det with R(t) = R0 + t*a.dir
    mpq_class s0 = cross_qv(rx, ry, -w) / detq;
    mpq_class s1 = mpq_class(wedge(a.dir, -w)) / detq;
    mpq_class l0 = (mpq_class(b.dir.x) * ry - mpq_class(b.dir.y) * rx) / detq;
    mpq_class l1 = mpq_class(wedge(b.dir, a.dir)) / detq;
    std::optional<mpq_class> lo = a.lo, hi = a.hi;
    if (!clamp(lo, hi, s0, s1, b.lo, b.hi)) return Iface{};
    if (!clamp(lo, hi, l0, l1, mpq_class(0), std::nullopt)) return Iface{};
    return interval(a.p, a.dir, lo, hi);
}

}  // namespace trop::geom
