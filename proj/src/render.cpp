#include "trop/render.hpp"

#include <filesystem>
#include <fstream>
#include <iomanip>
#include <sstream>

namespace trop {

namespace {

struct Box {
    mpq_class x0, y0, x1, y1;
};

std::string fmt(double v) {
    std::ostringstream os;
    os << std::fixed << std::setprecision(3) << v;
    return os.str();
}

// clip the ray p + t*d (t >= 0) to the box; returns the exit point
QPoint clip_ray(const QPoint& p, const Vec2& d, const Box& box) {
    // largest t with the point still inside
    mpq_class best = -1;
    bool have = false;
    auto consider = [&](const mpq_class& t) {
        if (t < 0) return;
        QPoint q{p[0] + t * d.x, p[1] + t * d.y};
        if (q[0] < box.x0 || q[0] > box.x1 || q[1] < box.y0 || q[1] > box.y1) return;
        if (!have || t > best) {
            best = t;
            have = true;
        }
    };
    if (d.x != 0) {
        consider((box.x0 - p[0]) / d.x);
        consider((box.x1 - p[0]) / d.x);
    }
    if (d.y != 0) {
        consider((box.y0 - p[1]) / d.y);
        consider((box.y1 - p[1]) / d.y);
    }
    if (!have) return p;
    return {p[0] + best * d.x, p[1] + best * d.y};
}

}  // namespace

std::string curve_svg_document(const CountedCurve& curve, const PointConfiguration& points) {
    const auto& t = curve.type;
    const auto& pos = curve.curve.positions;

    Box box;
    bool first = true;
    auto grow = [&](const QPoint& q) {
        if (first) {
            box = {q[0], q[1], q[0], q[1]};
            first = false;
            return;
        }
        if (q[0] < box.x0) box.x0 = q[0];
        if (q[0] > box.x1) box.x1 = q[0];
        if (q[1] < box.y0) box.y0 = q[1];
        if (q[1] > box.y1) box.y1 = q[1];
    };
    for (const auto& q : pos) grow(q);
    for (const auto& q : points.points) grow(q);
    // pad past the largest end direction so every ray visibly leaves the box
    long m = 1;
    for (const auto& d : t.delta) {
        m = std::max(m, d.x < 0 ? -d.x : d.x);
        m = std::max(m, d.y < 0 ? -d.y : d.y);
    }
    mpq_class pad = mpq_class(m) + (box.x1 - box.x0 + box.y1 - box.y0) / 4 + 1;
    box.x0 -= pad;
    box.x1 += pad;
    box.y0 -= pad;
    box.y1 += pad;

    double w = mpq_class(box.x1 - box.x0).get_d();
    double h = mpq_class(box.y1 - box.y0).get_d();
    double scale = 420.0 / std::max(w, h);
    auto X = [&](const mpq_class& x) { return 20.0 + mpq_class(x - box.x0).get_d() * scale; };
    auto Y = [&](const mpq_class& y) { return 20.0 + mpq_class(box.y1 - y).get_d() * scale; };

    std::ostringstream os;
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\""
       << fmt(40.0 + w * scale) << "\" height=\"" << fmt(40.0 + h * scale) << "\">\n";
    auto line = [&](const QPoint& a, const QPoint& b, const char* style) {
        os << "  <line x1=\"" << fmt(X(a[0])) << "\" y1=\"" << fmt(Y(a[1])) << "\" x2=\""
           << fmt(X(b[0])) << "\" y2=\"" << fmt(Y(b[1])) << "\" " << style << "/>\n";
    };
    const char* kEdge = "stroke=\"black\" stroke-width=\"1.6\"";
    const char* kCross = "stroke=\"crimson\" stroke-width=\"1.4\"";
    for (size_t e = 0; e < t.edges.size(); ++e)
        line(pos[t.edges[e][0]], pos[t.edges[e][1]], kEdge);
    for (size_t j = 0; j < t.delta.size(); ++j)
        line(pos[t.end_vertex[j]], clip_ray(pos[t.end_vertex[j]], t.delta[j], box), kEdge);
    // marked points as crosses with labels
    mpq_class c = pad / 8 + mpq_class(1, 100);
    for (size_t i = 0; i < points.points.size(); ++i) {
        const QPoint& p = points.points[i];
        line({p[0] - c, p[1] - c}, {p[0] + c, p[1] + c}, kCross);
        line({p[0] - c, p[1] + c}, {p[0] + c, p[1] - c}, kCross);
        os << "  <text x=\"" << fmt(X(p[0]) + 5) << "\" y=\"" << fmt(Y(p[1]) - 5)
           << "\" font-size=\"11\" fill=\"crimson\">p" << i + 1 << "</text>\n";
    }
    // valency annotations at the vertices
    for (int v = 0; v < t.vertex_count(); ++v) {
        os << "  <circle cx=\"" << fmt(X(pos[v][0])) << "\" cy=\"" << fmt(Y(pos[v][1]))
           << "\" r=\"2.2\" fill=\"black\"/>\n";
        os << "  <text x=\"" << fmt(X(pos[v][0]) + 4) << "\" y=\"" << fmt(Y(pos[v][1]) + 11)
           << "\" font-size=\"9\" fill=\"gray\">" << t.valency(v) << "</text>\n";
    }
    os << "</svg>\n";
    return os.str();
}

std::vector<std::string> render_curves_svg(const CountResult& result, const std::string& out_dir,
                                           const std::string& stem) {
    std::filesystem::create_directories(out_dir);
    std::vector<std::string> written;
    for (size_t i = 0; i < result.curves.size(); ++i) {
        std::filesystem::path p =
            std::filesystem::path(out_dir) / (stem + "_curve" + std::to_string(i) + ".svg");
        std::ofstream out(p);
        if (!out) throw std::runtime_error("cannot write " + p.string());
        out << curve_svg_document(result.curves[i], result.points);
        written.push_back(p.string());
    }
    return written;
}

}  // namespace trop
