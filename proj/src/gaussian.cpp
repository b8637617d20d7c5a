#include "trop/gaussian.hpp"

#include <stdexcept>

namespace trop {

std::string rational_string(const mpq_class& q) {
    return q.get_str();
}

mpq_class parse_rational(const std::string& s) {
    if (s.empty()) throw std::invalid_argument("empty rational");
    mpq_class q;
    if (q.set_str(s, 10) != 0) throw std::invalid_argument("bad rational: " + s);
    if (q.get_den() == 0) throw std::invalid_argument("zero denominator: " + s);
    q.canonicalize();
    return q;
}

namespace {

std::string coeff_str(const mpq_class& q) {
    if (q.get_den() == 1) return q.get_num().get_str();
    return "(" + q.get_str() + ")";
}

}  // namespace

std::string to_string(const GQ& g) {
    if (g.im == 0) return coeff_str(g.re);
    if (g.re == 0) {
        if (g.im == 1) return "i";
        if (g.im == -1) return "-i";
        return coeff_str(g.im) + "*i";
    }
    std::string s = "(" + g.re.get_str();
    if (g.im > 0)
        s += " + " + (g.im == 1 ? std::string("i") : g.im.get_str() + "*i");
    else {
        mpq_class a = -g.im;
        s += " - " + (a == 1 ? std::string("i") : a.get_str() + "*i");
    }
    return s + ")";
}

}  // namespace trop
