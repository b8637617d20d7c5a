#include "trop/refined_poly.hpp"

#include <sstream>
#include <stdexcept>

namespace trop {

RefinedPoly RefinedPoly::constant(const GQ& c) {
    return monomial(0, c);
}

RefinedPoly RefinedPoly::monomial(long e, const GQ& c) {
    RefinedPoly p;
    if (!c.is_zero()) p.coeff_[e] = c;
    return p;
}

RefinedPoly RefinedPoly::bracket_plus(long m) {
    RefinedPoly p = monomial(m, GQ(1));
    p.set(-m, p.at(-m) + GQ(1));
    return p;
}

RefinedPoly RefinedPoly::bracket_minus(long m) {
    if (m == 0) return {};
    RefinedPoly p = monomial(m, GQ(1));
    p.set(-m, GQ(-1));
    return p;
}

GQ RefinedPoly::at(long e) const {
    auto it = coeff_.find(e);
    return it == coeff_.end() ? GQ() : it->second;
}

void RefinedPoly::set(long e, const GQ& c) {
    if (c.is_zero())
        coeff_.erase(e);
    else
        coeff_[e] = c;
}

RefinedPoly RefinedPoly::operator+(const RefinedPoly& o) const {
    RefinedPoly r = *this;
    for (const auto& [e, c] : o.coeff_) r.set(e, r.at(e) + c);
    return r;
}

RefinedPoly RefinedPoly::operator-(const RefinedPoly& o) const {
    RefinedPoly r = *this;
    for (const auto& [e, c] : o.coeff_) r.set(e, r.at(e) - c);
    return r;
}

RefinedPoly RefinedPoly::operator*(const RefinedPoly& o) const {
    RefinedPoly r;
    for (const auto& [e1, c1] : coeff_)
        for (const auto& [e2, c2] : o.coeff_) r.set(e1 + e2, r.at(e1 + e2) + c1 * c2);
    return r;
}

RefinedPoly RefinedPoly::scaled(const GQ& c) const {
    RefinedPoly r;
    if (c.is_zero()) return r;
    for (const auto& [e, v] : coeff_) r.coeff_[e] = v * c;
    return r;
}

RefinedPoly RefinedPoly::antipode() const {
    RefinedPoly r;
    for (const auto& [e, v] : coeff_) r.coeff_[-e] = v;
    return r;
}

GQ RefinedPoly::eval_at_one() const {
    GQ s;
    for (const auto& [e, v] : coeff_) s += v;
    return s;
}

long RefinedPoly::min_exp() const {
    if (coeff_.empty()) throw std::domain_error("min_exp of zero polynomial");
    return coeff_.begin()->first;
}

long RefinedPoly::max_exp() const {
    if (coeff_.empty()) throw std::domain_error("max_exp of zero polynomial");
    return coeff_.rbegin()->first;
}

namespace {

// exponent e is in s-units; render in q-units
std::string q_power(long e) {
    if (e == 0) return "1";
    if (e % 2 == 0) {
        long h = e / 2;
        if (h == 1) return "q";
        return "q^" + std::to_string(h);
    }
    std::string num = std::to_string(e);
    return "q^(" + num + "/2)";
}

// leading-coefficient text plus sign bookkeeping for the joined string
struct TermText {
    bool negative;
    std::string body;
};

TermText term_text(long e, const GQ& c) {
    // pull an overall minus only for pure real or pure imaginary coefficients
    GQ cc = c;
    bool neg = false;
    if (cc.im == 0 && cc.re < 0) {
        neg = true;
        cc.re = -cc.re;
    } else if (cc.re == 0 && cc.im < 0) {
        neg = true;
        cc.im = -cc.im;
    }
    std::string coeff = to_string(cc);
    std::string pw = q_power(e);
    std::string body;
    if (pw == "1")
        body = coeff;
    else if (coeff == "1")
        body = pw;
    else
        body = coeff + "*" + pw;
    return {neg, body};
}

}  // namespace

std::string RefinedPoly::str() const {
    if (coeff_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : coeff_) {
        TermText t = term_text(e, c);
        if (first) {
            if (t.negative) os << "-";
            os << t.body;
            first = false;
        } else {
            os << (t.negative ? " - " : " + ") << t.body;
        }
    }
    return os.str();
}

USeries USeries::one(int order) {
    USeries s(order);
    s[0] = GQ(1);
    return s;
}

USeries USeries::operator+(const USeries& o) const {
    int K = std::min(order(), o.order());
    USeries r(K);
    for (int j = 0; j <= K; ++j) r[j] = coeff_[j] + o.coeff_[j];
    return r;
}

USeries USeries::operator-(const USeries& o) const {
    int K = std::min(order(), o.order());
    USeries r(K);
    for (int j = 0; j <= K; ++j) r[j] = coeff_[j] - o.coeff_[j];
    return r;
}

USeries USeries::operator*(const USeries& o) const {
    int K = std::min(order(), o.order());
    USeries r(K);
    for (int i = 0; i <= K; ++i) {
        if (coeff_[i].is_zero()) continue;
        for (int j = 0; i + j <= K; ++j) {
            if (o.coeff_[j].is_zero()) continue;
            r[i + j] += coeff_[i] * o.coeff_[j];
        }
    }
    return r;
}

USeries USeries::scaled(const GQ& c) const {
    USeries r(order());
    for (int j = 0; j <= order(); ++j) r[j] = coeff_[j] * c;
    return r;
}

bool USeries::is_real() const {
    for (const GQ& c : coeff_)
        if (c.im != 0) return false;
    return true;
}

bool USeries::is_zero() const {
    for (const GQ& c : coeff_)
        if (!c.is_zero()) return false;
    return true;
}

std::string USeries::str(const std::string& var) const {
    std::ostringstream os;
    bool any = false;
    for (int j = 0; j <= order(); ++j) {
        if (coeff_[j].is_zero()) continue;
        if (any) os << " + ";
        os << to_string(coeff_[j]);
        if (j > 0) os << "*" << var << "^" << j;
        any = true;
    }
    if (!any) os << "0";
    os << " + O(" << var << "^" << order() + 1 << ")";
    return os.str();
}

USeries substitute_exponential(const RefinedPoly& p, int order) {
    if (order < 0) throw std::invalid_argument("negative truncation order");
    USeries out(order);
    for (const auto& [e, c] : p.coefficients()) {
        // s^e = e^{i e u/2} = sum_j (i e/2)^j u^j / j!
        mpq_class half(e, 2);
        half.canonicalize();
        GQ pw(1);
        mpq_class fact(1);
        for (int j = 0; j <= order; ++j) {
            if (j > 0) {
                pw = pw * GQ(mpq_class(0), half);
                fact *= j;
            }
            out[j] += c * pw * mpq_class(mpq_class(1) / fact);
        }
    }
    return out;
}

USeries cos_half_series(const mpq_class& w, int order) {
    USeries out(order);
    mpq_class h = w / 2;
    mpq_class pw(1), fact(1);
    int sign = 1;
    for (int m = 0; 2 * m <= order; ++m) {
        if (m > 0) {
            pw *= h * h;
            fact *= (2 * m - 1) * (2 * m);
            sign = -sign;
        }
        out[2 * m] = GQ(mpq_class(sign * pw / fact));
    }
    return out;
}

USeries two_sin_half_series(const mpq_class& w, int order) {
    USeries out(order);
    mpq_class h = w / 2;
    mpq_class pw = 2 * h, fact(1);
    int sign = 1;
    for (int m = 0; 2 * m + 1 <= order; ++m) {
        if (m > 0) {
            pw *= h * h;
            fact *= (2 * m) * (2 * m + 1);
            sign = -sign;
        }
        out[2 * m + 1] = GQ(mpq_class(sign * pw / fact));
    }
    return out;
}

}  // namespace trop
