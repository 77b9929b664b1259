#include "ostrowski/polynomial.hpp"

#include "ostrowski/error.hpp"

#include <boost/math/quadrature/gauss.hpp>

#include <algorithm>
#include <cmath>

namespace ostrowski {

Polynomial::Polynomial(std::vector<double> coeffs, double origin)
    : coeffs_(std::move(coeffs)), origin_(origin) {
    if (coeffs_.empty()) {
        coeffs_.push_back(0.0);
    }
    trim();
}

void Polynomial::trim() {
    while (coeffs_.size() > 1 && coeffs_.back() == 0.0) {
        coeffs_.pop_back();
    }
}

double Polynomial::operator()(double t) const noexcept {
    const double y = t - origin_;
    double acc = 0.0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        acc = acc * y + *it;
    }
    return acc;
}

Polynomial Polynomial::derivative() const {
    if (coeffs_.size() == 1) {
        return Polynomial({0.0}, origin_);
    }
    std::vector<double> d(coeffs_.size() - 1);
    for (std::size_t k = 1; k < coeffs_.size(); ++k) {
        d[k - 1] = static_cast<double>(k) * coeffs_[k];
    }
    return Polynomial(std::move(d), origin_);
}

Polynomial Polynomial::antiderivative() const {
    std::vector<double> a(coeffs_.size() + 1, 0.0);
    for (std::size_t k = 0; k < coeffs_.size(); ++k) {
        a[k + 1] = coeffs_[k] / static_cast<double>(k + 1);
    }
    return Polynomial(std::move(a), origin_);
}

double Polynomial::integrate(double c, double d) const {
    if (c == d) {
        return 0.0;
    }
    const Polynomial prim = antiderivative();
    return prim(d) - prim(c);
}

Polynomial Polynomial::recentered(double origin) const {
    if (origin == origin_) {
        return *this;
    }
    // Repeated synthetic division by (z - delta), i.e. p(z + delta).
    std::vector<double> b = coeffs_;
    const double delta = origin - origin_;
    const std::size_t n = b.size() - 1;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = n - 1;; --j) {
            b[j] += delta * b[j + 1];
            if (j == i) {
                break;
            }
        }
    }
    return Polynomial(std::move(b), origin);
}

Polynomial Polynomial::reflected(double sum) const {
    std::vector<double> b = coeffs_;
    for (std::size_t k = 1; k < b.size(); k += 2) {
        b[k] = -b[k];
    }
    return Polynomial(std::move(b), sum - origin_);
}

Polynomial Polynomial::operator-() const {
    Polynomial r = *this;
    r *= -1.0;
    return r;
}

Polynomial& Polynomial::operator*=(double k) {
    for (double& c : coeffs_) {
        c *= k;
    }
    trim();
    return *this;
}

Polynomial operator+(const Polynomial& p, const Polynomial& q) {
    const Polynomial qs = q.recentered(p.origin_);
    std::vector<double> r(std::max(p.coeffs_.size(), qs.coeffs_.size()), 0.0);
    for (std::size_t k = 0; k < p.coeffs_.size(); ++k) {
        r[k] += p.coeffs_[k];
    }
    for (std::size_t k = 0; k < qs.coeffs_.size(); ++k) {
        r[k] += qs.coeffs_[k];
    }
    return Polynomial(std::move(r), p.origin_);
}

Polynomial operator-(const Polynomial& p, const Polynomial& q) { return p + (-q); }

Polynomial operator+(Polynomial p, double c) {
    p.coeffs_[0] += c;
    p.trim();
    return p;
}

Polynomial operator*(const Polynomial& p, const Polynomial& q) {
    const Polynomial qs = q.recentered(p.origin_);
    std::vector<double> r(p.coeffs_.size() + qs.coeffs_.size() - 1, 0.0);
    for (std::size_t i = 0; i < p.coeffs_.size(); ++i) {
        for (std::size_t j = 0; j < qs.coeffs_.size(); ++j) {
            r[i + j] += p.coeffs_[i] * qs.coeffs_[j];
        }
    }
    return Polynomial(std::move(r), p.origin_);
}

namespace {

double bisect(const Polynomial& p, double lo, double hi, double flo) {
    for (int it = 0; it < 200; ++it) {
        const double mid = 0.5 * (lo + hi);
        if (mid <= lo || mid >= hi) {
            break;
        }
        const double fm = p(mid);
        if (fm == 0.0) {
            return mid;
        }
        if ((fm < 0.0) == (flo < 0.0)) {
            lo = mid;
            flo = fm;
        } else {
            hi = mid;
        }
    }
    return 0.5 * (lo + hi);
}

}  // namespace

std::vector<double> Polynomial::roots(double c, double d) const {
    if (c > d) {
        throw ArgumentError("Polynomial::roots: c > d");
    }
    std::vector<double> out;
    if (degree() == 0) {
        return out;
    }
    if (degree() == 1) {
        const double r = origin_ - coeffs_[0] / coeffs_[1];
        if (c <= r && r <= d) {
            out.push_back(r);
        }
        return out;
    }

    std::vector<double> pts{c};
    for (double x : derivative().roots(c, d)) {
        if (x > pts.back() && x < d) {
            pts.push_back(x);
        }
    }
    pts.push_back(d);

    for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
        const double l = pts[i];
        const double r = pts[i + 1];
        const double fl = (*this)(l);
        const double fr = (*this)(r);
        if (fl == 0.0) {
            out.push_back(l);
        } else if (fr != 0.0 && ((fl < 0.0) != (fr < 0.0))) {
            out.push_back(bisect(*this, l, r, fl));
        }
    }
    if (pts.size() > 1 && (*this)(d) == 0.0) {
        out.push_back(d);
    }
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::pair<double, double> Polynomial::range(double c, double d) const {
    double lo = std::min((*this)(c), (*this)(d));
    double hi = std::max((*this)(c), (*this)(d));
    if (degree() >= 2) {
        for (double x : derivative().roots(c, d)) {
            const double v = (*this)(x);
            lo = std::min(lo, v);
            hi = std::max(hi, v);
        }
    }
    return {lo, hi};
}

double power_moment(const Polynomial& p, double anchor, double exponent, double c, double d) {
    if (c > d) {
        throw ArgumentError("power_moment: c > d");
    }
    if (!(exponent > -1.0)) {
        throw ArgumentError("power_moment: exponent must exceed -1");
    }
    if (c == d) {
        return 0.0;
    }
    const double width = d - c;
    const double gap = std::min(std::abs(c - anchor), std::abs(d - anchor));
    if ((c >= anchor || d <= anchor) && gap >= width) {
        // Shifting p to a distant anchor cancels badly. The integrand is
        // analytic a full width beyond [c, d], where 20-point Gauss-Legendre
        // is accurate to rounding.
        const auto g = [&](double t) { return std::pow(std::abs(t - anchor), exponent) * p(t); };
        return boost::math::quadrature::gauss<double, 20>::integrate(g, c, d);
    }
    const Polynomial q = p.recentered(anchor);
    const auto coeffs = q.coeffs();
    double sum = 0.0;
    if (c >= anchor) {
        const double u0 = c - anchor;
        const double u1 = d - anchor;
        for (std::size_t k = 0; k < coeffs.size(); ++k) {
            const double e = exponent + static_cast<double>(k) + 1.0;
            sum += coeffs[k] * (std::pow(u1, e) - std::pow(u0, e)) / e;
        }
    } else if (d <= anchor) {
        const double u0 = anchor - d;
        const double u1 = anchor - c;
        for (std::size_t k = 0; k < coeffs.size(); ++k) {
            const double e = exponent + static_cast<double>(k) + 1.0;
            const double sign = (k % 2 == 0) ? 1.0 : -1.0;
            sum += sign * coeffs[k] * (std::pow(u1, e) - std::pow(u0, e)) / e;
        }
    } else {
        throw ArgumentError("power_moment: [c, d] straddles the anchor");
    }
    return sum;
}

}  // namespace ostrowski
