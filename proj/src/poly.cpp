#include "ellcorr/poly.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>

namespace ellcorr {

namespace {
constexpr double kStripTol = 0.0; // exact zeros only; callers decide rounding
}

void Poly::strip() {
    while (!c_.empty() && std::abs(c_.back()) <= kStripTol)
        c_.pop_back();
}

Cx Poly::eval(Cx u) const {
    Cx acc(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it)
        acc = acc * u + *it;
    return acc;
}

Poly Poly::derivative() const {
    if (c_.size() <= 1)
        return Poly{};
    std::vector<Cx> d(c_.size() - 1);
    for (size_t k = 1; k < c_.size(); ++k)
        d[k - 1] = static_cast<double>(k) * c_[k];
    return Poly(std::move(d));
}

Poly Poly::monic() const {
    if (c_.empty())
        return *this;
    Cx lead = c_.back();
    std::vector<Cx> m(c_);
    for (auto& x : m)
        x /= lead;
    m.back() = Cx(1); // kill rounding residue in the leading slot
    return Poly(std::move(m));
}

Poly operator+(const Poly& a, const Poly& b) {
    std::vector<Cx> s(std::max(a.c_.size(), b.c_.size()), Cx(0));
    for (size_t k = 0; k < a.c_.size(); ++k)
        s[k] += a.c_[k];
    for (size_t k = 0; k < b.c_.size(); ++k)
        s[k] += b.c_[k];
    return Poly(std::move(s));
}

Poly operator-(const Poly& a, const Poly& b) { return a + Cx(-1) * b; }

Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero())
        return Poly{};
    std::vector<Cx> p(a.c_.size() + b.c_.size() - 1, Cx(0));
    for (size_t i = 0; i < a.c_.size(); ++i)
        for (size_t j = 0; j < b.c_.size(); ++j)
            p[i + j] += a.c_[i] * b.c_[j];
    return Poly(std::move(p));
}

Poly operator*(Cx s, const Poly& a) {
    std::vector<Cx> p(a.c_);
    for (auto& x : p)
        x *= s;
    return Poly(std::move(p));
}

Poly Poly::pow(int n) const {
    Poly acc = Poly::constant(Cx(1));
    Poly base = *this;
    for (int e = n; e > 0; e >>= 1) {
        if (e & 1)
            acc = acc * base;
        if (e > 1)
            base = base * base;
    }
    return acc;
}

Poly Poly::deflate(Cx r) const {
    if (c_.size() <= 1)
        return Poly{};
    std::vector<Cx> q(c_.size() - 1);
    Cx carry = c_.back();
    for (int k = static_cast<int>(c_.size()) - 2; k >= 0; --k) {
        q[k] = carry;
        carry = c_[k] + r * carry;
    }
    return Poly(std::move(q));
}

std::vector<Cx> Poly::roots() const {
    int n = degree();
    if (n <= 0)
        return {};
    if (n == 1)
        return {-c_[0] / c_[1]};

    Eigen::MatrixXcd comp = Eigen::MatrixXcd::Zero(n, n);
    for (int i = 1; i < n; ++i)
        comp(i, i - 1) = 1.0;
    for (int i = 0; i < n; ++i)
        comp(i, n - 1) = -c_[i] / c_.back();
    Eigen::ComplexEigenSolver<Eigen::MatrixXcd> solver(comp, false);

    Poly d = derivative();
    std::vector<Cx> out;
    out.reserve(n);
    for (int i = 0; i < n; ++i) {
        Cx r = solver.eigenvalues()(i);
        for (int it = 0; it < 6; ++it) {
            Cx dv = d.eval(r);
            if (std::abs(dv) < 1e-14)
                break; // multiple root; companion value is as good as it gets
            Cx step = eval(r) / dv;
            r -= step;
            if (std::abs(step) < 1e-15 * (1.0 + std::abs(r)))
                break;
        }
        out.push_back(r);
    }
    std::sort(out.begin(), out.end(), [](Cx a, Cx b) {
        if (a.real() != b.real())
            return a.real() < b.real();
        return a.imag() < b.imag();
    });
    return out;
}

Poly poly_from_roots(const std::vector<Cx>& roots, Cx scale) {
    Poly p = Poly::constant(scale);
    for (Cx r : roots)
        p = p * Poly{{-r, Cx(1)}};
    return p;
}

PolyJet poly_jet(const Poly& p, Cx u) {
    Poly d1 = p.derivative();
    Poly d2 = d1.derivative();
    Poly d3 = d2.derivative();
    return {p.eval(u), d1.eval(u), d2.eval(u), d3.eval(u)};
}

} // namespace ellcorr
