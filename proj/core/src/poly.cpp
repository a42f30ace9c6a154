#include "heunred/poly.hpp"

#include <sstream>

namespace heunred {

void Poly::trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

Poly Poly::from_roots(const std::vector<Surd>& roots) {
    Poly p = one();
    for (const Surd& r : roots) p *= linear_root(r);
    return p;
}

const Surd& Poly::leading() const {
    if (c_.empty()) raise(errc::internal, "leading coefficient of the zero polynomial");
    return c_.back();
}

Surd Poly::operator()(const Surd& x) const {
    Surd acc(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

std::complex<double> Poly::operator()(std::complex<double> x) const {
    std::complex<double> acc(0.0, 0.0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + it->to_complex();
    return acc;
}

Poly Poly::derivative() const {
    if (c_.size() <= 1) return zero();
    std::vector<Surd> d(c_.size() - 1);
    for (std::size_t k = 1; k < c_.size(); ++k) d[k - 1] = c_[k] * static_cast<long>(k);
    return Poly(std::move(d));
}

Poly Poly::compose(const Poly& inner) const {
    Poly acc = zero();
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
        acc *= inner;
        acc += Poly(*it);
    }
    return acc;
}

Poly Poly::pow(int n) const {
    if (n < 0) raise(errc::internal, "negative polynomial power");
    Poly acc = one();
    for (int i = 0; i < n; ++i) acc *= *this;
    return acc;
}

int Poly::root_multiplicity(const Surd& x) const {
    if (is_zero()) raise(errc::internal, "root multiplicity in the zero polynomial");
    Poly p = *this;
    int k = 0;
    while (k <= degree() && p(x).is_zero()) {
        ++k;
        p = p.derivative();
    }
    return k;
}

Poly Poly::operator-() const {
    Poly r = *this;
    for (auto& c : r.c_) c = -c;
    return r;
}

Poly& Poly::operator+=(const Poly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Surd(0));
    for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] += o.c_[k];
    trim();
    return *this;
}

Poly& Poly::operator-=(const Poly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Surd(0));
    for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] -= o.c_[k];
    trim();
    return *this;
}

Poly& Poly::operator*=(const Poly& o) {
    if (is_zero() || o.is_zero()) {
        c_.clear();
        return *this;
    }
    std::vector<Surd> r(c_.size() + o.c_.size() - 1, Surd(0));
    for (std::size_t i = 0; i < c_.size(); ++i)
        for (std::size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
    c_ = std::move(r);
    trim();
    return *this;
}

Poly& Poly::operator*=(const Surd& s) {
    if (s.is_zero()) {
        c_.clear();
        return *this;
    }
    for (auto& c : c_) c *= s;
    return *this;
}

void Poly::divmod(const Poly& div, Poly& q, Poly& r) const {
    if (div.is_zero()) raise(errc::division_by_zero, "polynomial division by zero");
    q = zero();
    r = *this;
    Surd inv_lead = div.leading().inverse();
    while (!r.is_zero() && r.degree() >= div.degree()) {
        int shift = r.degree() - div.degree();
        Surd f = r.leading() * inv_lead;
        std::vector<Surd> term(static_cast<std::size_t>(shift) + 1, Surd(0));
        term.back() = f;
        Poly t(std::move(term));
        q += t;
        r -= t * div;
    }
}

Poly Poly::exact_div(const Poly& div) const {
    Poly q, r;
    divmod(div, q, r);
    if (!r.is_zero()) raise(errc::internal, "inexact polynomial division");
    return q;
}

Poly Poly::monic() const {
    if (is_zero()) return zero();
    return *this * leading().inverse();
}

std::string Poly::str(const std::string& var) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int k = degree(); k >= 0; --k) {
        if (c_[static_cast<std::size_t>(k)].is_zero()) continue;
        if (!first) os << " + ";
        os << "(" << c_[static_cast<std::size_t>(k)].str() << ")";
        if (k >= 1) os << "*" << var;
        if (k >= 2) os << "^" << k;
        first = false;
    }
    return os.str();
}

Poly poly_gcd(Poly a, Poly b) {
    while (!b.is_zero()) {
        Poly q, r;
        a.divmod(b, q, r);
        a = std::move(b);
        b = std::move(r);
    }
    if (a.is_zero()) return a;
    return a.monic();
}

bool is_squarefree(const Poly& p) {
    if (p.degree() <= 1) return true;
    return poly_gcd(p, p.derivative()).degree() == 0;
}

} // namespace heunred
