#include "heunred/rational_map.hpp"

#include <sstream>

namespace heunred {

RationalMap::RationalMap(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) raise(errc::division_by_zero, "rational map with zero denominator");
    normalize();
}

void RationalMap::normalize() {
    if (num_.is_zero()) {
        den_ = Poly::one();
        return;
    }
    Poly g = poly_gcd(num_, den_);
    if (g.degree() > 0) {
        num_ = num_.exact_div(g);
        den_ = den_.exact_div(g);
    }
    Surd inv = den_.leading().inverse();
    num_ *= inv;
    den_ *= inv;
}

Point RationalMap::operator()(const Point& x) const {
    if (x.is_infinity()) {
        int dn = num_.degree(), dd = den_.degree();
        if (dn > dd) return Point::infinity();
        if (dn < dd) return Point(Surd(0));
        return Point(num_.leading() / den_.leading());
    }
    Surd d = den_(x.value());
    if (d.is_zero()) return Point::infinity();
    return Point(num_(x.value()) / d);
}

std::complex<double> RationalMap::eval(std::complex<double> x) const {
    return num_(x) / den_(x);
}

RationalMap RationalMap::derivative() const {
    // (n/d)' = (n' d - n d') / d^2
    return RationalMap(num_.derivative() * den_ - num_ * den_.derivative(), den_ * den_);
}

RationalMap RationalMap::compose_mobius(const Mobius& inner) const {
    return compose(RationalMap::from_mobius(inner));
}

RationalMap RationalMap::compose(const RationalMap& inner) const {
    // Substitute inner = a/b into each power of t, clearing denominators:
    // (n/d)(a/b) = sum n_k a^k b^(N-k) / sum d_k a^k b^(N-k), N = max degree.
    int N = std::max(num_.degree(), den_.degree());
    if (N <= 0) return *this;
    std::vector<Poly> apow(static_cast<std::size_t>(N) + 1), bpow(apow.size());
    apow[0] = Poly::one();
    bpow[0] = Poly::one();
    for (int k = 1; k <= N; ++k) {
        apow[static_cast<std::size_t>(k)] = apow[static_cast<std::size_t>(k - 1)] * inner.num();
        bpow[static_cast<std::size_t>(k)] = bpow[static_cast<std::size_t>(k - 1)] * inner.den();
    }
    Poly n = Poly::zero(), d = Poly::zero();
    for (int k = 0; k <= N; ++k) {
        Poly cross = apow[static_cast<std::size_t>(k)] * bpow[static_cast<std::size_t>(N - k)];
        n += Poly(num_.coeff(k)) * cross;
        d += Poly(den_.coeff(k)) * cross;
    }
    return RationalMap(std::move(n), std::move(d));
}

RationalMap& RationalMap::operator+=(const RationalMap& o) {
    *this = RationalMap(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
    return *this;
}

RationalMap& RationalMap::operator-=(const RationalMap& o) {
    *this = RationalMap(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
    return *this;
}

RationalMap& RationalMap::operator*=(const RationalMap& o) {
    *this = RationalMap(num_ * o.num_, den_ * o.den_);
    return *this;
}

RationalMap& RationalMap::operator/=(const RationalMap& o) {
    if (o.num_.is_zero()) raise(errc::division_by_zero, "division by the zero map");
    *this = RationalMap(num_ * o.den_, den_ * o.num_);
    return *this;
}

std::string RationalMap::str(const std::string& var) const {
    if (is_polynomial()) return num_.str(var);
    std::ostringstream os;
    os << "(" << num_.str(var) << ") / (" << den_.str(var) << ")";
    return os.str();
}

bool rational_identity_equal(const RationalMap& f, const RationalMap& g) {
    return f.num() * g.den() == g.num() * f.den();
}

} // namespace heunred
