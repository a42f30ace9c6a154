#include "heunred/mobius.hpp"

#include <sstream>

namespace heunred {

Mobius::Mobius(const Surd& p, const Surd& q, const Surd& r, const Surd& s)
    : p_(p), q_(q), r_(r), s_(s) {
    if (determinant().is_zero()) raise(errc::internal, "Mobius map with zero determinant");
    canonicalize();
}

void Mobius::canonicalize() {
    // Scale so the first nonzero coefficient in (r, s, p, q) order is 1.
    const Surd* lead = nullptr;
    if (!r_.is_zero())
        lead = &r_;
    else
        lead = &s_;  // affine: s != 0, else determinant would vanish
    Surd inv = lead->inverse();
    p_ *= inv;
    q_ *= inv;
    r_ *= inv;
    s_ *= inv;
}

bool Mobius::is_identity() const {
    return r_.is_zero() && q_.is_zero() && p_ == s_;
}

bool operator==(const Mobius& x, const Mobius& y) {
    return x.p_ == y.p_ && x.q_ == y.q_ && x.r_ == y.r_ && x.s_ == y.s_;
}

Point Mobius::operator()(const Point& x) const {
    if (x.is_infinity()) {
        if (r_.is_zero()) return Point::infinity();
        return Point(p_ / r_);
    }
    const Surd& v = x.value();
    Surd den = r_ * v + s_;
    if (den.is_zero()) return Point::infinity();
    return Point((p_ * v + q_) / den);
}

Mobius Mobius::inverse() const { return Mobius(s_, -q_, -r_, p_); }

Mobius Mobius::compose(const Mobius& o) const {
    return Mobius(p_ * o.p_ + q_ * o.r_, p_ * o.q_ + q_ * o.s_,
                  r_ * o.p_ + s_ * o.r_, r_ * o.q_ + s_ * o.s_);
}

Poly Mobius::as_poly() const {
    if (!is_affine()) raise(errc::internal, "as_poly() on a non-affine Mobius map");
    Surd inv = s_.inverse();
    return Poly{q_ * inv, p_ * inv};
}

namespace {

// Map sending (x0, x1, x2) to (0, 1, infinity).
Mobius to_standard(const Point& x0, const Point& x1, const Point& x2) {
    // (t - x0)(x1 - x2) / ((t - x2)(x1 - x0)), with limits when a point is infinite.
    if (x0.is_infinity()) {
        // (x1 - x2) / (t - x2)
        return Mobius(Surd(0), x1.value() - x2.value(), Surd(1), -x2.value());
    }
    if (x1.is_infinity()) {
        // (t - x0) / (t - x2)
        return Mobius(Surd(1), -x0.value(), Surd(1), -x2.value());
    }
    if (x2.is_infinity()) {
        // (t - x0) / (x1 - x0)
        return Mobius(Surd(1), -x0.value(), Surd(0), x1.value() - x0.value());
    }
    Surd a = x1.value() - x2.value();
    Surd b = x1.value() - x0.value();
    return Mobius(a, -x0.value() * a, b, -x2.value() * b);
}

} // namespace

Mobius Mobius::through(const Point& x0, const Point& x1, const Point& x2,
                       const Point& y0, const Point& y1, const Point& y2) {
    if (x0 == x1 || x0 == x2 || x1 == x2 || y0 == y1 || y0 == y2 || y1 == y2)
        raise(errc::coincident_points, "Mobius map through coincident points");
    return to_standard(y0, y1, y2).inverse().compose(to_standard(x0, x1, x2));
}

std::string Mobius::str() const {
    std::ostringstream os;
    if (is_affine()) {
        Surd a = p_ / s_, b = q_ / s_;
        os << "t -> (" << a.str() << ")*t";
        if (!b.is_zero()) os << " + (" << b.str() << ")";
        return os.str();
    }
    os << "t -> ((" << p_.str() << ")*t + (" << q_.str() << ")) / ((" << r_.str() << ")*t + ("
       << s_.str() << "))";
    return os.str();
}

} // namespace heunred
