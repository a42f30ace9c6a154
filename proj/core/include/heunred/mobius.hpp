#pragma once

#include "heunred/point.hpp"
#include "heunred/poly.hpp"

namespace heunred {

/// t -> (p t + q) / (r t + s) with nonzero determinant p s - q r.
class Mobius {
public:
    Mobius() : p_(1), q_(0), r_(0), s_(1) {}
    Mobius(const Surd& p, const Surd& q, const Surd& r, const Surd& s);

    static Mobius identity() { return Mobius(); }
    /// Affine map t -> a t + b.
    static Mobius affine(const Surd& a, const Surd& b) { return Mobius(a, b, Surd(0), Surd(1)); }
    /// The unique Mobius map sending three distinct points to three distinct images.
    static Mobius through(const Point& x0, const Point& x1, const Point& x2,
                          const Point& y0, const Point& y1, const Point& y2);

    const Surd& p() const { return p_; }
    const Surd& q() const { return q_; }
    const Surd& r() const { return r_; }
    const Surd& s() const { return s_; }

    bool is_affine() const { return r_.is_zero(); }
    bool is_identity() const;
    Surd determinant() const { return p_ * s_ - q_ * r_; }

    Point operator()(const Point& x) const;
    Mobius inverse() const;
    /// this(other(t)).
    Mobius compose(const Mobius& other) const;

    /// Affine maps as degree-1 polynomials; throws otherwise.
    Poly as_poly() const;

    /// Canonical coefficient scaling so equal maps compare equal.
    void canonicalize();
    friend bool operator==(const Mobius& x, const Mobius& y);

    std::string str() const;

private:
    Surd p_, q_, r_, s_;
};

} // namespace heunred
