#pragma once

#include <string>

#include "heunred/surd.hpp"

namespace heunred {

/// A point of the extended complex plane: either a finite Surd or infinity.
/// Infinity is a structural sentinel, not a large value; P-symbol columns
/// at infinity differ in kind from finite ones.
class Point {
public:
    Point() : finite_(true), v_() {}
    Point(const Surd& v) : finite_(true), v_(v) {}
    Point(long v) : finite_(true), v_(v) {}
    static Point infinity() {
        Point p;
        p.finite_ = false;
        return p;
    }

    bool is_infinity() const { return !finite_; }
    bool is_finite() const { return finite_; }
    const Surd& value() const {
        if (!finite_) raise(errc::internal, "value() on the point at infinity");
        return v_;
    }

    friend bool operator==(const Point& x, const Point& y) {
        if (x.finite_ != y.finite_) return false;
        return !x.finite_ || x.v_ == y.v_;
    }
    friend bool operator!=(const Point& x, const Point& y) { return !(x == y); }

    std::string str() const { return finite_ ? v_.str() : "inf"; }

private:
    bool finite_;
    Surd v_;
};

} // namespace heunred
