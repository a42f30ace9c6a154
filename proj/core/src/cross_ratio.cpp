#include "heunred/cross_ratio.hpp"

#include <algorithm>

namespace heunred {

bool CrossRatioOrbit::contains(const Surd& s) const {
    return std::find(values.begin(), values.end(), s) != values.end();
}

Surd cross_ratio(const Point& A, const Point& B, const Point& C, const Point& D) {
    const Point* pts[4] = {&A, &B, &C, &D};
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j)
            if (*pts[i] == *pts[j]) raise(errc::coincident_points, "cross-ratio of coincident points");

    // (C-A)(D-B) / ((D-A)(C-B)); cancel the two factors containing an
    // infinite point (at most one point is infinite after distinctness).
    if (A.is_infinity()) return (D.value() - B.value()) / (C.value() - B.value());
    if (B.is_infinity()) return (C.value() - A.value()) / (D.value() - A.value());
    if (C.is_infinity()) return (D.value() - B.value()) / (D.value() - A.value());
    if (D.is_infinity()) return (C.value() - A.value()) / (C.value() - B.value());
    return ((C.value() - A.value()) * (D.value() - B.value())) /
           ((D.value() - A.value()) * (C.value() - B.value()));
}

CrossRatioOrbit orbit_of(const Surd& s) {
    if (s == Surd(0) || s == Surd(1))
        raise(errc::excluded_value, "cross-ratio orbit undefined for s in {0, 1}");
    Surd one(1);
    std::vector<Surd> vals = {s,
                              one - s,
                              one / s,
                              one / (one - s),
                              s / (s - one),
                              (s - one) / s};
    std::sort(vals.begin(), vals.end(), SurdLexOrder{});
    vals.erase(std::unique(vals.begin(), vals.end()), vals.end());

    OrbitClass cls;
    if (vals.size() == 3)
        cls = OrbitClass::Harmonic;
    else if (vals.size() == 2)
        cls = OrbitClass::Equianharmonic;
    else
        cls = s.is_rational() ? OrbitClass::GenericReal : OrbitClass::GenericNonReal;
    return {std::move(vals), cls};
}

std::vector<Mobius> affine_maps_to(const Surd& d, const Surd& D) {
    if (!orbit_of(D).contains(d))
        raise(errc::not_on_orbit, "d = " + d.str() + " is not on the orbit of D = " + D.str());

    Surd one(1);
    const Mobius candidates[6] = {
        Mobius::affine(one, Surd(0)),        // t
        Mobius::affine(-one, one),           // 1 - t
        Mobius::affine(D, Surd(0)),          // D t
        Mobius::affine(D - one, one),        // (D-1) t + 1
        Mobius::affine(one - D, D),          // (1-D) t + D
        Mobius::affine(-D, D),               // D (1 - t)
    };

    std::vector<Mobius> out;
    for (const Mobius& m : candidates) {
        // Pointwise set check {0, 1, d} -> {0, 1, D}.
        Surd imgs[3] = {m(Point(Surd(0))).value(), m(Point(Surd(1))).value(),
                        m(Point(d)).value()};
        bool seen0 = false, seen1 = false, seenD = false;
        bool ok = true;
        for (const Surd& v : imgs) {
            if (v == Surd(0) && !seen0)
                seen0 = true;
            else if (v == one && !seen1)
                seen1 = true;
            else if (v == D && !seenD)
                seenD = true;
            else
                ok = false;
        }
        if (ok && seen0 && seen1 && seenD) {
            if (std::find(out.begin(), out.end(), m) == out.end()) out.push_back(m);
        }
    }
    if (out.empty()) raise(errc::internal, "no affine map found for an on-orbit d");
    return out;
}

const char* family_name(Family f) {
    switch (f) {
        case Family::F1a: return "1a";
        case Family::F1b: return "1b";
        case Family::F2a: return "2a";
        case Family::F2b: return "2b";
        case Family::F2c: return "2c";
    }
    return "?";
}

namespace {

struct CanonicalRow {
    Surd D;
    Family family;
};

const std::vector<CanonicalRow>& canonical_rows() {
    static const std::vector<CanonicalRow> rows = [] {
        std::vector<CanonicalRow> r;
        Surd half = Surd(make_rational(1, 2));
        r.push_back({Surd(2), Family::F1a});
        r.push_back({Surd(4), Family::F1b});
        r.push_back({half + Surd(make_rational(1, 2)) * Surd::root(3), Family::F2a});
        r.push_back({half + Surd(make_rational(5, 4)) * Surd::root(2), Family::F2b});
        r.push_back({half + Surd(make_rational(11, 90)) * Surd::root(15), Family::F2c});
        return r;
    }();
    return rows;
}

} // namespace

std::optional<CanonicalTarget> canonical_target(const Surd& d) {
    if (d == Surd(0) || d == Surd(1))
        raise(errc::excluded_value, "canonical target undefined for d in {0, 1}");
    CrossRatioOrbit orbit = orbit_of(d);
    for (const auto& row : canonical_rows())
        if (orbit.contains(row.D)) return CanonicalTarget{row.D, row.family};
    return std::nullopt;
}

const std::vector<Surd>& catalogue_d_values() {
    static const std::vector<Surd> vals = [] {
        std::vector<Surd> v;
        for (const auto& row : canonical_rows())
            for (const Surd& s : orbit_of(row.D).values) v.push_back(s);
        return v;
    }();
    return vals;
}

std::optional<OrbitSnap> nearest_orbit(std::complex<double> d, double tol) {
    std::optional<OrbitSnap> best;
    for (const Surd& v : catalogue_d_values()) {
        double dist = std::abs(v.to_complex() - d);
        if (dist <= tol && (!best || dist < best->distance)) {
            Family fam = canonical_target(v)->family;
            best = OrbitSnap{v, fam, dist};
        }
    }
    return best;
}

} // namespace heunred
