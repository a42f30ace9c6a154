#pragma once

#include <complex>
#include <optional>
#include <vector>

#include "heunred/mobius.hpp"
#include "heunred/point.hpp"
#include "heunred/surd.hpp"

namespace heunred {

enum class OrbitClass { Harmonic, Equianharmonic, GenericReal, GenericNonReal };

/// Orbit of a cross-ratio under s -> 1-s and s -> 1/s: six values generically,
/// three for the harmonic orbit {-1, 1/2, 2}, two for the equianharmonic
/// orbit {1/2 +/- (1/2) sqrt(-3)}.
struct CrossRatioOrbit {
    std::vector<Surd> values;  // deduplicated, sorted lexicographically
    OrbitClass cls;

    bool contains(const Surd& s) const;
};

/// (C-A)(D-B) / ((D-A)(C-B)), with formal limits when a point is infinite.
Surd cross_ratio(const Point& A, const Point& B, const Point& C, const Point& D);

CrossRatioOrbit orbit_of(const Surd& s);

/// All affine maps t -> A1(t) carrying {0, 1, d} onto {0, 1, D}; more than
/// one when the orbit degenerates.  Requires d on the orbit of D.
std::vector<Mobius> affine_maps_to(const Surd& d, const Surd& D);

/// The five canonical orbit representatives the nontrivial classification
/// allows.  Families 1a and 2a also admit the composite quartic/sextic
/// subcases (1c, 2d).
enum class Family { F1a, F1b, F2a, F2b, F2c };
const char* family_name(Family f);

struct CanonicalTarget {
    Surd D;
    Family family;
};

/// The unique canonical D whose orbit contains d, if any (orbits are disjoint).
std::optional<CanonicalTarget> canonical_target(const Surd& d);

/// The 23 exact d-values admitted by the catalogue.
const std::vector<Surd>& catalogue_d_values();

/// Float front door: snap a decimal d to the nearest exact catalogue value
/// within tol, reporting the snap distance.
struct OrbitSnap {
    Surd value;
    Family family;
    double distance;
};
std::optional<OrbitSnap> nearest_orbit(std::complex<double> d, double tol);

} // namespace heunred
