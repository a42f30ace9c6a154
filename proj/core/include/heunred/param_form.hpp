#pragma once

#include <string>

#include "heunred/surd.hpp"

namespace heunred {

/// Linear form c0 + ca*alpha + cb*beta + cg*gamma in the free exponent
/// parameters of a catalogue reduction.  Subcases with fewer free parameters
/// simply never reference the unused symbols.
struct ParamForm {
    Surd c0, ca, cb, cg;

    ParamForm() : c0(0), ca(0), cb(0), cg(0) {}
    ParamForm(const Surd& constant) : c0(constant), ca(0), cb(0), cg(0) {}
    static ParamForm constant(const Surd& v) { return ParamForm(v); }
    static ParamForm alpha() {
        ParamForm f;
        f.ca = Surd(1);
        return f;
    }
    static ParamForm beta() {
        ParamForm f;
        f.cb = Surd(1);
        return f;
    }
    static ParamForm gamma() {
        ParamForm f;
        f.cg = Surd(1);
        return f;
    }

    bool is_constant() const { return ca.is_zero() && cb.is_zero() && cg.is_zero(); }

    ParamForm operator-() const;
    ParamForm& operator+=(const ParamForm& o);
    ParamForm& operator-=(const ParamForm& o);
    ParamForm& operator*=(const Surd& s);

    friend ParamForm operator+(ParamForm x, const ParamForm& y) { return x += y; }
    friend ParamForm operator-(ParamForm x, const ParamForm& y) { return x -= y; }
    friend ParamForm operator*(ParamForm x, const Surd& s) { return x *= s; }
    friend ParamForm operator*(const Surd& s, ParamForm x) { return x *= s; }

    friend bool operator==(const ParamForm& x, const ParamForm& y) {
        return x.c0 == y.c0 && x.ca == y.ca && x.cb == y.cb && x.cg == y.cg;
    }
    friend bool operator!=(const ParamForm& x, const ParamForm& y) { return !(x == y); }

    Surd operator()(const Surd& alpha, const Surd& beta, const Surd& gamma) const {
        return c0 + ca * alpha + cb * beta + cg * gamma;
    }

    /// Deterministic human form, e.g. "(alpha+beta+1)/3" degenerates to
    /// "1/3 + 1/3*alpha + 1/3*beta".
    std::string str() const;
};

} // namespace heunred
