#include "heunred/param_form.hpp"

#include <sstream>

namespace heunred {

ParamForm ParamForm::operator-() const {
    ParamForm f;
    f.c0 = -c0;
    f.ca = -ca;
    f.cb = -cb;
    f.cg = -cg;
    return f;
}

ParamForm& ParamForm::operator+=(const ParamForm& o) {
    c0 += o.c0;
    ca += o.ca;
    cb += o.cb;
    cg += o.cg;
    return *this;
}

ParamForm& ParamForm::operator-=(const ParamForm& o) {
    c0 -= o.c0;
    ca -= o.ca;
    cb -= o.cb;
    cg -= o.cg;
    return *this;
}

ParamForm& ParamForm::operator*=(const Surd& s) {
    c0 *= s;
    ca *= s;
    cb *= s;
    cg *= s;
    return *this;
}

std::string ParamForm::str() const {
    std::ostringstream os;
    bool first = true;
    auto emit = [&](const Surd& coeff, const char* sym) {
        if (coeff.is_zero()) return;
        if (!first) os << " + ";
        if (sym == nullptr)
            os << coeff.str();
        else if (coeff.is_one())
            os << sym;
        else
            os << coeff.str() << "*" << sym;
        first = false;
    };
    emit(c0, nullptr);
    emit(ca, "alpha");
    emit(cb, "beta");
    emit(cg, "gamma");
    if (first) return "0";
    return os.str();
}

} // namespace heunred
