#include "heunred/surd.hpp"

#include <cmath>
#include <ostream>
#include <sstream>

namespace heunred {

const char* errc_name(errc code) {
    switch (code) {
        case errc::incompatible_radicand: return "incompatible-radicand";
        case errc::division_by_zero: return "division-by-zero";
        case errc::excluded_value: return "excluded-value";
        case errc::not_on_orbit: return "not-on-orbit";
        case errc::coincident_points: return "coincident-points";
        case errc::undefined_second_solution: return "undefined-second-solution";
        case errc::undefined_hl: return "undefined-Hl";
        case errc::nonzero_constant_term: return "nonzero-constant-term";
        case errc::trivial_equation: return "trivial-equation";
        case errc::degenerate_equation: return "degenerate-equation";
        case errc::nontrivial_equation: return "nontrivial-equation";
        case errc::inconsistent_exponents: return "inconsistent-exponents";
        case errc::uncertified_root: return "uncertified-root";
        case errc::not_equianharmonic: return "not-equianharmonic";
        case errc::unsupported_invariants: return "unsupported-invariants";
        case errc::undefined_side: return "undefined-side";
        case errc::branch_ambiguity: return "branch-ambiguity";
        case errc::malformed_input: return "malformed-input";
        case errc::internal: return "internal";
    }
    return "unknown";
}

Rational make_rational(long num, long den) {
    if (den == 0) raise(errc::division_by_zero, "rational with zero denominator");
    Rational r(num, den);
    r.canonicalize();
    return r;
}

Rational parse_rational(const std::string& text) {
    std::string t = text;
    // mpq_class accepts "a/b"; reject empty and stray whitespace ourselves.
    if (t.empty()) raise(errc::malformed_input, "empty rational");
    for (char c : t) {
        if (!(std::isdigit(static_cast<unsigned char>(c)) || c == '-' || c == '+' || c == '/'))
            raise(errc::malformed_input, "bad rational literal '" + text + "'");
    }
    Rational r;
    if (r.set_str(t, 10) != 0) raise(errc::malformed_input, "bad rational literal '" + text + "'");
    if (r.get_den() == 0) raise(errc::division_by_zero, "rational with zero denominator");
    r.canonicalize();
    return r;
}

std::string rational_to_string(const Rational& r) {
    std::ostringstream os;
    os << r;
    return os.str();
}

bool is_integer(const Rational& r) { return r.get_den() == 1; }

bool rational_cbrt(const Rational& r, Rational& out) {
    if (r == 0) {
        out = 0;
        return true;
    }
    mpz_class num = r.get_num(), den = r.get_den();
    bool neg = num < 0;
    if (neg) num = -num;
    mpz_class nr, dr;
    if (mpz_root(nr.get_mpz_t(), num.get_mpz_t(), 3) == 0) return false;
    if (mpz_root(dr.get_mpz_t(), den.get_mpz_t(), 3) == 0) return false;
    out = Rational(neg ? -nr : nr, dr);
    out.canonicalize();
    return true;
}

Surd::Surd(const Rational& a, const Rational& b, int m) : a_(a), b_(b), m_(m) {
    if (!valid_radicand(m)) raise(errc::incompatible_radicand, "radicand must be one of 1,2,3,15");
    normalize_tag();
}

int Surd::merge_radicand(const Surd& x, const Surd& y) {
    if (x.b_ == 0) return y.m_;
    if (y.b_ == 0) return x.m_;
    if (x.m_ != y.m_)
        raise(errc::incompatible_radicand,
              "cannot mix sqrt(-" + std::to_string(x.m_) + ") with sqrt(-" + std::to_string(y.m_) + ")");
    return x.m_;
}

Surd& Surd::operator+=(const Surd& o) {
    m_ = merge_radicand(*this, o);
    a_ += o.a_;
    b_ += o.b_;
    normalize_tag();
    return *this;
}

Surd& Surd::operator-=(const Surd& o) {
    m_ = merge_radicand(*this, o);
    a_ -= o.a_;
    b_ -= o.b_;
    normalize_tag();
    return *this;
}

Surd& Surd::operator*=(const Surd& o) {
    int m = merge_radicand(*this, o);
    // (a1 + b1 w)(a2 + b2 w) with w^2 = -m
    Rational a = a_ * o.a_ - Rational(m) * b_ * o.b_;
    Rational b = a_ * o.b_ + b_ * o.a_;
    a_ = a;
    b_ = b;
    m_ = m;
    normalize_tag();
    return *this;
}

Surd Surd::inverse() const {
    Rational n = norm();
    if (n == 0) raise(errc::division_by_zero, "inverse of zero");
    return Surd(a_ / n, -b_ / n, m_);
}

Surd& Surd::operator/=(const Surd& o) {
    if (o.is_zero()) raise(errc::division_by_zero, "division by zero surd");
    return *this *= o.inverse();
}

bool Surd::is_nonpositive_integer() const {
    return b_ == 0 && is_integer(a_) && a_ <= 0;
}

bool Surd::is_positive_integer() const {
    return b_ == 0 && is_integer(a_) && a_ > 0;
}

bool SurdLexOrder::operator()(const Surd& x, const Surd& y) const {
    if (x.a_ != y.a_) return x.a_ < y.a_;
    if (x.b_ != y.b_) return x.b_ < y.b_;
    return x.m_ < y.m_;
}

bool lex_less(const Surd& x, const Surd& y) { return SurdLexOrder{}(x, y); }

std::complex<double> Surd::to_complex() const {
    return {a_.get_d(), b_.get_d() * std::sqrt(static_cast<double>(m_))};
}

std::string Surd::str() const {
    if (b_ == 0) return rational_to_string(a_);
    std::ostringstream os;
    os << a_;
    if (b_ < 0)
        os << "-" << Rational(-b_);
    else
        os << "+" << b_;
    os << "*sqrt(-" << m_ << ")";
    return os.str();
}

Surd Surd::parse(const std::string& text) {
    std::string t;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) t += c;
    if (t.empty()) raise(errc::malformed_input, "empty surd");

    auto pos = t.find("sqrt(-");
    if (pos == std::string::npos) return Surd(parse_rational(t));

    auto close = t.find(')', pos);
    if (close == std::string::npos || close != t.size() - 1)
        raise(errc::malformed_input, "bad surd literal '" + text + "'");
    int m = 0;
    try {
        m = std::stoi(t.substr(pos + 6, close - pos - 6));
    } catch (const std::exception&) {
        raise(errc::malformed_input, "bad radicand in '" + text + "'");
    }
    if (!valid_radicand(m)) raise(errc::incompatible_radicand, "radicand must be one of 1,2,3,15");

    // Strip the "*sqrt(-m)" tail, then split "a+b" / "a-b" / bare "b".
    if (pos == 0 || t[pos - 1] != '*') raise(errc::malformed_input, "bad surd literal '" + text + "'");
    std::string head = t.substr(0, pos - 1);

    // Find the sign splitting a and b; skip a leading sign of a.
    std::size_t split = std::string::npos;
    for (std::size_t i = 1; i < head.size(); ++i) {
        if ((head[i] == '+' || head[i] == '-') && head[i - 1] != '/' && head[i - 1] != '+' &&
            head[i - 1] != '-')
            split = i;  // keep the last such sign: "a+b", both already signless of '/'
    }
    if (split == std::string::npos) return Surd(Rational(0), parse_rational(head), m);
    Rational a = parse_rational(head.substr(0, split));
    Rational b = parse_rational(head.substr(split + 1));
    if (head[split] == '-') b = -b;
    return Surd(a, b, m);
}

std::ostream& operator<<(std::ostream& os, const Surd& s) { return os << s.str(); }

} // namespace heunred
