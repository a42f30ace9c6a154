#include "heunred/subcases.hpp"

#include <array>

namespace heunred {

const char* subcase_name(SubcaseId id) {
    switch (id) {
        case SubcaseId::S1a: return "1a";
        case SubcaseId::S1b: return "1b";
        case SubcaseId::S1c: return "1c";
        case SubcaseId::S2a: return "2a";
        case SubcaseId::S2b: return "2b";
        case SubcaseId::S2c: return "2c";
        case SubcaseId::S2d: return "2d";
    }
    return "?";
}

SubcaseId subcase_from_name(const std::string& name) {
    for (SubcaseId id : all_subcases())
        if (name == subcase_name(id)) return id;
    raise(errc::malformed_input, "unknown subcase '" + name + "'");
}

int subcase_degree(SubcaseId id) {
    switch (id) {
        case SubcaseId::S1a: return 2;
        case SubcaseId::S1b: return 3;
        case SubcaseId::S1c: return 4;
        case SubcaseId::S2a: return 3;
        case SubcaseId::S2b: return 4;
        case SubcaseId::S2c: return 5;
        case SubcaseId::S2d: return 6;
    }
    return 0;
}

bool subcase_is_case1(SubcaseId id) {
    return id == SubcaseId::S1a || id == SubcaseId::S1b || id == SubcaseId::S1c;
}

int subcase_extra_doubles(SubcaseId id) {
    return subcase_degree(id) - (subcase_is_case1(id) ? 2 : 3);
}

int SideStructure::total_multiplicity() const {
    int n = 0;
    for (const auto& [pt, k] : points) n += k;
    for (const auto& b : blocks) n += b.multiplicity * b.factor.degree();
    return n;
}

namespace {

Surd rat(long n, long d = 1) { return Surd(make_rational(n, d)); }

SubcaseData make_1a() {
    SubcaseData s;
    s.id = SubcaseId::S1a;
    s.family = Family::F1a;
    s.degree = 2;
    s.D = Surd(2);
    s.p0 = Surd(1);
    s.R1 = Poly{Surd(0), Surd(2), Surd(-1)};  // t(2-t)
    s.side0.points = {{Surd(0), 1}, {Surd(2), 1}};
    s.side1.points = {{Surd(1), 2}};
    return s;
}

SubcaseData make_1b() {
    SubcaseData s;
    s.id = SubcaseId::S1b;
    s.family = Family::F1b;
    s.degree = 3;
    s.D = Surd(4);
    s.p0 = Surd(1);
    // (t-1)^2 (1 - t/4)
    s.R1 = Poly::linear_root(Surd(1)).pow(2) * Poly{Surd(1), rat(-1, 4)};
    s.side0.points = {{Surd(1), 2}, {Surd(4), 1}};
    s.side1.points = {{Surd(0), 1}, {Surd(3), 2}};
    return s;
}

SubcaseData make_1c() {
    SubcaseData s;
    s.id = SubcaseId::S1c;
    s.family = Family::F1a;
    s.degree = 4;
    s.D = Surd(2);
    s.p0 = Surd(1);
    // 4 [t(2-t) - 1/2]^2
    Poly inner = Poly{rat(-1, 2), Surd(2), Surd(-1)};
    s.R1 = Surd(4) * inner.pow(2);
    s.side0.blocks = {{(-inner).monic(), 2}};  // t^2 - 2t + 1/2
    s.side1.points = {{Surd(0), 1}, {Surd(1), 2}, {Surd(2), 1}};
    return s;
}

SubcaseData make_2a() {
    SubcaseData s;
    s.id = SubcaseId::S2a;
    s.family = Family::F2a;
    s.degree = 3;
    Surd w3 = Surd::root(3);
    s.D = rat(1, 2) + rat(1, 2) * w3;
    s.p0 = rat(1, 2) + rat(1, 6) * w3;
    s.R1 = Poly{Surd(1), -s.p0.inverse()}.pow(3);  // (1 - t/p0)^3
    s.side0.points = {{s.p0, 3}};
    s.side1.points = {{Surd(0), 1}, {Surd(1), 1}, {s.D, 1}};
    return s;
}

SubcaseData make_2b() {
    SubcaseData s;
    s.id = SubcaseId::S2b;
    s.family = Family::F2b;
    s.degree = 4;
    Surd w2 = Surd::root(2);
    s.D = rat(1, 2) + rat(5, 4) * w2;
    s.p0 = rat(1, 2) + rat(1, 4) * w2;
    Surd a1 = rat(1, 2) + w2;
    s.R1 = Poly{Surd(1), -s.D.inverse()} * Poly{Surd(1), -s.p0.inverse()}.pow(3);
    s.side0.points = {{s.D, 1}, {s.p0, 3}};
    s.side1.points = {{Surd(0), 1}, {Surd(1), 1}, {a1, 2}};
    return s;
}

SubcaseData make_2c() {
    SubcaseData s;
    s.id = SubcaseId::S2c;
    s.family = Family::F2c;
    s.degree = 5;
    Surd w15 = Surd::root(15);
    s.D = rat(1, 2) + rat(11, 90) * w15;
    s.p0 = rat(1, 2) + rat(1, 18) * w15;
    Surd A = rat(-2025, 64) * w15;
    s.R1 = A * Poly::t() * Poly::linear_root(Surd(1)) * Poly::linear_root(s.p0).pow(3);
    s.side0.points = {{Surd(0), 1}, {Surd(1), 1}, {s.p0, 3}};
    s.side1.points = {{s.D, 1}};
    // Double critical points a1, a2: roots of 5 t^2 - (2 p0 + 4) t + p0.
    Poly crit = Poly{s.p0 * rat(1, 5), -(Surd(2) * s.p0 + 4) * rat(1, 5), Surd(1)};
    s.side1.blocks = {{crit, 2}};
    return s;
}

SubcaseData make_2d() {
    SubcaseData s;
    s.id = SubcaseId::S2d;
    s.family = Family::F2a;
    s.degree = 6;
    Surd w3 = Surd::root(3);
    s.D = rat(1, 2) + rat(1, 2) * w3;
    s.p0 = rat(1, 2) + rat(1, 6) * w3;
    // 4 [(1 - t/p0)^3 - 1/2]^2
    Poly inner = Poly{Surd(1), -s.p0.inverse()}.pow(3) - Poly(rat(1, 2));
    s.R1 = Surd(4) * inner.pow(2);
    s.side0.blocks = {{inner.monic(), 2}};
    s.side1.points = {{Surd(0), 1}, {Surd(1), 1}, {s.D, 1}, {s.p0, 3}};
    return s;
}

} // namespace

const SubcaseData& canonical_subcase_data(SubcaseId id) {
    static const std::array<SubcaseData, 7> table = {
        make_1a(), make_1b(), make_1c(), make_2a(), make_2b(), make_2c(), make_2d()};
    return table[static_cast<std::size_t>(id)];
}

std::vector<SubcaseId> family_subcases(Family f) {
    switch (f) {
        case Family::F1a: return {SubcaseId::S1a, SubcaseId::S1c};
        case Family::F1b: return {SubcaseId::S1b};
        case Family::F2a: return {SubcaseId::S2a, SubcaseId::S2d};
        case Family::F2b: return {SubcaseId::S2b};
        case Family::F2c: return {SubcaseId::S2c};
    }
    return {};
}

const std::vector<SubcaseId>& all_subcases() {
    static const std::vector<SubcaseId> ids = {SubcaseId::S1a, SubcaseId::S1b, SubcaseId::S1c,
                                               SubcaseId::S2a, SubcaseId::S2b, SubcaseId::S2c,
                                               SubcaseId::S2d};
    return ids;
}

} // namespace heunred
