#include "emc/json_io.hpp"

#include <stdexcept>
#include <string>

namespace emc::io {

json to_json(const forms::IntSymForm& f) { return json(f.gram); }

forms::IntSymForm form_from_json(const json& j) {
    return forms::IntSymForm(j.get<IntMatrix>());
}

json to_json(const invariants::SystemOfInvariants& s) {
    return json{{"b", s.b},
                {"b4", s.b4},
                {"delta", s.delta},
                {"gamma", s.gamma.gram},
                {"p", s.p}};
}

invariants::SystemOfInvariants system_from_json(const json& j) {
    invariants::SystemOfInvariants s;
    s.b = j.at("b").get<int>();
    s.b4 = j.at("b4").get<int>();
    s.delta = j.at("delta").get<std::vector<std::vector<std::vector<i64>>>>();
    s.gamma = forms::IntSymForm(j.at("gamma").get<IntMatrix>());
    s.p = j.at("p").get<std::vector<i64>>();
    return s;
}

json to_json(const freelie::LieElement& x) {
    json comps = json::object();
    for (const auto& [l, v] : x.components) comps[std::to_string(l)] = v;
    return json{{"b", x.b}, {"components", comps}};
}

freelie::LieElement lie_element_from_json(const json& j) {
    freelie::LieElement x;
    x.b = j.at("b").get<int>();
    if (x.b < 1) throw std::invalid_argument("lie element: b must be >= 1");
    for (const auto& [key, val] : j.at("components").items()) {
        int degree = std::stoi(key);
        if (degree < 1) throw std::invalid_argument("lie element: degree must be >= 1");
        auto coeffs = val.get<std::vector<i64>>();
        if (static_cast<long long>(coeffs.size()) != freelie::witt_dimension(x.b, degree))
            throw std::invalid_argument("lie element: component length differs from Witt dimension");
        x.components[degree] = std::move(coeffs);
    }
    x.normalize();
    return x;
}

json to_json(const links::FramedLinkS7& l) {
    json fr = json::array();
    for (const auto& f : l.framings) fr.push_back({{"k1", f.k1}, {"k2", f.k2}});
    return json{{"n", l.n}, {"lambda", l.lambda}, {"framings", fr}};
}

links::FramedLinkS7 framed_link_from_json(const json& j) {
    links::FramedLinkS7 l;
    l.n = j.at("n").get<int>();
    l.lambda = j.at("lambda").get<IntMatrix>();
    for (const auto& f : j.at("framings"))
        l.framings.push_back({f.at("k1").get<i64>(), f.at("k2").get<i64>()});
    l.validate();
    return l;
}

json to_json(const links::LinkTuple& t) {
    return json{{"b", t.b},
                {"b4", t.b4},
                {"l_diag", t.l_diag},
                {"l_off", t.l_off},
                {"lambda", t.lambda}};
}

links::LinkTuple link_tuple_from_json(const json& j) {
    links::LinkTuple t;
    t.b = j.at("b").get<int>();
    t.b4 = j.at("b4").get<int>();
    t.l_diag = j.at("l_diag").get<IntMatrix>();
    t.l_off = j.at("l_off").get<IntMatrix>();
    t.lambda = j.at("lambda").get<IntMatrix>();
    t.validate();
    return t;
}

namespace {

const char* verdict_str(invariants::Verdict v) {
    return v == invariants::Verdict::pass ? "pass" : "fail";
}

}  // namespace

json to_json(const invariants::RealizabilityReport& r) {
    json r1{{"pass", r.relation1.pass}};
    if (!r.relation1.pass) {
        r1["witness"] = {{"quadruple",
                          {r.relation1.quadruple[0] - 1, r.relation1.quadruple[1] - 1,
                           r.relation1.quadruple[2] - 1, r.relation1.quadruple[3] - 1}},
                         {"values", {r.relation1.value_a, r.relation1.value_b}}};
    }
    json r2{{"pass", r.relation2.pass}};
    if (!r.relation2.pass) {
        r2["index"] = r.relation2.index - 1;
        r2["lhs_mod4"] = r.relation2.lhs_mod4;
        r2["rhs_mod4"] = r.relation2.rhs_mod4;
    }
    json r3{{"pass", r.relation3.pass}, {"residue", r.relation3.residue}};
    return json{{"relation1", r1},
                {"relation2", r2},
                {"relation3", r3},
                {"signature", r.signature},
                {"pl_realizable", verdict_str(r.pl_realizable)},
                {"smooth_realizable", verdict_str(r.smooth_realizable)},
                {"scope_note", r.scope_note}};
}

json to_json(const invariants::IndeterminacyReport& r) {
    const char* c = r.fiber_case == invariants::FiberCase::b_zero       ? "b_zero"
                    : r.fiber_case == invariants::FiberCase::delta_zero ? "delta_zero"
                                                                        : "general";
    return json{{"case", c},
                {"pl_fiber", r.pl_fiber},
                {"smooth_fiber", r.smooth_fiber},
                {"finite", r.finite},
                {"rank", r.rank}};
}

}  // namespace emc::io
