#include "qheis/json_io.hpp"

#include <stdexcept>

namespace qheis {

namespace {

Json poly_json(const Poly& x) {
    Json out = Json::array();
    for (std::size_t i = 0; i < x.coeffs().size(); ++i)
        if (x.coeffs()[i] != 0) out.push_back(Json::array({i, x.coeffs()[i].get_str()}));
    return out;
}

Poly poly_from(const Json& j) {
    if (!j.is_array()) throw std::invalid_argument("polynomial must be an array");
    std::vector<mpz_class> c;
    for (const auto& t : j) {
        if (!t.is_array() || t.size() != 2 || !t[0].is_number_unsigned() || !t[1].is_string())
            throw std::invalid_argument("polynomial term must be [exp, \"coeff\"]");
        const auto e = t[0].get<std::size_t>();
        if (c.size() <= e) c.resize(e + 1);
        try {
            c[e] += mpz_class(t[1].get<std::string>());
        } catch (const std::invalid_argument&) {
            throw std::invalid_argument("bad integer '" + t[1].get<std::string>() + "'");
        }
    }
    return Poly(std::move(c));
}

Json letter_json(Letter x) {
    if (x == Letter::A) return "A";
    if (x == Letter::B) return "B";
    return nullptr;
}

Letter letter_from(const Json& j) {
    if (j.is_null()) return Letter::None;
    if (j == "A") return Letter::A;
    if (j == "B") return Letter::B;
    throw std::invalid_argument("letter must be \"A\", \"B\" or null");
}

long int_field(const Json& t, const char* key) {
    if (!t.contains(key) || !t[key].is_number_integer()) throw std::invalid_argument(std::string("missing integer '") + key + "'");
    return t[key].get<long>();
}

const Json& terms_of(const Json& j) {
    if (!j.is_object() || !j.contains("terms") || !j["terms"].is_array())
        throw std::invalid_argument("element must be {\"terms\": [...]}");
    return j["terms"];
}

} // namespace

Json to_json(const RationalFunction& x) { return {{"num", poly_json(x.num())}, {"den", poly_json(x.den())}}; }

RationalFunction rf_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("num") || !j.contains("den"))
        throw std::invalid_argument("rational function must have num and den");
    Poly d = poly_from(j["den"]);
    if (d.is_zero()) throw std::invalid_argument("zero denominator");
    return RationalFunction(poly_from(j["num"]), d);
}

Json to_json(const HElement& x) {
    Json terms = Json::array();
    for (const auto& [m, c] : x) terms.push_back({{"k", m.k}, {"l", m.l}, {"letter", letter_json(m.letter)}, {"coeff", to_json(c)}});
    return {{"terms", terms}};
}

Json to_json(const PElement& x) {
    Json terms = Json::array();
    for (const auto& [m, c] : x)
        terms.push_back({{"h", m.h}, {"k", m.k}, {"l", m.l}, {"letter", letter_json(m.letter)}, {"coeff", to_json(c)}});
    return {{"terms", terms}};
}

HElement helement_from_json(const Json& j) {
    HElement out;
    for (const auto& t : terms_of(j)) {
        if (!t.contains("coeff")) throw std::invalid_argument("term without coeff");
        out.add(HMonomial(int_field(t, "k"), int_field(t, "l"), letter_from(t.value("letter", Json()))),
                rf_from_json(t["coeff"]));
    }
    return out;
}

PElement pelement_from_json(const Json& j) {
    PElement out;
    for (const auto& t : terms_of(j)) {
        if (!t.contains("coeff")) throw std::invalid_argument("term without coeff");
        out.add(PMonomial(int_field(t, "h"), int_field(t, "k"), int_field(t, "l"), letter_from(t.value("letter", Json()))),
                rf_from_json(t["coeff"]));
    }
    return out;
}

Json to_json(const ReductionTrace& t) {
    Json steps = Json::array();
    for (const auto& s : t.steps) {
        switch (s.op) {
        case ReductionStep::Op::Dcm:
            steps.push_back({{"op", "dcm"},
                             {"kind", s.map.kind == DcmKind::Theta ? "theta" : "eta"},
                             {"shift2", s.map.shift.twice()}});
            break;
        case ReductionStep::Op::LeftMul: steps.push_back({{"op", "lmul"}, {"elem", to_json(s.elem)}}); break;
        case ReductionStep::Op::Scale: steps.push_back({{"op", "scale"}, {"c", to_json(s.c)}}); break;
        }
    }
    return {{"steps", steps}, {"scalar", to_json(t.result_scalar)}, {"exponent", t.result_exponent}};
}

Json to_json(const LieExpr& e) {
    return std::visit(
        [](const auto& n) -> Json {
            using T = std::decay_t<decltype(n)>;
            if constexpr (std::is_same_v<T, LieNode::Gen>) {
                return {{"gen", gen_name(n.symbol)}};
            } else if constexpr (std::is_same_v<T, LieNode::Bracket>) {
                return {{"bracket", Json::array({to_json(n.left), to_json(n.right)})}};
            } else if constexpr (std::is_same_v<T, LieNode::Scale>) {
                return {{"scale", Json::array({to_json(n.c), to_json(n.arg)})}};
            } else if constexpr (std::is_same_v<T, LieNode::Sum>) {
                Json a = Json::array();
                for (const auto& t : n.terms) a.push_back(to_json(t));
                return {{"sum", a}};
            } else {
                return {{"adpow", {{"base", to_json(n.base)}, {"sign", n.sign}, {"k", n.power}, {"arg", to_json(n.arg)}}}};
            }
        },
        e->node);
}

LieExpr lie_from_json(const Json& j) {
    if (!j.is_object() || j.size() != 1) throw std::invalid_argument("Lie expression must have exactly one key");
    const auto& [key, v] = *j.items().begin();
    if (key == "gen") {
        for (GenSymbol s : {GenSymbol::K, GenSymbol::A, GenSymbol::B, GenSymbol::C, GenSymbol::K0, GenSymbol::K1,
                            GenSymbol::K2})
            if (v == gen_name(s)) return lie_gen(s);
        throw std::invalid_argument("unknown generator");
    }
    if (key == "bracket" && v.is_array() && v.size() == 2) return lie_bracket(lie_from_json(v[0]), lie_from_json(v[1]));
    if (key == "scale" && v.is_array() && v.size() == 2) return lie_scale(rf_from_json(v[0]), lie_from_json(v[1]));
    if (key == "sum" && v.is_array()) {
        std::vector<LieExpr> terms;
        for (const auto& t : v) terms.push_back(lie_from_json(t));
        return lie_sum(std::move(terms));
    }
    if (key == "adpow" && v.is_object())
        return lie_adpow(lie_from_json(v.at("base")), v.at("sign").get<int>(), v.at("k").get<long>(),
                         lie_from_json(v.at("arg")));
    throw std::invalid_argument("malformed Lie expression at '" + key + "'");
}

Json to_json(const RatMatrix& m) {
    Json out = Json::array();
    for (std::size_t i = 0; i < m.dim(); ++i)
        for (std::size_t j = 0; j < m.dim(); ++j) out.push_back(m.at(i, j).get_str());
    return out;
}

Json to_json(const AWRelationReport& r, const AWGeneratorsReport& g) {
    Json rel = Json::array(), gens = Json::array();
    for (const auto& x : r.relations) rel.push_back({{"name", x.name}, {"residual", to_json(x.residual)}, {"zero", x.zero}});
    for (const auto& x : g.expressions)
        gens.push_back({{"target", x.target}, {"expr", to_json(x.expr)}, {"verified", x.verified}});
    return {{"relations", rel}, {"generators", gens}};
}

} // namespace qheis
