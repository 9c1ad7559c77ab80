#include "qheis/askey_wilson.hpp"

namespace qheis {

using RF = RationalFunction;

namespace {

const RF one(1);

PElement unit() { return PElement::scalar(one); }

AWRelation relation(std::string name, PElement residual) {
    const bool z = residual.is_zero();
    return {std::move(name), std::move(residual), z};
}

} // namespace

AWParams AWParams::standard() {
    const RF p2 = RF::q();
    return {RF(0), (one - p2) / p2, RF(0), RF(0), RF(0)};
}

AWGenerators aw_generators() {
    const RF p = RF::p();
    const PElement K0 = p_gen_k();
    const PElement K1 = p_gen_a() + p_gen_b();
    const PElement K2 =
        ((one - p) / p) * p_monomial(1, 0, 1, Letter::A) + ((one - p.pow(3)) / p) * p_monomial(1, 0, 1, Letter::B);
    return {K0, K1, K2};
}

AWRelationReport verify_aw_relations(const AWParams& c) {
    const RF p = RF::p(), pi = p.inverse();
    const auto [K0, K1, K2] = aw_generators();
    AWRelationReport rep;
    rep.relations.push_back(relation("AW1", pi * p_mul(K0, K1) - p * p_mul(K1, K0) - K2));
    rep.relations.push_back(
        relation("AW2", pi * p_mul(K2, K0) - p * p_mul(K0, K2) - (c.b * K0 + c.c1 * K1 + c.d1 * unit())));
    rep.relations.push_back(
        relation("AW3", pi * p_mul(K1, K2) - p * p_mul(K2, K1) - (c.b * K1 + c.c0 * K0 + c.d0 * unit())));
    rep.all_zero = true;
    for (const auto& r : rep.relations) rep.all_zero = rep.all_zero && r.zero;

    // With t = e^w = p^(-1/2) and K2 = t^-1 K2': t X Y - t^-1 Y X = t^-1 (p^-1 X Y - Y X).
    const PElement K2h = pi * p_mul(K0, K1) - p_mul(K1, K0);
    rep.half_power_variant.push_back(relation("AW2", p_mul(K2h, K0) - p * p_mul(K0, K2h) -
                                                         (c.b * K0 + c.c1 * K1 + c.d1 * unit())));
    rep.half_power_variant.push_back(relation("AW3", p_mul(K1, K2h) - p * p_mul(K2h, K1) -
                                                         (c.b * K1 + c.c0 * K0 + c.d0 * unit())));
    return rep;
}

namespace {

struct AWExprs {
    LieExpr K, KA, KB, X, Y, Z, KC, A, B;
};

AWExprs build_aw_exprs() {
    const RF p = RF::p(), p2 = RF::q(), s = one + p + p2;
    const LieExpr K0 = lie_gen(GenSymbol::K0), K1 = lie_gen(GenSymbol::K1), K2 = lie_gen(GenSymbol::K2);
    const RF d = ((one - p) * (one + p).pow(2)).inverse();
    AWExprs e;
    e.K = K0;
    e.KA = lie_scale(d, lie_sum({lie_scale(p2, K2), lie_scale(p * s, lie_bracket(K1, K0))}));
    e.KB = lie_scale(d, lie_sum({lie_scale(p, K2), lie_scale(p, lie_bracket(K0, K1))}));
    e.X = lie_sum({lie_scale(p / (one - p), lie_bracket(K1, e.KA)), lie_scale(p / (one - p2), K0)});
    e.Y = lie_sum({lie_scale((one - p).inverse(), lie_bracket(e.KB, K1)), lie_scale((p * (one - p2)).inverse(), K0)});
    e.Z = lie_sum({lie_scale(p2 / (one - p).pow(2), lie_bracket(K1, K2)), lie_scale(-(one + p2) / (one - p2), K0)});
    e.KC = lie_sum({lie_scale((one + p) / p, e.X), lie_scale(-(one + p) * s, e.Y), lie_scale(-(one + p) / p, e.Z)});
    e.A = lie_scale((one - p).inverse(), lie_bracket(e.KC, e.KA));
    e.B = lie_scale(p / (one - p), lie_bracket(e.KB, e.KC));
    return e;
}

} // namespace

AWGeneratorsReport generators_from_aw() {
    const RF p = RF::p(), p2 = RF::q();
    const AWExprs e = build_aw_exprs();
    const PElement KA = p_monomial(1, 0, 1, Letter::A), KB = p_monomial(1, 0, 1, Letter::B);
    const PElement KA2 = p_monomial(1, 0, 2, Letter::A), KB2 = p_monomial(1, 0, 2, Letter::B);
    const PElement KC = p_monomial(1, 1, 0, Letter::None);
    const PElement X = KA2 - (p2 / (one - p2)) * KC;
    const PElement Y = KB2 - (one - p2).inverse() * KC;
    const PElement Z = KA2 - p * (one + p + p2) * KB2 + (p * (one + p2) / (one - p2)) * KC;

    AWGeneratorsReport rep;
    auto add = [&](std::string name, const LieExpr& x, PElement want) {
        PElement v = eval_lie(x);
        const bool ok = v == want;
        rep.expressions.push_back({std::move(name), x, std::move(v), std::move(want), ok});
    };
    add("K", e.K, p_gen_k());
    add("KA", e.KA, KA);
    add("KB", e.KB, KB);
    add("X", e.X, X);
    add("Y", e.Y, Y);
    add("Z", e.Z, Z);
    add("KC", e.KC, KC);
    add("A", e.A, p_gen_a());
    add("B", e.B, p_gen_b());
    rep.all_verified = true;
    for (const auto& x : rep.expressions) rep.all_verified = rep.all_verified && x.verified;
    rep.xyz_dependency = eval_lie(e.X) - eval_lie(e.Z) - p * (one + p + p2) * eval_lie(e.Y);
    return rep;
}

AWEqualsPReport aw_equals_p_report(long bound) {
    if (bound < 1) throw std::invalid_argument("bound must be positive");
    const AWExprs e = build_aw_exprs();
    const std::map<GenSymbol, LieExpr> images{
        {GenSymbol::K, e.K}, {GenSymbol::A, e.A}, {GenSymbol::B, e.B}, {GenSymbol::C, lie_bracket(e.A, e.B)}};
    AWEqualsPReport rep;
    rep.bound = bound;
    for (long h = 0; h <= bound; ++h)
        for (long k = 0; k <= bound; ++k) {
            if (k >= 1 && h > 1) continue;
            for (long l = 0; l <= bound; ++l)
                for (Letter x : {Letter::None, Letter::A, Letter::B}) {
                    if ((x == Letter::None) != (l == 0)) continue;
                    const PMonomial m(h, k, l, x);
                    AWMonomialCheck c{m, nullptr, {}, false};
                    if (m.is_one()) {
                        const PElement kv = eval_lie(e.K);
                        c.value = p_mul(p_mul(kv, kv), eval_lie(images.at(GenSymbol::C)));
                    } else {
                        c.expr = lie_substitute(witness_for_basis(m).expr, images);
                        c.value = eval_lie(c.expr);
                    }
                    c.confirmed = c.value == PElement(m);
                    rep.confirmed += c.confirmed ? 1 : 0;
                    rep.checks.push_back(std::move(c));
                }
        }
    return rep;
}

} // namespace qheis
