#include "doctest.h"

#include "qheis/askey_wilson.hpp"

using namespace qheis;
using RF = RationalFunction;

namespace {

const RF one(1);
const RF p = RF::p();

PElement mono(long h, long k, long l, Letter x) { return p_monomial(h, k, l, x); }

} // namespace

TEST_CASE("generators of the realisation") {
    const auto g = aw_generators();
    CHECK(g.K0 == p_gen_k());
    CHECK(g.K1 == p_gen_a() + p_gen_b());
    // K2 is a Lie element: [A - p^-1(1+p+p^2) B, K]
    const PElement br = p_commutator(p_gen_a() - (one + p + p * p) / p * p_gen_b(), p_gen_k());
    CHECK(g.K2 == br);
    CHECK(g.K2 == eval_lie(lie_gen(GenSymbol::K2)));
}

TEST_CASE("first relation holds, the other two do not") {
    const auto rep = verify_aw_relations();
    REQUIRE(rep.relations.size() == 3);
    CHECK(rep.relations[0].zero);
    CHECK_FALSE(rep.relations[1].zero);
    CHECK_FALSE(rep.relations[2].zero);
    CHECK_FALSE(rep.all_zero);

    // Independent recomputation of the second residual.
    const RF f = one - p - p.pow(3) + p.pow(4);
    CHECK(rep.relations[1].residual == (f / p) * mono(2, 0, 1, Letter::B) + (f / p.pow(3)) * mono(2, 0, 1, Letter::A));
}

TEST_CASE("half-power normalisation is consistent") {
    const auto rep = verify_aw_relations();
    REQUIRE(rep.half_power_variant.size() == 2);
    for (const auto& r : rep.half_power_variant) {
        INFO(r.name << ": " << r.residual.to_string());
        CHECK(r.zero);
    }
    const PElement K2h = p.inverse() * p_mul(p_gen_k(), p_gen_a() + p_gen_b()) - p_mul(p_gen_a() + p_gen_b(), p_gen_k());
    CHECK(K2h == ((one - p * p) / p) * mono(1, 0, 1, Letter::B));
}

TEST_CASE("residuals scale with the structure constants") {
    AWParams c = AWParams::standard();
    const auto base = verify_aw_relations(c);
    c.c1 = RF(3);
    const auto shifted = verify_aw_relations(c);
    CHECK(shifted.relations[1].residual == base.relations[1].residual - RF(3) * (p_gen_a() + p_gen_b()));
    CHECK(shifted.relations[0].residual == base.relations[0].residual);
}

TEST_CASE("recovering P generators from K0, K1, K2") {
    const auto rep = generators_from_aw();
    std::map<std::string, bool> ok;
    for (const auto& e : rep.expressions) ok[e.target] = e.verified;
    for (const char* t : {"K", "KA", "KB", "X", "Y", "Z"}) {
        INFO(t);
        CHECK(ok.at(t));
    }
    // The three quadratic identities are linearly dependent, so the KC combination collapses.
    CHECK(rep.xyz_dependency.is_zero());
    CHECK_FALSE(ok.at("KC"));
    CHECK_FALSE(ok.at("A"));
    CHECK_FALSE(ok.at("B"));
    CHECK_FALSE(rep.all_verified);
    for (const auto& e : rep.expressions) {
        if (e.target == "KC") CHECK(e.value.is_zero());
        CHECK(is_lie_polynomial(e.value).lie);
    }
}

TEST_CASE("equality with P is not confirmed") {
    const auto rep = aw_equals_p_report(1);
    CHECK(rep.bound == 1);
    CHECK(rep.checks.size() == 12);
    // Only K itself survives the substitution.
    CHECK(rep.confirmed == 1);
    for (const auto& c : rep.checks)
        if (c.confirmed) CHECK(c.monomial == PMonomial(1, 0, 0, Letter::None));
    CHECK_THROWS_AS(aw_equals_p_report(0), std::invalid_argument);
}
