#include "doctest.h"

#include "generators.hpp"
#include "qheis/heisenberg.hpp"
#include "qheis/proto.hpp"

using namespace qheis;
using namespace qheis::testing;
using RF = RationalFunction;

namespace {

const RF one(1);
const RF q = RF::q();

// Independent path: rewrite the concatenated letter word.
HElement rewrite_product(const HMonomial& x, const HMonomial& y) {
    return restrict_to_h(normalize_word({RF(1), word_of(x) + word_of(y)}));
}

} // namespace

TEST_CASE("h_mul examples") {
    CHECK(h_mul(h_gen_a(), h_gen_b()) == HElement::scalar(one / (one - q)) - HElement(HMonomial::c_power(1), q / (one - q)));
    const HElement x = HElement(HMonomial::b(2, 3), RF::p()) + HElement(HMonomial::a(1, 1));
    CHECK(h_mul(HElement::scalar(one), x) == x);
    CHECK(h_mul(x, HElement::scalar(one)) == x);
    CHECK(h_mul(HMonomial::a(2, 1), HMonomial::b(1, 1)) == rewrite_product(HMonomial::a(2, 1), HMonomial::b(1, 1)));
}

TEST_CASE("structure constants agree with word rewriting for all exponents <= 3") {
    const auto monos = all_hmonomials(3, 3);
    for (const auto& x : monos)
        for (const auto& y : monos) {
            INFO(x.to_string(), " * ", y.to_string());
            CHECK(h_mul(x, y) == rewrite_product(x, y));
        }
}

TEST_CASE("h_commutator") {
    CHECK(h_commutator(h_gen_a(), h_gen_b()) == h_gen_c());
    const HElement x = HElement(HMonomial::b(1, 2)) + HElement(HMonomial::a(0, 1), q);
    CHECK(h_commutator(x, x).is_zero());
    for (long m = 0; m <= 3; ++m)
        for (long n = 1; n <= 3; ++n)
            for (long r = 0; r <= 3; ++r)
                for (long s = 1; s <= 3; ++s) {
                    const HElement expect(HMonomial::a(m + r, n + s), RF::q_pow(n * r) * (one - RF::q_pow(m * s - n * r)));
                    CHECK(h_commutator(HElement(HMonomial::a(m, n)), HElement(HMonomial::a(r, s))) == expect);
                }
}

TEST_CASE("closed-form Lie structure constants") {
    CHECK(h_commutator_closed_form(HMonomial::a(0, 1), HMonomial::a(0, 1)).is_zero());
    // The same-letter cells agree everywhere; every other disagreement is listed.
    const auto monos = all_hmonomials(3, 3);
    std::size_t same_letter_mismatch = 0;
    for (const auto& u : monos)
        for (const auto& v : monos) {
            if (u.letter == v.letter || u.letter == Letter::None || v.letter == Letter::None)
                same_letter_mismatch +=
                    h_commutator_closed_form(u, v) == h_commutator(HElement(u), HElement(v)) ? 0 : 1;
        }
    CHECK(same_letter_mismatch == 0);

    const auto errata = closed_form_errata(3, 3);
    const auto again = closed_form_errata(3, 3);
    REQUIRE(errata.size() == again.size());
    for (std::size_t i = 0; i < errata.size(); ++i) {
        CHECK(errata[i].formula == again[i].formula);
        CHECK(errata[i].monomial == again[i].monomial);
        CHECK(errata[i].printed == again[i].printed);
    }
    for (const auto& e : errata) {
        CHECK(e.formula != "A-A");
        CHECK(e.formula != "B-B");
    }
    // Pairs absent from the errata list match exactly.
    for (long m = 0; m <= 3; ++m)
        for (long n = 1; n <= 3; ++n)
            for (long r = 0; r <= 3; ++r)
                for (long s = 1; s <= 3; ++s) {
                    bool listed = false;
                    for (const auto& e : errata)
                        listed |= e.m == m && e.n == n && e.r == r && e.s == s && e.formula != "A-A" &&
                                  e.formula != "B-B";
                    const HMonomial u = HMonomial::a(m, n), v = HMonomial::b(r, s);
                    if (!listed) CHECK(h_commutator_closed_form(u, v) == h_commutator(HElement(u), HElement(v)));
                }
}

TEST_CASE("grade and graded components") {
    CHECK(grade(HMonomial::c_power(3)) == 0);
    CHECK(grade(HMonomial::a(1, 2)) == -2);
    CHECK(grade(HMonomial::b(2, 1)) == 1);
    const auto comps = graded_components(h_gen_a() + h_gen_b());
    REQUIRE(comps.size() == 2);
    CHECK(comps.at(-1) == h_gen_a());
    CHECK(comps.at(1) == h_gen_b());
    CHECK(graded_components(HElement()).empty());

    const auto monos = all_hmonomials(3, 3);
    for (const auto& x : monos)
        for (const auto& y : monos) {
            const auto c = graded_components(h_mul(x, y));
            CHECK(c.size() <= 1);
            if (!c.empty()) CHECK(c.begin()->first == grade(x) + grade(y));
        }
}

TEST_CASE("gamma / Lie split") {
    const HElement a2(HMonomial::a(0, 2));
    CHECK(gamma_lie_split(a2).gamma == a2);
    CHECK(gamma_lie_split(a2).lie.is_zero());
    const HElement ca2(HMonomial::a(1, 2));
    CHECK(gamma_lie_split(ca2).gamma.is_zero());
    CHECK(gamma_lie_split(ca2).lie == ca2);
    const auto s = gamma_lie_split(HElement::scalar(one) + h_gen_c());
    CHECK(s.gamma == HElement::scalar(one));
    CHECK(s.lie == h_gen_c());
    CHECK(s.gamma + s.lie == HElement::scalar(one) + h_gen_c());

    // Closure: brackets of Lie-basis monomials stay in the Lie part.
    std::vector<HMonomial> lie_basis;
    for (const auto& m : all_hmonomials(3, 3))
        if (!(m.k == 0 && m.l != 1)) lie_basis.push_back(m);
    for (const auto& u : lie_basis)
        for (const auto& v : lie_basis)
            CHECK(gamma_lie_split(h_commutator(HElement(u), HElement(v))).gamma.is_zero());
}

TEST_CASE("associativity, unit, Jacobi, bilinearity on random elements") {
    std::mt19937_64 rng(7);
    for (int t = 0; t < 60; ++t) {
        const HElement x = random_helement(rng, 4, 3, 3);
        const HElement y = random_helement(rng, 4, 3, 3);
        const HElement z = random_helement(rng, 4, 3, 3);
        CHECK(h_mul(h_mul(x, y), z) == h_mul(x, h_mul(y, z)));
        CHECK(h_mul(HElement::scalar(one), x) == x);
        const HElement jac = h_commutator(x, h_commutator(y, z)) + h_commutator(y, h_commutator(z, x)) +
                             h_commutator(z, h_commutator(x, y));
        CHECK(jac.is_zero());
        const RF s = small_scalar(rng);
        CHECK(h_commutator(s * x + y, z) == s * h_commutator(x, z) + h_commutator(y, z));
    }
}

TEST_CASE("monomial validation") {
    CHECK_THROWS_AS(HMonomial(1, 0, Letter::A), std::invalid_argument);
    CHECK_THROWS_AS(HMonomial(1, 2, Letter::None), std::invalid_argument);
    CHECK(HMonomial::a(1, 2).to_string() == "C*A^2");
    CHECK(HMonomial::c_power(0).to_string() == "1");
}
