// Acceptance run: one PASS/FAIL line per criterion.
// Exit status is 0 when the set of failing criteria equals the --expect-fail set.

#include "generators.hpp"
#include "oracles.hpp"
#include "qheis/askey_wilson.hpp"
#include "qheis/dcm.hpp"
#include "qheis/oracle.hpp"

#include "CLI11.hpp"

#include <chrono>
#include <functional>
#include <iomanip>
#include <iostream>
#include <set>
#include <sstream>
#include <tuple>

using namespace qheis;
using namespace qheis::testing;

namespace {

const RF one(1);
const RF p = RF::p();
const RF q = RF::q();

struct Outcome {
    bool pass;
    std::string detail;
};

struct Criterion {
    int id;
    std::string name;
    double limit_s;
    std::function<Outcome()> run;
};

PElement mono(long h, long k, long l, Letter x) { return p_monomial(h, k, l, x); }

Outcome defining_relations() {
    const PElement I = PElement::scalar(one), A = p_gen_a(), B = p_gen_b(), C = p_gen_c(), K = p_gen_k();
    const std::pair<const char*, PElement> rel[] = {
        {"AB", (one - q).inverse() * (I - q * C)},
        {"BA", (one - q).inverse() * (I - C)},
        {"AC", q * mono(0, 1, 1, Letter::A)},
        {"BC", q.inverse() * mono(0, 1, 1, Letter::B)},
        {"AK", p.inverse() * mono(1, 0, 1, Letter::A)},
        {"BK", p * mono(1, 0, 1, Letter::B)},
        {"CK", mono(1, 1, 0, Letter::None)},
        {"KKC", I},
    };
    int zero = 0;
    for (const auto& [w, rhs] : rel) {
        const GeneratorWord gw{one, w};
        const bool both = (normalize_word(gw) - rhs).is_zero() && (word_product(gw) - rhs).is_zero() &&
                          (normalize_word(gw, RewriteStrategy::Rightmost) - rhs).is_zero();
        zero += both;
    }
    // C is [A,B] in both paths
    const bool c_ok = p_commutator(A, B) == C && p_mul(K, C) == p_mul(C, K);
    return {zero == 8 && c_ok, std::to_string(zero) + "/8 zero residuals"};
}

Outcome structure_constants() {
    const auto errata = closed_form_errata(3, 3);
    const auto again = closed_form_errata(3, 3);
    bool stable = errata.size() == again.size();
    for (std::size_t i = 0; i < errata.size(); ++i) {
        const auto& e = errata[i];
        if (stable) {
            const auto& f = again[i];
            stable = e.formula == f.formula && e.m == f.m && e.n == f.n && e.r == f.r && e.s == f.s && e.i == f.i &&
                     e.monomial == f.monomial && e.printed == f.printed && e.actual == f.actual;
        }
    }
    // Recompute the mismatches independently: closed form against the product difference.
    std::size_t mismatched_coeffs = 0, pairs = 0;
    bool exact = true;
    // (B,A) is the negative of (A,B), so only three letter cells are listed.
    const std::tuple<Letter, Letter, std::string> cells[] = {
        {Letter::A, Letter::A, "A-A"}, {Letter::A, Letter::B, "A-B"}, {Letter::B, Letter::B, "B-B"}};
    for (const auto& [x, y, cell] : cells)
        for (long m = 0; m <= 3; ++m)
            for (long r = 0; r <= 3; ++r)
                for (long n = 1; n <= 3; ++n)
                    for (long s = 1; s <= 3; ++s) {
                        const HMonomial u(m, n, x), v(r, s, y);
                        const HElement prod = h_mul(HElement(u), HElement(v)) - h_mul(HElement(v), HElement(u));
                        const HElement diff = h_commutator_closed_form(u, v) - prod;
                        ++pairs;
                        for (const auto& [mo, c] : diff) {
                            ++mismatched_coeffs;
                            bool found = false;
                            for (const auto& e : errata)
                                if (e.formula.rfind(cell, 0) == 0 && e.m == m && e.n == n && e.r == r && e.s == s &&
                                    e.monomial == mo && e.actual == prod.coeff(mo))
                                    found = true;
                            exact = exact && found;
                        }
                    }
    exact = exact && mismatched_coeffs == errata.size();
    std::ostringstream d;
    d << pairs << " pairs, " << errata.size() << " reported errata (" << mismatched_coeffs
      << " mismatching coefficients), " << (stable ? "deterministic" : "NOT deterministic")
      << (exact ? ", every mismatch reported" : ", unreported mismatch");
    return {stable && exact, d.str()};
}

Outcome dcm_identities() {
    long checked = 0, bad = 0;
    auto expect = [&](bool ok) {
        ++checked;
        bad += !ok;
    };
    for (const auto& m : all_hmonomials(4, 4))
        for (const auto n : half_shifts(4)) {
            const HElement x(m);
            expect(apply_dcm(DcmMap::theta(n), x) == theta_closed(m, n.q_power()));
            expect(apply_dcm(DcmMap::eta(n), x) == eta_closed(m, n.q_power()));
            const PElement kx = p_mul(p_gen_k(), embed_h(x));
            expect(apply_dcm(DcmMap::theta(n), kx) ==
                   p.inverse() * p_mul(p_gen_k(), embed_h(apply_dcm(DcmMap::theta(n + kHalf), x))));
            expect(apply_dcm(DcmMap::eta(n), kx) ==
                   p * p_mul(p_gen_k(), embed_h(apply_dcm(DcmMap::eta(n - kHalf), x))));
        }
    for (long k = 0; k <= 4; ++k) {
        const HElement ck(HMonomial::c_power(k));
        expect(apply_dcm(DcmMap::theta(k), ck).is_zero());
        expect(apply_dcm(DcmMap::eta(-k), ck).is_zero());
        expect(apply_dcm(DcmMap::theta(k + 1), HElement(HMonomial::b(k, 1))) == RF::q_pow(k) * ck);
        expect(apply_dcm(DcmMap::eta(-k), HElement(HMonomial::a(k, 1))) ==
               HElement(HMonomial::c_power(k + 1), -RF::q_pow(-k)));
        for (long l = 1; l <= 4; ++l) {
            const HElement d = h_mul(HElement(HMonomial::c_power(k + 1)), q_derivative(HElement(HMonomial::b(0, l))));
            expect(apply_dcm(DcmMap::theta(k), HElement(HMonomial::b(k, l))) == RF::q_pow(k - l + 1) * d);
            HElement x(HMonomial::b(k, l));
            for (long n = 1; n <= l; ++n) {
                x = apply_dcm(DcmMap::theta(k + n - 1), x);
                expect(dcm_power_formula(k, n, l) == x);
            }
        }
    }
    return {bad == 0, std::to_string(checked - bad) + "/" + std::to_string(checked) + " identities exact"};
}

bool integer_shifts(const ReductionTrace& t) {
    for (const auto& s : t.steps)
        if (s.op == ReductionStep::Op::Dcm && !s.map.shift.is_integer()) return false;
    return true;
}

Outcome reduction_h() {
    std::mt19937_64 rng(20240601);
    int ok = 0;
    for (int t = 0; t < 200; ++t) {
        const HElement x = random_nonzero_helement(rng, 5, 4, 4);
        try {
            const ReductionTrace tr = reduce_H_to_C_power(x);
            const PElement y = replay_trace(tr, embed_h(x));
            ok += !tr.result_scalar.is_zero() && tr.result_exponent >= 0 &&
                  y == tr.result_scalar * mono(0, tr.result_exponent, 0, Letter::None) && integer_shifts(tr);
        } catch (const std::exception&) {
        }
    }
    return {ok == 200, std::to_string(ok) + "/200 reduced to a*C^N with exact replay and integer shifts"};
}

Outcome reduction_p() {
    std::mt19937_64 rng(20240602);
    int ok = 0;
    for (int t = 0; t < 100; ++t) {
        const PElement x = random_nonzero_pelement(rng, 5, 3, 3, 3);
        try {
            const ReductionTrace tr = reduce_P_to_C_power(x);
            ok += !tr.result_scalar.is_zero() &&
                  replay_trace(tr, x) == tr.result_scalar * mono(0, tr.result_exponent, 0, Letter::None);
        } catch (const std::exception&) {
        }
    }
    return {ok == 100, std::to_string(ok) + "/100 reduced to a nonzero multiple of C^M"};
}

Outcome lie_witnesses() {
    const auto rep = verify_all_witnesses(3);
    std::size_t ok = 0;
    for (const auto& r : rep.records) {
        const PElement v = eval_lie(r.expr);
        ok += r.verified && v == PElement(r.target) && is_lie_polynomial(v).constant_term.is_zero();
    }
    const std::size_t expected = all_pmonomials(3, 3, 3).size() - 1;
    bool h_ok = true;
    for (const auto& m : all_hmonomials(3, 3)) {
        if (m.is_one()) continue;
        const bool in = h_lie_membership(restrict_to_h(eval_lie(witness_for_basis(PMonomial::from_h(m)).expr)));
        h_ok = h_ok && in == (m.k >= 1 || m.l == 1);
    }
    h_ok = h_ok && !h_lie_membership(HElement::scalar(one));
    std::ostringstream d;
    d << ok << "/" << expected << " witnesses verified, " << rep.corrected.size()
      << " use corrected identities, H-membership " << (h_ok ? "as expected" : "WRONG");
    return {ok == expected && rep.records.size() == expected && rep.failures.empty() && h_ok, d.str()};
}

Outcome askey_wilson() {
    const auto rel = verify_aw_relations();
    const auto gen = generators_from_aw();
    const auto eq = aw_equals_p_report(2);
    std::ostringstream d;
    int zero = 0;
    for (const auto& r : rel.relations) zero += r.zero;
    d << zero << "/3 relation residuals zero; generators verified:";
    for (const auto& e : gen.expressions) d << ' ' << e.target << (e.verified ? "+" : "-");
    d << "; " << eq.confirmed << "/" << eq.checks.size() << " monomials confirmed at bound 2";
    return {rel.all_zero && gen.all_verified && eq.confirmed == eq.checks.size(), d.str()};
}

Outcome oracle_soundness() {
    std::mt19937_64 rng(20240603);
    std::vector<std::string> words;
    for (int t = 0; t < 500; ++t) words.push_back(random_letters(rng, 8));
    std::vector<bool> v1, v2;
    for (const mpq_class& pv : {mpq_class(2, 3), mpq_class(3, 5)}) {
        const auto r = build_rep(32, pv);
        auto& v = pv == mpq_class(2, 3) ? v1 : v2;
        for (const auto& w : words) {
            const GeneratorWord gw{one, w};
            v.push_back(oracle_equal(rep_of_word(gw, r), rep_of_element(normalize_word(gw), r), r));
        }
    }
    const auto n = std::count(v1.begin(), v1.end(), true);
    return {n == 500 && v1 == v2, std::to_string(n) + "/500 words agree at p=2/3, verdicts " +
                                      (v1 == v2 ? "identical" : "differ") + " at p=3/5"};
}

Outcome faithfulness() {
    const auto r = build_rep(32, mpq_class(2, 3));
    const auto basis = all_pmonomials(2, 2, 2);
    std::vector<RepValue> img;
    for (const auto& m : basis) img.push_back(rep_of_element(PElement(m), r));
    std::size_t collisions = 0;
    for (std::size_t i = 0; i < img.size(); ++i)
        for (std::size_t j = i + 1; j < img.size(); ++j) collisions += oracle_equal(img[i], img[j], r);
    bool c_ok = true;
    for (long n = 1; n <= 8; ++n) {
        const auto c = rep_of_element(mono(0, n, 0, Letter::None), r).matrix;
        c_ok = c_ok && !c.column_zero(0) && !(c == RatMatrix(32));
    }
    std::ostringstream d;
    d << basis.size() << " basis monomials, " << collisions << " collisions; C^n nonzero for n<=8: "
      << (c_ok ? "yes" : "NO");
    return {collisions == 0 && c_ok, d.str()};
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"acceptance criteria"};
    std::vector<int> expect_fail;
    app.add_option("--expect-fail", expect_fail, "criteria that are known to fail");
    CLI11_PARSE(app, argc, argv);

    const std::vector<Criterion> criteria = {
        {1, "defining relations", 1, defining_relations},
        {2, "structure constants", 30, structure_constants},
        {3, "deformed commutator identities", 30, dcm_identities},
        {4, "reduction in H", 60, reduction_h},
        {5, "reduction in P", 60, reduction_p},
        {6, "Lie witnesses", 60, lie_witnesses},
        {7, "AW(3) realisation", 30, askey_wilson},
        {8, "oracle soundness", 120, oracle_soundness},
        {9, "faithfulness evidence", 10, faithfulness},
    };
    std::set<int> failed;
    for (const auto& c : criteria) {
        const auto t0 = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = c.run();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        const double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        const bool pass = o.pass && s < c.limit_s;
        if (!pass) failed.insert(c.id);
        std::cout << (pass ? "PASS " : "FAIL ") << c.id << ' ' << c.name << ": " << o.detail << " (" << std::fixed
                  << std::setprecision(2) << s << " s, limit " << std::setprecision(0) << c.limit_s << " s)\n";
    }
    const std::set<int> expected(expect_fail.begin(), expect_fail.end());
    std::cout << failed.size() << " of " << criteria.size() << " criteria failed";
    if (!expected.empty()) std::cout << (failed == expected ? " (as expected)" : " (unexpected)");
    std::cout << '\n';
    return failed == expected ? 0 : 1;
}
