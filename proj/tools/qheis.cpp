// qheis: command-line front end.
// Exit codes: 0 ok, 1 usage or parse error, 2 math error, 3 verification failed.

#include "qheis/json_io.hpp"
#include "qheis/parser.hpp"

#include "CLI11.hpp"

#include <iostream>

using namespace qheis;

namespace {

constexpr int kOk = 0, kUsage = 1, kMath = 2, kFailed = 3;

struct Options {
    bool json = false;
    bool heisenberg = false;
    std::string p = "2/3";
    long dim = 32;
    long bound = 2;
    std::vector<std::string> args;
};

mpq_class parse_p(const std::string& s) {
    mpq_class v;
    if (v.set_str(s, 10) != 0) throw std::invalid_argument("bad --p value '" + s + "'");
    v.canonicalize();
    return v;
}

void print(const Options& o, const Json& j, const std::string& text) {
    if (o.json) std::cout << j.dump() << '\n';
    else std::cout << text << '\n';
}

int cmd_normalize(const Options& o) {
    auto one = [&](const std::string& line) {
        const PElement x = evaluate(parse(line));
        print(o, to_json(x), x.to_string());
    };
    if (!o.args.empty() && o.args[0] != "-") {
        one(o.args[0]);
        return kOk;
    }
    std::string line;
    while (std::getline(std::cin, line))
        if (line.find_first_not_of(" \t\r") != std::string::npos) one(line);
    return kOk;
}

int cmd_commute(const Options& o) {
    const PElement c = p_commutator(evaluate(parse(o.args.at(0))), evaluate(parse(o.args.at(1))));
    print(o, to_json(c), c.to_string());
    return kOk;
}

std::string step_text(const ReductionStep& s) {
    switch (s.op) {
    case ReductionStep::Op::Dcm: return s.map.to_string();
    case ReductionStep::Op::LeftMul: return "lmul " + s.elem.to_string();
    case ReductionStep::Op::Scale: return "scale " + s.c.to_string();
    }
    return {};
}

int cmd_reduce(const Options& o) {
    const ReductionTrace t = reduce_P_to_C_power(evaluate(parse(o.args.at(0))));
    std::string text;
    for (const auto& s : t.steps) text += step_text(s) + '\n';
    text += PElement(PMonomial(0, t.result_exponent, 0, Letter::None), t.result_scalar).to_string();
    print(o, to_json(t), text);
    return kOk;
}

int cmd_lie_check(const Options& o) {
    const PElement x = evaluate(parse(o.args.at(0)));
    const LieSplit s = is_lie_polynomial(x);
    if (!o.heisenberg) {
        print(o, {{"lie", s.lie}, {"constant_term", to_json(s.constant_term)}},
              std::string("lie: ") + (s.lie ? "true" : "false") + "\nconstant_term: " + s.constant_term.to_string());
        return kOk;
    }
    Json j = {{"lie_in_P", s.lie}, {"lie_in_H", false}, {"in_H", is_in_h(x)}};
    std::string text = std::string("lie_in_P: ") + (s.lie ? "true" : "false");
    if (is_in_h(x)) {
        const HElement h = restrict_to_h(x);
        const bool in = h_lie_membership(h);
        const GammaLieSplit g = gamma_lie_split(h);
        j["lie_in_H"] = in;
        j["gamma"] = to_json(g.gamma);
        j["lie_part"] = to_json(g.lie);
        text += std::string("\nlie_in_H: ") + (in ? "true" : "false") + "\ngamma: " + g.gamma.to_string() +
                "\nlie_part: " + g.lie.to_string();
    } else {
        text += "\nlie_in_H: false (not an element of H)";
    }
    print(o, j, text);
    return kOk;
}

int cmd_witness(const Options& o) {
    const WitnessRecord w = witness_for_basis(parse_monomial(o.args.at(0)));
    Json j = {{"target", w.target.to_string()}, {"expr", to_json(w.expr)}, {"verified", w.verified},
              {"formula", w.formula}, {"printed_ok", w.printed_ok}};
    if (!w.note.empty()) j["note"] = w.note;
    print(o, j, lie_to_string(w.expr));
    return w.verified ? kOk : kFailed;
}

int cmd_verify_aw3(const Options& o) {
    const AWRelationReport r = verify_aw_relations();
    const AWGeneratorsReport g = generators_from_aw();
    std::string text;
    for (const auto& x : r.relations) text += x.name + ": " + (x.zero ? "0" : x.residual.to_string()) + '\n';
    for (const auto& x : g.expressions) text += x.target + ": " + (x.verified ? "verified" : "FAILED -> " + x.value.to_string()) + '\n';
    text.pop_back();
    print(o, to_json(r, g), text);
    return r.all_zero && g.all_verified ? kOk : kFailed;
}

int cmd_oracle_check(const Options& o) {
    const auto [lhs, rhs] = parse_equation(o.args.at(0));
    const TruncatedRep r = build_rep(o.dim, parse_p(o.p));
    const RepValue x = rep_of_source(lhs, r), y = rep_of_source(rhs, r);
    const bool eq = oracle_equal(x, y, r);
    const bool sym = evaluate(lhs) == evaluate(rhs);
    const std::size_t cols = r.protected_columns({std::max(x.budget.ladder_degree, y.budget.ladder_degree)});
    print(o, {{"equal", eq}, {"symbolic_equal", sym}, {"protected_columns", cols}}, eq ? "true" : "false");
    return eq ? kOk : kFailed;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact computation in the q-deformed Heisenberg algebra and its extension by K"};
    app.require_subcommand(1);
    Options o;
    app.add_flag("--json", o.json, "JSON output");

    struct Verb {
        const char* name;
        const char* help;
        int nargs;
        int (*run)(const Options&);
    };
    const Verb verbs[] = {
        {"normalize", "normal form of EXPR (stdin, one per line, when omitted)", -1, cmd_normalize},
        {"commute", "normal form of [X,Y]", 2, cmd_commute},
        {"reduce", "reduce EXPR to a multiple of C^N", 1, cmd_reduce},
        {"lie-check", "whether EXPR is a Lie polynomial", 1, cmd_lie_check},
        {"witness", "Lie witness for a basis monomial such as K^2*A^3", 1, cmd_witness},
        {"verify-aw3", "check the AW(3) relations and generator expressions", 0, cmd_verify_aw3},
        {"oracle-check", "compare \"X == Y\" in the truncated matrix representation", 1, cmd_oracle_check},
    };
    std::map<CLI::App*, const Verb*> by_sub;
    for (const Verb& v : verbs) {
        CLI::App* sub = app.add_subcommand(v.name, v.help);
        sub->add_flag("--json", o.json, "JSON output");
        if (v.nargs != 0) {
            auto* opt = sub->add_option("args", o.args, "expressions");
            if (v.nargs > 0) opt->expected(v.nargs)->required();
        }
        if (std::string(v.name) == "lie-check") sub->add_flag("--heisenberg", o.heisenberg, "also test membership in the Lie algebra generated by A, B");
        if (std::string(v.name) == "oracle-check") {
            sub->add_option("--p", o.p, "p as NUM/DEN in (0,1)")->capture_default_str();
            sub->add_option("--dim", o.dim, "truncation dimension")->capture_default_str();
        }
        if (std::string(v.name) == "verify-aw3" || std::string(v.name) == "witness")
            sub->add_option("--bound", o.bound, "exponent bound")->capture_default_str();
        by_sub[sub] = &v;
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? kOk : kUsage;
    }

    try {
        for (const auto& [sub, v] : by_sub)
            if (sub->parsed()) return v->run(o);
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << '\n';
        return kUsage;
    } catch (const MathError& e) {
        std::cerr << "math error: " << e.what() << '\n';
        return kMath;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const std::out_of_range& e) {
        std::cerr << "error: missing argument\n";
        return kUsage;
    }
    return kUsage;
}
