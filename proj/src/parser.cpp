#include "qheis/parser.hpp"

#include "qheis/liewitness.hpp"

#include <cctype>

namespace qheis {

ParseError::ParseError(const std::string& msg, std::size_t offset)
    : std::runtime_error(msg + " at offset " + std::to_string(offset)), offset_(offset) {}

namespace {

using Kind = SourceNode::Kind;

Source node(Kind k, std::size_t at, std::vector<Source> args = {}) {
    auto n = std::make_shared<SourceNode>();
    n->kind = k;
    n->offset = at;
    n->args = std::move(args);
    return n;
}

class Parser {
public:
    explicit Parser(const std::string& t) : s_(t) {}

    Source whole() {
        Source e = expr();
        skip();
        if (i_ < s_.size()) throw ParseError(std::string("unexpected '") + s_[i_] + "'", i_);
        return e;
    }

private:
    void skip() {
        while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
    }
    bool eat(char c) {
        skip();
        if (i_ < s_.size() && s_[i_] == c) {
            ++i_;
            return true;
        }
        return false;
    }
    void expect(char c) {
        if (!eat(c)) throw ParseError(std::string("expected '") + c + "'", i_);
    }
    bool peek(char c) {
        skip();
        return i_ < s_.size() && s_[i_] == c;
    }

    Source expr() {
        skip();
        const std::size_t at = i_;
        Source lhs = eat('-') ? node(Kind::Neg, at, {term()}) : term();
        for (;;) {
            skip();
            const std::size_t op = i_;
            // "==" belongs to the caller.
            if (peek('+')) {
                ++i_;
                lhs = node(Kind::Add, op, {lhs, term()});
            } else if (peek('-')) {
                ++i_;
                lhs = node(Kind::Sub, op, {lhs, term()});
            } else {
                return lhs;
            }
        }
    }

    Source term() {
        Source lhs = factor();
        for (;;) {
            skip();
            const std::size_t op = i_;
            if (eat('*')) lhs = node(Kind::Mul, op, {lhs, factor()});
            else if (eat('/')) lhs = node(Kind::Div, op, {lhs, factor()});
            else return lhs;
        }
    }

    Source factor() {
        Source base = atom();
        skip();
        const std::size_t op = i_;
        if (!eat('^')) return base;
        skip();
        const bool neg = eat('-');
        skip();
        const std::size_t at = i_;
        const std::string digits = integer();
        if (digits.empty()) throw ParseError("expected integer exponent", at);
        auto n = std::make_shared<SourceNode>(*node(Kind::Pow, op, {base}));
        try {
            n->exponent = std::stol(digits);
        } catch (const std::out_of_range&) {
            throw ParseError("exponent out of range", at);
        }
        if (neg) n->exponent = -n->exponent;
        return n;
    }

    std::string integer() {
        const std::size_t b = i_;
        while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) ++i_;
        return s_.substr(b, i_ - b);
    }

    Source atom() {
        skip();
        const std::size_t at = i_;
        if (i_ >= s_.size()) throw ParseError("unexpected end of input", at);
        const char c = s_[i_];
        if (c == '(') {
            ++i_;
            Source e = expr();
            expect(')');
            return e;
        }
        if (c == '[') {
            ++i_;
            Source x = expr();
            expect(',');
            Source y = expr();
            expect(']');
            return node(Kind::Commutator, at, {x, y});
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            auto n = std::make_shared<SourceNode>(*node(Kind::Scalar, at));
            n->c = RationalFunction(mpq_class(mpz_class(integer())));
            return n;
        }
        if (std::isalpha(static_cast<unsigned char>(c))) {
            const std::size_t b = i_;
            while (i_ < s_.size() && std::isalnum(static_cast<unsigned char>(s_[i_]))) ++i_;
            const std::string id = s_.substr(b, i_ - b);
            if (id == "p" || id == "q") {
                auto n = std::make_shared<SourceNode>(*node(Kind::Scalar, at));
                n->c = id == "p" ? RationalFunction::p() : RationalFunction::q();
                return n;
            }
            static const char* gens[] = {"A", "B", "C", "K", "K0", "K1", "K2"};
            for (const char* g : gens)
                if (id == g) {
                    auto n = std::make_shared<SourceNode>(*node(Kind::Gen, at));
                    n->name = id;
                    return n;
                }
            throw ParseError("unknown identifier '" + id + "'", at);
        }
        throw ParseError(std::string("unexpected '") + c + "'", at);
    }

    const std::string& s_;
    std::size_t i_ = 0;
};

GenSymbol symbol_of(const std::string& name) {
    if (name == "K") return GenSymbol::K;
    if (name == "A") return GenSymbol::A;
    if (name == "B") return GenSymbol::B;
    if (name == "C") return GenSymbol::C;
    if (name == "K0") return GenSymbol::K0;
    if (name == "K1") return GenSymbol::K1;
    return GenSymbol::K2;
}

// Scalar value of a normal form, if it is one.
bool as_scalar(const PElement& x, RationalFunction& out) {
    if (x.is_zero()) {
        out = RationalFunction();
        return true;
    }
    if (x.size() != 1 || !x.begin()->first.is_one()) return false;
    out = x.begin()->second;
    return true;
}

RationalFunction scalar_divisor(const PElement& d, std::size_t at) {
    RationalFunction c;
    if (!as_scalar(d, c)) throw MathError("division by a non-scalar at offset " + std::to_string(at));
    if (c.is_zero()) throw MathError("division by zero at offset " + std::to_string(at));
    return c;
}

} // namespace

Source parse(const std::string& text) { return Parser(text).whole(); }

std::pair<Source, Source> parse_equation(const std::string& text) {
    const auto pos = text.find("==");
    if (pos == std::string::npos) throw ParseError("expected 'X == Y'", text.size());
    if (text.find("==", pos + 2) != std::string::npos) throw ParseError("more than one '=='", text.find("==", pos + 2));
    Source lhs = parse(text.substr(0, pos));
    try {
        return {lhs, parse(text.substr(pos + 2))};
    } catch (const ParseError& e) {
        throw ParseError(std::string(e.what()).substr(0, std::string(e.what()).rfind(" at offset")),
                         e.offset() + pos + 2);
    }
}

PElement evaluate(const Source& s) {
    switch (s->kind) {
    case Kind::Gen: return gen_value(symbol_of(s->name));
    case Kind::Scalar: return PElement::scalar(s->c);
    case Kind::Neg: return -evaluate(s->args[0]);
    case Kind::Add: return evaluate(s->args[0]) + evaluate(s->args[1]);
    case Kind::Sub: return evaluate(s->args[0]) - evaluate(s->args[1]);
    case Kind::Mul: return p_mul(evaluate(s->args[0]), evaluate(s->args[1]));
    case Kind::Div: return scalar_divisor(evaluate(s->args[1]), s->offset).inverse() * evaluate(s->args[0]);
    case Kind::Pow: {
        const PElement b = evaluate(s->args[0]);
        if (s->exponent >= 0) return p_pow(b, s->exponent);
        RationalFunction c;
        if (!as_scalar(b, c)) throw MathError("negative power of a non-scalar at offset " + std::to_string(s->offset));
        if (c.is_zero()) throw MathError("division by zero at offset " + std::to_string(s->offset));
        return PElement::scalar(c.pow(s->exponent));
    }
    case Kind::Commutator: return p_commutator(evaluate(s->args[0]), evaluate(s->args[1]));
    }
    throw std::logic_error("bad source node");
}

RepValue rep_of_source(const Source& s, const TruncatedRep& r) {
    const auto d = static_cast<std::size_t>(r.dim);
    auto mul = [](const RepValue& x, const RepValue& y) {
        return RepValue{x.matrix * y.matrix, {x.budget.ladder_degree + y.budget.ladder_degree}};
    };
    auto join = [](RatMatrix m, const RepValue& x, const RepValue& y) {
        return RepValue{std::move(m), {std::max(x.budget.ladder_degree, y.budget.ladder_degree)}};
    };
    switch (s->kind) {
    case Kind::Gen:
        if (s->name.size() == 1) return rep_of_word({RationalFunction(1), s->name}, r);
        return rep_of_element(gen_value(symbol_of(s->name)), r);
    case Kind::Scalar: {
        RatMatrix m = RatMatrix::identity(d);
        m *= eval_at(s->c, r.p_value);
        return {m, {}};
    }
    case Kind::Neg: {
        RepValue x = rep_of_source(s->args[0], r);
        x.matrix *= -1;
        return x;
    }
    case Kind::Add:
    case Kind::Sub: {
        const RepValue x = rep_of_source(s->args[0], r), y = rep_of_source(s->args[1], r);
        return join(s->kind == Kind::Add ? x.matrix + y.matrix : x.matrix - y.matrix, x, y);
    }
    case Kind::Mul: return mul(rep_of_source(s->args[0], r), rep_of_source(s->args[1], r));
    case Kind::Div: {
        RepValue x = rep_of_source(s->args[0], r);
        const RationalFunction c = scalar_divisor(evaluate(s->args[1]), s->offset);
        x.matrix *= 1 / eval_at(c, r.p_value);
        return x;
    }
    case Kind::Pow: {
        if (s->exponent < 0) return rep_of_element(evaluate(s), r);
        const RepValue b = rep_of_source(s->args[0], r);
        RepValue out{RatMatrix::identity(d), {}};
        for (long i = 0; i < s->exponent; ++i) out = mul(out, b);
        return out;
    }
    case Kind::Commutator: {
        const RepValue x = rep_of_source(s->args[0], r), y = rep_of_source(s->args[1], r);
        const RepValue xy = mul(x, y);
        return {xy.matrix - y.matrix * x.matrix, xy.budget};
    }
    }
    throw std::logic_error("bad source node");
}

PMonomial parse_monomial(const std::string& text) {
    const PElement x = evaluate(parse(text));
    if (x.size() != 1 || !x.begin()->second.is_one())
        throw MathError("'" + text + "' is not a basis monomial");
    return x.begin()->first;
}

} // namespace qheis
