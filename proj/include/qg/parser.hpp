#pragma once

#include "qg/ncpoly.hpp"

#include <cctype>
#include <variant>

namespace qg {

// Recursive-descent parser for the expression grammar:
//   integers, symbol names (letters, digits, trailing primes), + - * / ^,
//   sqrt(...), parentheses. '^' takes integer/rational literals or a
//   parenthesized linear form over colour symbols. Juxtaposition of
//   generator names multiplies (noncommutative words).
class Parser {
  public:
    using Value = std::variant<Scalar, NCPoly>;

    Parser(const SymbolTable& table, const Alphabet* alphabet = nullptr)
        : table_(table), alpha_(alphabet) {}

    Value parse(const std::string& text) const {
        State st{text, 0};
        Value v = parse_expr(st);
        skip_ws(st);
        if (st.pos != text.size()) throw SyntaxError("trailing input", st.pos);
        return v;
    }

    Scalar parse_scalar(const std::string& text) const {
        Value v = parse(text);
        if (std::holds_alternative<Scalar>(v)) return std::get<Scalar>(v);
        throw SyntaxError("expected a commutative expression: " + text, 0);
    }

    NCPoly parse_nc(const std::string& text) const {
        Value v = parse(text);
        if (std::holds_alternative<NCPoly>(v)) return std::get<NCPoly>(v);
        return NCPoly::scalar(std::get<Scalar>(v));
    }

  private:
    struct State {
        const std::string& s;
        std::size_t pos;
    };

    static void skip_ws(State& st) {
        while (st.pos < st.s.size() && std::isspace(static_cast<unsigned char>(st.s[st.pos]))) ++st.pos;
    }
    static bool peek(State& st, char c) {
        skip_ws(st);
        return st.pos < st.s.size() && st.s[st.pos] == c;
    }
    static bool eat(State& st, char c) {
        if (peek(st, c)) {
            ++st.pos;
            return true;
        }
        return false;
    }
    static bool name_start(char c) { return std::isalpha(static_cast<unsigned char>(c)); }

    static std::string read_name(State& st) {
        std::size_t start = st.pos;
        while (st.pos < st.s.size() &&
               (std::isalnum(static_cast<unsigned char>(st.s[st.pos])) || st.s[st.pos] == '_'))
            ++st.pos;
        while (st.pos < st.s.size() && st.s[st.pos] == '\'') ++st.pos;
        return st.s.substr(start, st.pos - start);
    }

    static Rational read_number(State& st) {
        std::size_t start = st.pos;
        while (st.pos < st.s.size() && std::isdigit(static_cast<unsigned char>(st.s[st.pos]))) ++st.pos;
        return rat_from_string(st.s.substr(start, st.pos - start));
    }

    // ---- value algebra (Scalar vs NCPoly promotion) ----
    static Value add(const Value& a, const Value& b, int sign) {
        if (std::holds_alternative<Scalar>(a) && std::holds_alternative<Scalar>(b)) {
            const auto& x = std::get<Scalar>(a);
            const auto& y = std::get<Scalar>(b);
            return sign > 0 ? x + y : x - y;
        }
        NCPoly x = to_nc(a), y = to_nc(b);
        return sign > 0 ? x + y : x - y;
    }
    static Value mul(const Value& a, const Value& b) {
        if (std::holds_alternative<Scalar>(a) && std::holds_alternative<Scalar>(b))
            return std::get<Scalar>(a) * std::get<Scalar>(b);
        return to_nc(a) * to_nc(b);
    }
    static Value div(const Value& a, const Value& b, std::size_t pos) {
        if (!std::holds_alternative<Scalar>(b))
            throw SyntaxError("division by a noncommutative expression", pos);
        const Scalar& y = std::get<Scalar>(b);
        if (y.is_zero()) throw DivisionByZero();
        if (std::holds_alternative<Scalar>(a)) return std::get<Scalar>(a) / y;
        return to_nc(a).scaled(y.inverse());
    }
    static NCPoly to_nc(const Value& v) {
        if (std::holds_alternative<NCPoly>(v)) return std::get<NCPoly>(v);
        return NCPoly::scalar(std::get<Scalar>(v));
    }

    Value parse_expr(State& st) const {
        Value acc = parse_term(st);
        for (;;) {
            if (eat(st, '+'))
                acc = add(acc, parse_term(st), +1);
            else if (eat(st, '-'))
                acc = add(acc, parse_term(st), -1);
            else
                return acc;
        }
    }

    bool factor_ahead(State& st) const {
        skip_ws(st);
        if (st.pos >= st.s.size()) return false;
        char c = st.s[st.pos];
        return name_start(c) || c == '(' || std::isdigit(static_cast<unsigned char>(c));
    }

    Value parse_term(State& st) const {
        Value acc = parse_factor(st);
        for (;;) {
            if (eat(st, '*')) {
                acc = mul(acc, parse_factor(st));
            } else if (peek(st, '/')) {
                std::size_t at = st.pos;
                ++st.pos;
                acc = div(acc, parse_factor(st), at);
            } else if (factor_ahead(st)) {
                acc = mul(acc, parse_factor(st));  // juxtaposition
            } else {
                return acc;
            }
        }
    }

    Value parse_factor(State& st) const {
        if (eat(st, '-')) return add(Value(Scalar::zero()), parse_factor(st), -1);
        Value base = parse_primary(st);
        while (peek(st, '^')) {
            ++st.pos;
            base = parse_power(st, base);
        }
        return base;
    }

    Value parse_power(State& st, const Value& base) const {
        skip_ws(st);
        std::size_t at = st.pos;
        // literal (possibly negative, possibly rational) exponent
        bool neg = false;
        if (peek(st, '-')) {
            neg = true;
            ++st.pos;
            skip_ws(st);
        }
        if (st.pos < st.s.size() && std::isdigit(static_cast<unsigned char>(st.s[st.pos]))) {
            Rational e = read_number(st);
            if (peek(st, '/')) {
                std::size_t save = st.pos;
                ++st.pos;
                skip_ws(st);
                if (st.pos < st.s.size() && std::isdigit(static_cast<unsigned char>(st.s[st.pos]))) {
                    e /= read_number(st);
                } else {
                    st.pos = save;  // the '/' belongs to the enclosing term
                }
            }
            if (neg) e = -e;
            return pow_value(base, LinearForm::of(e), at);
        }
        if (neg) throw SyntaxError("expected numeric exponent after '-'", st.pos);
        if (eat(st, '(')) {
            Value ev = parse_expr(st);
            if (!eat(st, ')')) throw SyntaxError("expected ')'", st.pos);
            return pow_value(base, to_linear_form(ev, at), at);
        }
        throw SyntaxError("expected exponent", st.pos);
    }

    LinearForm to_linear_form(const Value& v, std::size_t pos) const {
        if (!std::holds_alternative<Scalar>(v))
            throw SyntaxError("exponent must be commutative", pos);
        const Scalar& x = std::get<Scalar>(v);
        if (!x.den().is_one()) throw SyntaxError("exponent must be polynomial", pos);
        LinearForm L;
        for (const auto& [mono, c] : x.num().terms()) {
            const auto& es = mono.entries();
            if (es.empty()) {
                L.constant += c;
            } else if (es.size() == 1 && es[0].second == 1) {
                L.coeffs[es[0].first] += c;
            } else {
                throw SyntaxError("exponent must be linear in colour symbols", pos);
            }
        }
        return L;
    }

    Value pow_value(const Value& base, const LinearForm& L, std::size_t pos) const {
        if (std::holds_alternative<NCPoly>(base)) {
            if (!L.is_constant() || !is_integer(L.constant) || L.constant < 0)
                throw SyntaxError("generator powers must be non-negative integers", pos);
            return std::get<NCPoly>(base).pow(static_cast<int>(to_long(L.constant)));
        }
        const Scalar& x = std::get<Scalar>(base);
        if (L.is_constant()) {
            const Rational& e = L.constant;
            if (is_integer(e)) return x.pow(to_long(e));
            return scalar_rational_pow(x, e, pos);
        }
        // symbolic exponent: base must be a bare symbol with registered powers
        SymId sym = single_symbol(x, pos);
        Scalar out = Scalar::one();
        if (L.constant != 0) out = out * Scalar::var(sym, L.constant);
        for (const auto& [colour, c] : L.coeffs) {
            auto ps = table_.power_symbol(sym, colour);
            if (!ps)
                throw SyntaxError("no power symbol registered for " + table_.name(sym) + "^" +
                                      table_.name(colour),
                                  pos);
            out = out * Scalar::var(*ps, c);
        }
        return out;
    }

    static Scalar scalar_rational_pow(const Scalar& x, const Rational& e, std::size_t pos) {
        if (!x.den().is_one() || !x.num().is_monomial())
            throw SyntaxError("fractional power of a non-monomial", pos);
        const auto& [mono, c] = x.num().leading();
        if (c != 1) throw SyntaxError("fractional power of non-unit coefficient", pos);
        return Scalar(Poly::term(mono.pow(e), Rational(1)));
    }

    SymId single_symbol(const Scalar& x, std::size_t pos) const {
        if (!x.den().is_one() || !x.num().is_monomial())
            throw SyntaxError("symbolic exponent needs a single-symbol base", pos);
        const auto& [mono, c] = x.num().leading();
        if (c != 1 || mono.entries().size() != 1 || mono.entries()[0].second != 1)
            throw SyntaxError("symbolic exponent needs a single-symbol base", pos);
        return mono.entries()[0].first;
    }

    Value parse_primary(State& st) const {
        skip_ws(st);
        if (st.pos >= st.s.size()) throw SyntaxError("unexpected end of input", st.pos);
        char c = st.s[st.pos];
        if (std::isdigit(static_cast<unsigned char>(c))) {
            Rational v = read_number(st);
            return Value(Scalar(std::move(v)));
        }
        if (c == '(') {
            ++st.pos;
            Value v = parse_expr(st);
            if (!eat(st, ')')) throw SyntaxError("expected ')'", st.pos);
            return v;
        }
        if (name_start(c)) {
            std::size_t at = st.pos;
            std::string name = read_name(st);
            if (name == "sqrt") {
                if (!eat(st, '(')) throw SyntaxError("expected '(' after sqrt", st.pos);
                Value v = parse_expr(st);
                if (!eat(st, ')')) throw SyntaxError("expected ')'", st.pos);
                if (!std::holds_alternative<Scalar>(v))
                    throw SyntaxError("sqrt of a noncommutative expression", at);
                return scalar_rational_pow(std::get<Scalar>(v), rat(1, 2), at);
            }
            if (alpha_) {
                if (auto g = alpha_->find(name)) return Value(NCPoly::letter(*g));
            }
            if (auto sym = table_.find(name)) return Value(Scalar::var(*sym));
            throw UnknownSymbol(name);
        }
        throw SyntaxError(std::string("unexpected character '") + c + "'", st.pos);
    }

    const SymbolTable& table_;
    const Alphabet* alpha_;
};

} // namespace qg
