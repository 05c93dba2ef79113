#include "coda/expr.hpp"

#include <cctype>

namespace coda {

namespace {

// A parsed value is a scalar, a cochain sum, or both (zero).
struct Value {
    bool scalar_ok = true;
    bool chain_ok = true;
    Scalar s;
    Coderivation chain;

    explicit Value(int truncation) : chain(truncation) {}
};

class Parser {
  public:
    Parser(const std::string& text, int truncation)
        : text_(text), truncation_(truncation) {}

    Value parse_sum() {
        Value acc = parse_product();
        while (true) {
            skip_ws();
            if (peek() == '+' || peek() == '-') {
                char op = take();
                Value rhs = parse_product();
                acc = combine(acc, rhs, op == '+' ? Scalar(1) : Scalar(-1));
            } else {
                return acc;
            }
        }
    }

    FormalAutomorphism parse_automorphism() {
        FormalAutomorphism g;
        g.truncation = truncation_;
        expect_word("lin");
        expect('(');
        g.linear = parse_linear_body();
        while (true) {
            skip_ws();
            if (peek() != '*')
                break;
            take();
            expect_word("exp");
            expect('(');
            Value v = parse_sum();
            expect(')');
            if (!v.chain_ok)
                fail("exp argument must be a cochain expression");
            for (const auto& [w, f] : v.chain.components())
                g.set_generator(f);
        }
        end();
        return g;
    }

    Value parse_toplevel() {
        Value v = parse_sum();
        end();
        return v;
    }

    void end() {
        skip_ws();
        if (pos_ != text_.size())
            fail("unexpected trailing input");
    }

  private:
    Value parse_product() {
        Value acc = parse_power();
        while (true) {
            skip_ws();
            char c = peek();
            if (c == '*' || c == '/') {
                take();
                Value rhs = parse_power();
                acc = multiply(acc, rhs, c == '/');
            } else {
                return acc;
            }
        }
    }

    Value parse_power() {
        Value base = parse_atom();
        skip_ws();
        if (peek() == '^') {
            take();
            skip_ws();
            bool negative = false;
            if (peek() == '-') {
                take();
                negative = true;
            }
            long e = parse_integer();
            if (!base.scalar_ok)
                fail("exponent applies to scalars only");
            Scalar out(1);
            for (long i = 0; i < e; ++i)
                out *= base.s;
            if (negative)
                out = out.inverse();
            Value v(truncation_);
            v.chain_ok = false;
            v.s = out;
            return v;
        }
        return base;
    }

    Value parse_atom() {
        skip_ws();
        size_t at = pos_;
        char c = peek();
        if (c == '-') {
            take();
            Value v = parse_atom();
            return scale(v, Scalar(-1));
        }
        if (c == '(') {
            take();
            Value v = parse_sum();
            expect(')');
            return v;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            Value v(truncation_);
            v.chain_ok = false;
            v.s = Scalar(Rational(Int(parse_digits())));
            return v;
        }
        if (std::isalpha(static_cast<unsigned char>(c))) {
            std::string word = parse_word();
            if (word == "c") {
                Value v(truncation_);
                v.chain_ok = false;
                v.s = Scalar::parameter();
                return v;
            }
            if (word == "phi" || word == "psi")
                return parse_basis(word, at);
            fail("unknown symbol '" + word + "'");
        }
        fail("expected a term");
        return Value(truncation_);  // unreachable
    }

    Value parse_basis(const std::string& word, size_t at) {
        expect('[');
        long i1 = parse_signed();
        expect(',');
        long i2 = parse_signed();
        expect(',');
        long i3 = parse_signed();
        expect(';');
        long j = parse_signed();
        expect(']');
        BasisCochain b;
        try {
            b = BasisCochain(MultiIndex(static_cast<int>(i1), static_cast<int>(i2),
                                        static_cast<int>(i3)),
                             static_cast<int>(j));
        } catch (const OutOfRangeError& e) {
            fail_at(e.what(), at);
        }
        bool odd = b.parity() == Parity::odd;
        if (odd != (word == "psi"))
            fail_at("'" + word + "' names a cochain of the wrong parity (use " +
                        (odd ? "psi" : "phi") + ")",
                    at);
        Value v(truncation_);
        v.scalar_ok = false;
        Cochain f;
        f.add_term(b, Scalar(1));
        v.chain.add(f);
        return v;
    }

    LinearAutomorphism parse_linear_body() {
        Value q = parse_sum();
        expect(';');
        Value r = parse_sum();
        expect(',');
        Value s = parse_sum();
        expect(',');
        Value t = parse_sum();
        expect(',');
        Value u = parse_sum();
        expect(')');
        for (const Value* v : {&q, &r, &s, &t, &u})
            if (!v->scalar_ok)
                fail("linear automorphism entries must be scalars");
        try {
            return LinearAutomorphism(q.s, r.s, s.s, t.s, u.s);
        } catch (const std::exception& e) {
            fail(e.what());
        }
        return LinearAutomorphism();  // unreachable
    }

    Value combine(const Value& a, const Value& b, const Scalar& sign) {
        Value out(truncation_);
        out.scalar_ok = a.scalar_ok && b.scalar_ok;
        out.chain_ok = a.chain_ok && b.chain_ok;
        if (!out.scalar_ok && !out.chain_ok)
            fail("cannot add a scalar and a cochain");
        if (out.scalar_ok)
            out.s = a.s + sign * b.s;
        if (out.chain_ok)
            out.chain = a.chain + b.chain * sign;
        return out;
    }

    Value scale(const Value& v, const Scalar& k) {
        Value out(truncation_);
        out.scalar_ok = v.scalar_ok;
        out.chain_ok = v.chain_ok;
        if (out.scalar_ok)
            out.s = v.s * k;
        if (out.chain_ok)
            out.chain = v.chain * k;
        return out;
    }

    Value multiply(const Value& a, const Value& b, bool divide) {
        if (a.scalar_ok && b.scalar_ok) {
            Value out(truncation_);
            out.chain_ok = false;
            out.s = divide ? a.s / b.s : a.s * b.s;
            return out;
        }
        if (divide) {
            if (!b.scalar_ok)
                fail("division by a cochain");
            return scale_chain(a, b.s.inverse());
        }
        if (a.scalar_ok)
            return scale_chain(b, a.s);
        if (b.scalar_ok)
            return scale_chain(a, b.s);
        fail("cannot multiply two cochains");
        return Value(truncation_);  // unreachable
    }

    Value scale_chain(const Value& chain, const Scalar& k) {
        Value out(truncation_);
        out.scalar_ok = false;
        out.chain = chain.chain * k;
        return out;
    }

    long parse_signed() {
        skip_ws();
        bool neg = false;
        if (peek() == '-') {
            take();
            neg = true;
        }
        long v = parse_integer();
        return neg ? -v : v;
    }

    long parse_integer() {
        skip_ws();
        if (!std::isdigit(static_cast<unsigned char>(peek())))
            fail("expected an integer");
        return std::stol(parse_digits());
    }

    std::string parse_digits() {
        size_t start = pos_;
        while (pos_ < text_.size() &&
               std::isdigit(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
        return text_.substr(start, pos_ - start);
    }

    std::string parse_word() {
        size_t start = pos_;
        while (pos_ < text_.size() &&
               std::isalpha(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
        return text_.substr(start, pos_ - start);
    }

    void expect(char c) {
        skip_ws();
        if (peek() != c)
            fail(std::string("expected '") + c + "'");
        take();
    }

    void expect_word(const std::string& w) {
        skip_ws();
        if (parse_word() != w)
            fail("expected '" + w + "'");
    }

    void skip_ws() {
        while (pos_ < text_.size() &&
               std::isspace(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
    }

    char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }
    char take() { return text_[pos_++]; }
    [[noreturn]] void fail(const std::string& msg) const { throw SyntaxError(msg, pos_); }
    [[noreturn]] void fail_at(const std::string& msg, size_t at) const {
        throw SyntaxError(msg, at);
    }

    const std::string& text_;
    int truncation_;
    size_t pos_ = 0;
};

}  // namespace

Coderivation parse_coderivation(const std::string& text, int truncation) {
    Parser p(text, truncation);
    Value v = p.parse_toplevel();
    if (!v.chain_ok) {
        throw SyntaxError("expected a cochain expression, got a scalar", 0);
    }
    return v.chain;
}

Cochain parse_cochain(const std::string& text) {
    Coderivation d = parse_coderivation(text, 64);
    if (d.is_zero())
        return Cochain();
    if (d.components().size() != 1)
        throw SyntaxError("expected a homogeneous cochain, got mixed weights", 0);
    return d.components().begin()->second;
}

Scalar parse_scalar(const std::string& text) {
    Parser p(text, 12);
    Value v = p.parse_toplevel();
    if (!v.scalar_ok)
        throw SyntaxError("expected a scalar expression", 0);
    return v.s;
}

FormalAutomorphism parse_automorphism(const std::string& text, int truncation) {
    Parser p(text, truncation);
    return p.parse_automorphism();
}

std::string render(const Cochain& f) { return f.str(); }
std::string render(const Coderivation& d) { return d.str(); }
std::string render(const Scalar& s) { return s.str(); }
std::string render(const FormalAutomorphism& g) { return g.str(); }

}  // namespace coda
