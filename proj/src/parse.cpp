#include "linham/parse.hpp"

#include <cctype>
#include <sstream>

namespace linham {
namespace {

class Parser {
public:
    explicit Parser(const std::string& text) : s_(text) {}

    RatFunc parse() {
        RatFunc v = expr();
        skip_ws();
        if (pos_ != s_.size()) fail("unexpected trailing input");
        return v;
    }

private:
    [[noreturn]] void fail(const std::string& what) const {
        std::ostringstream os;
        os << what << " at column " << pos_ + 1 << " in \"" << s_ << "\"";
        raise(ErrorKind::ParseError, os.str());
    }
    [[noreturn]] void unsupported(const std::string& what) const {
        raise(ErrorKind::UnsupportedFunction, what + " in \"" + s_ + "\"");
    }

    void skip_ws() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }
    bool eat(char c) {
        skip_ws();
        if (pos_ < s_.size() && s_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }
    char peek() {
        skip_ws();
        return pos_ < s_.size() ? s_[pos_] : '\0';
    }

    RatFunc expr() {
        RatFunc v = term();
        for (;;) {
            if (eat('+'))
                v += term();
            else if (eat('-'))
                v -= term();
            else
                return v;
        }
    }

    RatFunc term() {
        RatFunc v = factor();
        for (;;) {
            if (eat('*'))
                v *= factor();
            else if (eat('/'))
                v /= factor();
            else
                return v;
        }
    }

    RatFunc factor() {
        if (eat('-')) return -factor();
        if (eat('+')) return factor();
        RatFunc base = atom();
        if (eat('^')) {
            long e = exponent();
            RatFunc p = RatFunc::one();
            RatFunc b = base;
            long k = e < 0 ? -e : e;
            for (; k > 0; --k) p *= b;
            if (e < 0) p = RatFunc::one() / p;
            return p;
        }
        return base;
    }

    RatFunc atom() {
        char c = peek();
        if (c == '(') {
            ++pos_;
            RatFunc v = expr();
            if (!eat(')')) fail("expected ')'");
            return v;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) return RatFunc(GaussianRational(Rational(integer_literal())));
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::string name = identifier();
            if (name == "i") return RatFunc(GaussianRational::i());
            if (name == "t") return RatFunc::t();
            unsupported("unsupported function or symbol '" + name + "'");
        }
        fail("expected a number, 'i', 't' or '('");
    }

    // Exponents must be integers; a fractional exponent would introduce a
    // ramified covering and is rejected as unsupported.
    long exponent() {
        skip_ws();
        bool paren = eat('(');
        bool neg = false;
        if (eat('-'))
            neg = true;
        else
            eat('+');
        skip_ws();
        if (pos_ >= s_.size() || !std::isdigit(static_cast<unsigned char>(s_[pos_]))) fail("expected integer exponent");
        BigInt n = integer_literal();
        if (paren) {
            if (eat('/')) unsupported("fractional exponent");
            if (!eat(')')) fail("expected ')' after exponent");
        } else if (peek() == '/') {
            // `t^1/2` parses as (t^1)/2 under precedence; only a parenthesized
            // fraction is an exponent error, so nothing to do here.
        }
        if (n > 1000) fail("exponent too large");
        long e = static_cast<long>(n);
        return neg ? -e : e;
    }

    BigInt integer_literal() {
        skip_ws();
        size_t start = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        if (start == pos_) fail("expected digits");
        return BigInt(s_.substr(start, pos_ - start));
    }

    std::string identifier() {
        size_t start = pos_;
        while (pos_ < s_.size() &&
               (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_'))
            ++pos_;
        return s_.substr(start, pos_ - start);
    }

    const std::string& s_;
    size_t pos_ = 0;
};

} // namespace

RatFunc parse_ratfunc(const std::string& text) { return Parser(text).parse(); }

GaussianRational parse_gaussian(const std::string& text) {
    RatFunc f = parse_ratfunc(text);
    if (!f.is_constant()) raise(ErrorKind::ParseError, "expected a constant, got \"" + text + "\"");
    return f.constant_value();
}

} // namespace linham
