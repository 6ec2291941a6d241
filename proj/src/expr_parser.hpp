#ifndef DEGENLIFT_EXPR_PARSER_HPP
#define DEGENLIFT_EXPR_PARSER_HPP

#include <cctype>
#include <functional>
#include <optional>
#include <string>
#include <string_view>

#include "degenlift/errors.hpp"
#include "degenlift/poly.hpp"

namespace degenlift::detail {

// Recursive-descent parser for "+ - * / ^ ( )", integers and identifiers.
// V must be constructible from a Poly. The divide hook returns nullopt to
// reject a division.
template <class V>
class ExprParser {
public:
    using Divide = std::function<std::optional<V>(const V&, const V&)>;

    ExprParser(std::string_view text, Divide divide, int line = 1)
        : s_(text), divide_(std::move(divide)), line_(line)
    {
    }

    V run()
    {
        skip();
        if (pos_ == s_.size()) {
            fail("empty expression");
        }
        V p = expr();
        skip();
        if (pos_ != s_.size()) {
            fail(std::string("unexpected character '") + s_[pos_] + "'");
        }
        return p;
    }

private:
    std::string_view s_;
    Divide divide_;
    int line_;
    std::size_t pos_ = 0;

    [[noreturn]] void fail(const std::string& msg) const
    {
        throw ParseError(line_, static_cast<int>(pos_) + 1, msg);
    }

    void skip()
    {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) {
            ++pos_;
        }
    }

    bool accept(char c)
    {
        skip();
        if (pos_ < s_.size() && s_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    V expr()
    {
        V acc = term();
        for (;;) {
            if (accept('+')) {
                acc += term();
            } else if (accept('-')) {
                acc -= term();
            } else {
                return acc;
            }
        }
    }

    V term()
    {
        V acc = unary();
        for (;;) {
            if (accept('*')) {
                acc *= unary();
            } else if (accept('/')) {
                const std::size_t at = pos_;
                V d = unary();
                auto q = divide_(acc, d);
                if (!q) {
                    pos_ = at;
                    fail("unsupported division");
                }
                acc = std::move(*q);
            } else {
                return acc;
            }
        }
    }

    V unary()
    {
        if (accept('-')) {
            return -unary();
        }
        if (accept('+')) {
            return unary();
        }
        return power();
    }

    V power()
    {
        V base = primary();
        skip();
        bool has_pow = false;
        if (pos_ < s_.size() && s_[pos_] == '^') {
            ++pos_;
            has_pow = true;
        } else if (pos_ + 1 < s_.size() && s_[pos_] == '*' && s_[pos_ + 1] == '*') {
            pos_ += 2;
            has_pow = true;
        }
        if (!has_pow) {
            return base;
        }
        skip();
        if (pos_ < s_.size() && s_[pos_] == '-') {
            fail("negative exponent");
        }
        const std::size_t start = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
            ++pos_;
        }
        if (start == pos_ || pos_ - start > 6) {
            fail("expected a small non-negative integer exponent");
        }
        return base.pow(std::stoi(std::string(s_.substr(start, pos_ - start))));
    }

    V primary()
    {
        skip();
        if (pos_ >= s_.size()) {
            fail("unexpected end of expression");
        }
        const char c = s_[pos_];
        if (c == '(') {
            ++pos_;
            V p = expr();
            if (!accept(')')) {
                fail("expected ')'");
            }
            return p;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            const std::size_t start = pos_;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
                ++pos_;
            }
            return V(Poly(Rat(mpz_class(std::string(s_.substr(start, pos_ - start)), 10))));
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            const std::size_t start = pos_;
            while (pos_ < s_.size() &&
                   (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) {
                ++pos_;
            }
            return V(Poly::var(std::string(s_.substr(start, pos_ - start))));
        }
        fail(std::string("unexpected character '") + c + "'");
    }
};

}  // namespace degenlift::detail

#endif
