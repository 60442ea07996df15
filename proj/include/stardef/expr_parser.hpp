#ifndef STARDEF_EXPR_PARSER_HPP
#define STARDEF_EXPR_PARSER_HPP

// Recursive-descent parser for ring-valued expressions:
//
//   expr   := term (('+' | '-') term)*
//   term   := unary (('*' term) | ('/' integer))*
//   unary  := ('+' | '-') unary | power
//   power  := atom ('^' integer)?
//   atom   := integer | identifier | '(' expr ')'
//
// The ring is supplied by the caller through a symbol resolver and an
// embedding of rational constants.

#include <cctype>
#include <functional>
#include <stdexcept>
#include <string>
#include <string_view>

#include "stardef/scalars.hpp"

namespace stardef {

class ParseError : public std::invalid_argument {
public:
    ParseError(const std::string& what, std::size_t pos)
        : std::invalid_argument(what + " at position " + std::to_string(pos)), pos_(pos)
    {
    }
    std::size_t position() const { return pos_; }

private:
    std::size_t pos_;
};

template <class Ring>
class ExpressionParser {
public:
    using SymbolResolver = std::function<Ring(const std::string&)>;
    using ConstantEmbedding = std::function<Ring(const Rational&)>;

    ExpressionParser(std::string_view text, SymbolResolver symbol, ConstantEmbedding constant)
        : text_(text), symbol_(std::move(symbol)), constant_(std::move(constant))
    {
    }

    Ring parse()
    {
        skip_ws();
        if (at_end()) throw ParseError("empty expression", pos_);
        Ring r = expr();
        skip_ws();
        if (!at_end()) throw ParseError(std::string("unexpected character '") + text_[pos_] + "'", pos_);
        return r;
    }

private:
    Ring expr()
    {
        Ring acc = term();
        for (;;) {
            skip_ws();
            if (accept('+'))
                acc = acc + term();
            else if (accept('-'))
                acc = acc - term();
            else
                return acc;
        }
    }

    Ring term()
    {
        Ring acc = unary();
        for (;;) {
            skip_ws();
            if (accept('*')) {
                acc = acc * unary();
            } else if (accept('/')) {
                skip_ws();
                std::size_t at = pos_;
                mpz_class d = integer();
                if (d == 0) throw ParseError("division by zero", at);
                acc = acc * constant_(Rational(mpz_class(1), d));
            } else {
                return acc;
            }
        }
    }

    Ring unary()
    {
        skip_ws();
        if (accept('-')) return constant_(Rational(-1)) * unary();
        if (accept('+')) return unary();
        return power();
    }

    Ring power()
    {
        Ring base = atom();
        skip_ws();
        if (!accept('^')) return base;
        skip_ws();
        std::size_t at = pos_;
        mpz_class e = integer();
        if (!e.fits_uint_p() || e > 4096) throw ParseError("exponent out of range", at);
        unsigned k = static_cast<unsigned>(e.get_ui());
        Ring r = constant_(Rational(1));
        for (unsigned j = 0; j < k; ++j) r = r * base;
        return r;
    }

    Ring atom()
    {
        skip_ws();
        if (at_end()) throw ParseError("unexpected end of input", pos_);
        char c = text_[pos_];
        if (accept('(')) {
            Ring r = expr();
            skip_ws();
            if (!accept(')')) throw ParseError("expected ')'", pos_);
            return r;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) return constant_(Rational(integer()));
        if (std::isalpha(static_cast<unsigned char>(c))) {
            std::size_t start = pos_;
            while (!at_end() && std::isalnum(static_cast<unsigned char>(text_[pos_]))) ++pos_;
            std::string name(text_.substr(start, pos_ - start));
            try {
                return symbol_(name);
            } catch (const ParseError&) {
                throw;
            } catch (const std::exception& e) {
                throw ParseError(e.what(), start);
            }
        }
        throw ParseError(std::string("unexpected character '") + c + "'", pos_);
    }

    mpz_class integer()
    {
        std::size_t start = pos_;
        while (!at_end() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        if (start == pos_) throw ParseError("expected integer", start);
        return mpz_class(std::string(text_.substr(start, pos_ - start)));
    }

    void skip_ws()
    {
        while (!at_end() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }
    bool accept(char c)
    {
        if (!at_end() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }
    bool at_end() const { return pos_ >= text_.size(); }

    std::string_view text_;
    SymbolResolver symbol_;
    ConstantEmbedding constant_;
    std::size_t pos_ = 0;
};

}  // namespace stardef

#endif
