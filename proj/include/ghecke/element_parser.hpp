#pragma once

#include "ghecke/isomorphisms.hpp"
#include "ghecke/presets.hpp"

#include <cctype>

namespace ghecke {

struct ParseError : InputError {
    std::size_t position;
    ParseError(const std::string &msg, std::size_t pos)
        : InputError("parse error at position " + std::to_string(pos) + ": " + msg), position(pos) {}
};

/// Recursive-descent parser for algebra elements.
///
///   expr   := term (('+' | '-') term)*
///   term   := unary (('*' | '/') unary)*
///   unary  := '-' unary | power
///   power  := atom ('^' integer)?
///   atom   := number | zetaN | x | xI | r | N[word] | (expr) | IM(expr) | SGN(expr)
///
/// Words are products of s, sI and gJ separated by '*', or "e". Division is by nonzero scalars only.
class ElementParser {
  public:
    ElementParser(const HeckeAlgebra &h, std::string text) : h_(h), s_(std::move(text)) {}

    HeckeElement parse() {
        HeckeElement e = expr();
        skip();
        if (pos_ != s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
        return e;
    }

    /// Parses a word such as "s1*s2*g1" to a group element index.
    static std::size_t parse_word(const ExtendedWeylGroup &g, const std::string &word) {
        std::string w;
        for (char c : word)
            if (!std::isspace(static_cast<unsigned char>(c))) w += c;
        if (w == "e" || w.empty()) return 0;
        std::size_t out = 0;
        for (const auto &letter : split_list(w, '*')) {
            if (letter.empty()) throw InputError("empty letter in word '" + word + "'");
            std::size_t idx = 0;
            bool gamma = letter[0] == 'g';
            if (letter[0] != 's' && !gamma) throw InputError("bad letter '" + letter + "'");
            if (letter.size() == 1) {
                if (gamma || g.rank() != 1) throw InputError("letter '" + letter + "' needs an index");
                idx = 1;
            } else {
                try {
                    idx = std::stoul(letter.substr(1));
                } catch (const std::logic_error &) {
                    throw InputError("bad letter '" + letter + "'");
                }
            }
            std::size_t gen;
            if (gamma) {
                if (idx < 1 || idx > g.gamma_generators().size()) throw InputError("no Gamma generator " + letter);
                gen = g.gamma_generator(idx - 1);
            } else {
                if (idx < 1 || idx > g.rank()) throw InputError("no simple reflection " + letter);
                gen = g.simple_reflection(idx - 1);
            }
            out = g.multiply(out, gen);
        }
        return out;
    }

  private:
    [[noreturn]] void fail(const std::string &msg) const { throw ParseError(msg, pos_); }

    void skip() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }
    bool accept(char c) {
        skip();
        if (pos_ < s_.size() && s_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }
    void expect(char c) {
        if (!accept(c)) fail(std::string("expected '") + c + "'");
    }
    bool accept_word(const std::string &w) {
        skip();
        if (s_.compare(pos_, w.size(), w) == 0) {
            pos_ += w.size();
            return true;
        }
        return false;
    }

    HeckeElement expr() {
        HeckeElement e = term();
        for (;;) {
            if (accept('+'))
                e += term();
            else if (accept('-'))
                e -= term();
            else
                return e;
        }
    }

    HeckeElement term() {
        HeckeElement e = unary();
        for (;;) {
            if (accept('*')) {
                e = h_.multiply(e, unary());
            } else if (accept('/')) {
                std::size_t at = pos_;
                HeckeElement d = unary();
                auto c = as_scalar(d);
                if (!c || c->is_zero()) {
                    pos_ = at;
                    fail("division by a non-scalar or zero");
                }
                e *= c->inverse();
            } else {
                return e;
            }
        }
    }

    std::optional<Scalar> as_scalar(const HeckeElement &d) const {
        if (d.is_zero()) return Scalar(0);
        if (d.terms().size() != 1 || d.terms().begin()->first != 0) return std::nullopt;
        const auto &p = d.terms().begin()->second;
        if (p.size() != 1 || p.terms().begin()->first != Monomial{}) return std::nullopt;
        return p.constant_term();
    }

    HeckeElement unary() {
        if (accept('-')) return -unary();
        return power();
    }

    HeckeElement power() {
        HeckeElement base = atom();
        if (accept('^')) {
            skip();
            std::size_t start = pos_;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
            if (start == pos_) fail("expected a nonnegative integer exponent");
            unsigned e = static_cast<unsigned>(std::stoul(s_.substr(start, pos_ - start)));
            return h_.power(base, e);
        }
        return base;
    }

    HeckeElement atom() {
        skip();
        if (pos_ >= s_.size()) fail("unexpected end of input");
        char c = s_[pos_];
        if (accept('(')) {
            HeckeElement e = expr();
            expect(')');
            return e;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t start = pos_;
            while (pos_ < s_.size() && (std::isdigit(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '.')) ++pos_;
            return h_.scalar(Scalar::parse(s_.substr(start, pos_ - start)));
        }
        if (accept_word("IM(")) {
            HeckeElement e = expr();
            expect(')');
            return im_involution(h_, e);
        }
        if (accept_word("SGN(")) {
            std::size_t at = pos_;
            HeckeElement e = expr();
            expect(')');
            if (h_.mode() == Mode::r1) {
                pos_ = at;
                fail("SGN changes k in the r = 1 algebra; use the generic mode");
            }
            return sgn_involution(h_, e);
        }
        if (accept_word("zeta")) {
            std::size_t start = pos_;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
            if (start == pos_) fail("expected the order of the root of unity");
            std::size_t n = std::stoul(s_.substr(start, pos_ - start));
            if (n == 0) fail("zeta0 is not a root of unity");
            return h_.scalar(Scalar::root_of_unity(1, n));
        }
        if (accept_word("N[")) {
            std::size_t start = pos_;
            while (pos_ < s_.size() && s_[pos_] != ']') ++pos_;
            if (pos_ == s_.size()) fail("unterminated N[");
            std::string word = s_.substr(start, pos_ - start);
            ++pos_;
            try {
                return h_.N(parse_word(h_.group(), word));
            } catch (const InputError &e) {
                pos_ = start;
                fail(e.what());
            }
        }
        if (c == 'r') {
            ++pos_;
            return h_.r();
        }
        if (c == 'x') {
            ++pos_;
            std::size_t start = pos_;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
            std::size_t idx = 1;
            if (start == pos_) {
                if (h_.dim() != 1) fail("bare 'x' is only allowed when dim t = 1");
            } else {
                idx = std::stoul(s_.substr(start, pos_ - start));
            }
            if (idx < 1 || idx > h_.dim()) fail("no coordinate x" + std::to_string(idx));
            return h_.x(idx - 1);
        }
        fail("unexpected '" + std::string(1, c) + "'");
    }

    const HeckeAlgebra &h_;
    std::string s_;
    std::size_t pos_ = 0;
};

inline HeckeElement parse_element(const HeckeAlgebra &h, const std::string &text) {
    return ElementParser(h, text).parse();
}

}  // namespace ghecke
