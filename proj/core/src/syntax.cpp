#include "pik/syntax.hpp"

#include <cctype>
#include <sstream>

#include "pik/gates.hpp"

namespace pik {

namespace {

enum class Tok { Ident, Int, Seq, Oplus, Otimes, LParen, RParen, Comma, Caret, End };

struct Token {
    Tok kind;
    std::string text;
    long value = 0;
    int line = 1, col = 1;
};

class Lexer {
public:
    explicit Lexer(const std::string& src) : src_(src) { advance(); }

    const Token& peek() const { return tok_; }

    Token take() {
        Token t = tok_;
        advance();
        return t;
    }

private:
    void advance() {
        while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_])))
            bump();
        tok_.line = line_;
        tok_.col = col_;
        if (pos_ >= src_.size()) {
            tok_.kind = Tok::End;
            tok_.text = "<end>";
            return;
        }
        const char c = src_[pos_];
        if (c == ';') {
            bump();
            tok_ = {Tok::Seq, ";", 0, tok_.line, tok_.col};
            return;
        }
        if (c == ',') {
            bump();
            tok_ = {Tok::Comma, ",", 0, tok_.line, tok_.col};
            return;
        }
        if (c == '^') {
            bump();
            tok_ = {Tok::Caret, "^", 0, tok_.line, tok_.col};
            return;
        }
        if (c == ')') {
            bump();
            tok_ = {Tok::RParen, ")", 0, tok_.line, tok_.col};
            return;
        }
        if (c == '(') {
            if (pos_ + 2 < src_.size() && src_[pos_ + 2] == ')' &&
                (src_[pos_ + 1] == '+' || src_[pos_ + 1] == 'x')) {
                const bool plus = src_[pos_ + 1] == '+';
                bump();
                bump();
                bump();
                tok_ = {plus ? Tok::Oplus : Tok::Otimes, plus ? "(+)" : "(x)", 0, tok_.line,
                        tok_.col};
                return;
            }
            bump();
            tok_ = {Tok::LParen, "(", 0, tok_.line, tok_.col};
            return;
        }
        if (c == '-' || std::isdigit(static_cast<unsigned char>(c))) {
            std::string digits;
            if (c == '-') {
                digits += c;
                bump();
            }
            if (pos_ >= src_.size() || !std::isdigit(static_cast<unsigned char>(src_[pos_])))
                throw ParseError(tok_.line, tok_.col, "expected digits after '-'");
            while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) {
                digits += src_[pos_];
                bump();
            }
            tok_ = {Tok::Int, digits, std::stol(digits), tok_.line, tok_.col};
            return;
        }
        if (std::isalpha(static_cast<unsigned char>(c))) {
            std::string ident;
            while (pos_ < src_.size() &&
                   (std::isalnum(static_cast<unsigned char>(src_[pos_])) || src_[pos_] == '_')) {
                ident += src_[pos_];
                bump();
            }
            tok_ = {Tok::Ident, ident, 0, tok_.line, tok_.col};
            return;
        }
        throw ParseError(line_, col_, std::string("unexpected character '") + c + "'");
    }

    void bump() {
        if (src_[pos_] == '\n') {
            ++line_;
            col_ = 1;
        } else {
            ++col_;
        }
        ++pos_;
    }

    const std::string& src_;
    size_t pos_ = 0;
    int line_ = 1, col_ = 1;
    Token tok_;
};

class Parser {
public:
    Parser(const std::string& src, Precision k) : lex_(src), k_(k) {}

    Term parse_term() {
        Term t = parse_seq();
        expect(Tok::End, "end of input");
        return t;
    }

private:
    Term parse_seq() {
        Term acc = parse_sum();
        while (lex_.peek().kind == Tok::Seq) {
            lex_.take();
            Term next = parse_sum();
            acc = Term::comp(std::move(next), std::move(acc)); // "f ; g" is g after f
        }
        return acc;
    }

    Term parse_sum() {
        Term acc = parse_prod();
        while (lex_.peek().kind == Tok::Oplus) {
            lex_.take();
            acc = Term::sum(std::move(acc), parse_prod());
        }
        return acc;
    }

    Term parse_prod() {
        Term acc = parse_atom();
        while (lex_.peek().kind == Tok::Otimes) {
            lex_.take();
            acc = Term::kron(std::move(acc), parse_atom());
        }
        return acc;
    }

    Term parse_atom() {
        const Token tok = lex_.take();
        if (tok.kind == Tok::LParen) {
            Term inner = parse_seq();
            expect(Tok::RParen, "')'");
            return inner;
        }
        if (tok.kind != Tok::Ident)
            throw ParseError(tok.line, tok.col, "expected a term, got '" + tok.text + "'");

        const std::string& name = tok.text;
        if (name == "V")
            return Term::v();
        if (name == "X")
            return gate::x();
        if (name == "S")
            return gate::s(k_);
        if (name == "T")
            return gate::t(k_);
        if (name == "H")
            return builder(tok, [&] { return gate::h(k_); });
        if (name == "omega")
            return builder(tok, [&] { return gate::omega(k_); });
        if (name == "zeta") {
            if (lex_.peek().kind == Tok::Caret) {
                lex_.take();
                return Term::zeta(expect_int());
            }
            return Term::zeta(1);
        }
        if (name == "id") {
            expect(Tok::LParen, "'('");
            const long n = expect_nat();
            expect(Tok::RParen, "')'");
            return builder(tok, [&] { return Term::id(n); });
        }
        if (name == "swap") {
            expect(Tok::LParen, "'('");
            const long m = expect_nat();
            expect(Tok::Comma, "','");
            const long n = expect_nat();
            expect(Tok::RParen, "')'");
            return builder(tok, [&] { return Term::swap_plus(m, n); });
        }
        if (name == "ctrl") {
            expect(Tok::LParen, "'('");
            Term inner = parse_seq();
            expect(Tok::RParen, "')'");
            return builder(tok, [&] { return gate::ctrl(inner); });
        }
        if (name == "cphase") {
            expect(Tok::LParen, "'('");
            const long d = expect_nat();
            expect(Tok::RParen, "')'");
            return builder(tok, [&] { return gate::cphase(k_, static_cast<int>(d)); });
        }
        if (name == "dagger" || name == "conj") {
            expect(Tok::LParen, "'('");
            Term inner = parse_seq();
            expect(Tok::RParen, "')'");
            return builder(tok, [&] {
                return name == "dagger" ? term_dagger(inner, k_) : term_conj(inner, k_);
            });
        }
        if (name == "scale") {
            expect(Tok::LParen, "'('");
            const long j = expect_int();
            expect(Tok::Comma, "','");
            Term inner = parse_seq();
            expect(Tok::RParen, "')'");
            return Term::scale(j, std::move(inner));
        }
        throw ParseError(tok.line, tok.col, "unknown name '" + name + "'");
    }

    template <typename F>
    Term builder(const Token& at, F make) {
        try {
            return make();
        } catch (const ValidationError& e) {
            throw ParseError(at.line, at.col, e.what());
        } catch (const ShapeError& e) {
            throw ParseError(at.line, at.col, e.what());
        }
    }

    long expect_int() {
        const Token tok = lex_.take();
        if (tok.kind != Tok::Int)
            throw ParseError(tok.line, tok.col, "expected an integer, got '" + tok.text + "'");
        return tok.value;
    }

    long expect_nat() {
        const Token tok = lex_.take();
        if (tok.kind != Tok::Int || tok.value < 0)
            throw ParseError(tok.line, tok.col, "expected a natural number, got '" + tok.text + "'");
        return tok.value;
    }

    void expect(Tok kind, const std::string& what) {
        const Token tok = lex_.take();
        if (tok.kind != kind)
            throw ParseError(tok.line, tok.col, "expected " + what + ", got '" + tok.text + "'");
    }

    Lexer lex_;
    Precision k_;
};

// Precedence levels for printing: seq < sum < prod < atom.
enum Level { kSeq = 0, kSum = 1, kProd = 2, kAtom = 3 };

void print(std::ostream& os, const Term& t, int level) {
    switch (t.kind()) {
    case Term::Kind::Id:
        os << "id(" << t.size() << ")";
        return;
    case Term::Kind::SwapPlus:
        os << "swap(" << t.swap_m() << "," << t.swap_n() << ")";
        return;
    case Term::Kind::Zeta:
        os << "zeta^" << t.exponent();
        return;
    case Term::Kind::V:
        os << "V";
        return;
    case Term::Kind::Scale:
        os << "scale(" << t.exponent() << ", ";
        print(os, t.body(), kSeq);
        os << ")";
        return;
    case Term::Kind::Comp: {
        const bool parens = level > kSeq;
        if (parens)
            os << "(";
        print(os, t.first(), kSeq); // earlier morphism prints first
        os << " ; ";
        print(os, t.second(), kSum);
        if (parens)
            os << ")";
        return;
    }
    case Term::Kind::Sum: {
        const bool parens = level > kSum;
        if (parens)
            os << "(";
        print(os, t.first(), kSum);
        os << " (+) ";
        print(os, t.second(), kProd);
        if (parens)
            os << ")";
        return;
    }
    case Term::Kind::Kron: {
        const bool parens = level > kProd;
        if (parens)
            os << "(";
        print(os, t.first(), kProd);
        os << " (x) ";
        print(os, t.second(), kAtom);
        if (parens)
            os << ")";
        return;
    }
    }
}

} // namespace

Term parse(const std::string& src, Precision k) {
    Parser parser(src, k);
    return parser.parse_term();
}

std::string pretty(const Term& t) {
    std::ostringstream os;
    print(os, t, kSeq);
    return os.str();
}

} // namespace pik
