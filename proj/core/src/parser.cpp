#include "isf/parser.hpp"

#include <cctype>

namespace isf {

namespace {

constexpr long long kMaxExponent = 1000;

class Parser {
  public:
    Parser(const std::string& text, Sig sig) : text_(text), sig_(sig) {}

    TermPtr term() {
        skip_ws();
        return lattice();
    }

    bool at_relation() {
        skip_ws();
        return peek() == '=' || (peek() == '<' && peek(1) == '=');
    }

    // relation already detected; returns true for "=", false for "<="
    bool relation() {
        if (peek() == '=') {
            ++pos_;
            return true;
        }
        if (!sig_allows_join(sig_)) {
            throw ParseError(std::string("inequations need \\/ in the signature, not available in ") +
                                 sig_name(sig_),
                             pos_);
        }
        pos_ += 2;
        return false;
    }

    void expect_end() {
        skip_ws();
        if (pos_ != text_.size()) throw ParseError("unexpected trailing input", pos_);
    }

  private:
    const std::string& text_;
    Sig sig_;
    std::size_t pos_ = 0;

    char peek(std::size_t ahead = 0) const {
        return pos_ + ahead < text_.size() ? text_[pos_ + ahead] : '\0';
    }

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    bool eat(char c) {
        skip_ws();
        if (peek() == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    bool eat2(char a, char b) {
        skip_ws();
        if (peek() == a && peek(1) == b) {
            pos_ += 2;
            return true;
        }
        return false;
    }

    TermPtr lattice() {
        TermPtr first = prod();
        skip_ws();
        bool join = peek() == '\\' && peek(1) == '/';
        bool meet = peek() == '/' && peek(1) == '\\';
        if (!join && !meet) return first;
        std::size_t op_pos = pos_;
        if (join && !sig_allows_join(sig_)) {
            throw ParseError(std::string("symbol \\/ is not in signature ") + sig_name(sig_), op_pos);
        }
        if (meet && !sig_allows_meet(sig_)) {
            throw ParseError(std::string("symbol /\\ is not in signature ") + sig_name(sig_), op_pos);
        }
        std::vector<TermPtr> parts{first};
        while (join ? eat2('\\', '/') : eat2('/', '\\')) {
            parts.push_back(prod());
            skip_ws();
        }
        // the other operator at the same level needs parentheses
        if ((join && peek() == '/' && peek(1) == '\\') ||
            (meet && peek() == '\\' && peek(1) == '/')) {
            throw ParseError("mixing \\/ and /\\ at one level requires parentheses", pos_);
        }
        return join ? t_join(std::move(parts)) : t_meet(std::move(parts));
    }

    TermPtr prod() {
        std::vector<TermPtr> parts{factor()};
        while (eat('*')) parts.push_back(factor());
        return t_mul(std::move(parts));
    }

    TermPtr factor() {
        TermPtr base = atom();
        skip_ws();
        if (peek() != '^') return base;
        std::size_t caret = pos_;
        ++pos_;
        long long exp = integer(caret);
        if (exp < 0 && !sig_allows_inv(sig_)) {
            throw ParseError(std::string("symbol ^-1 is not in signature ") + sig_name(sig_), caret);
        }
        return t_pow(base, exp);
    }

    long long integer(std::size_t caret) {
        skip_ws();
        bool neg = false;
        if (peek() == '-') {
            neg = true;
            ++pos_;
        }
        if (!std::isdigit(static_cast<unsigned char>(peek()))) {
            throw ParseError("expected integer exponent after ^", pos_);
        }
        long long value = 0;
        while (std::isdigit(static_cast<unsigned char>(peek()))) {
            value = value * 10 + (peek() - '0');
            if (value > kMaxExponent) throw ParseError("exponent too large", caret);
            ++pos_;
        }
        return neg ? -value : value;
    }

    TermPtr atom() {
        skip_ws();
        std::size_t start = pos_;
        char c = peek();
        if (c == '(') {
            ++pos_;
            TermPtr inner = lattice();
            if (!eat(')')) throw ParseError("expected )", pos_);
            return inner;
        }
        if (c == '0') {
            if (!sig_allows_zero(sig_)) {
                throw ParseError(std::string("symbol 0 is not in signature ") + sig_name(sig_), start);
            }
            ++pos_;
            return t_zero();
        }
        if (std::islower(static_cast<unsigned char>(c)) || c == '_') {
            std::string name;
            while (std::islower(static_cast<unsigned char>(peek())) ||
                   std::isdigit(static_cast<unsigned char>(peek())) || peek() == '_') {
                name += text_[pos_++];
            }
            if (name == "e") return t_unit();
            if (name[0] == '_' && (name.size() < 2 || name[1] != 'f')) {
                throw ParseError("identifiers starting with '_' are reserved (_f...)", start);
            }
            return t_var(std::move(name));
        }
        throw ParseError("expected identifier, constant, or (", pos_);
    }
};

} // namespace

TermPtr parse_term(const std::string& text, Sig sig) {
    Parser p(text, sig);
    TermPtr t = p.term();
    p.expect_end();
    return t;
}

Statement parse_statement(const std::string& text, Sig sig) {
    auto result = parse_statement_or_term(text, sig);
    if (auto* st = std::get_if<Statement>(&result)) return *st;
    throw ParseError("expected a statement with = or <=", text.size());
}

std::variant<Statement, TermPtr> parse_statement_or_term(const std::string& text, Sig sig) {
    Parser p(text, sig);
    TermPtr lhs = p.term();
    if (!p.at_relation()) {
        p.expect_end();
        return lhs;
    }
    bool equation = p.relation();
    TermPtr rhs = p.term();
    p.expect_end();
    return Statement{equation, lhs, rhs, sig};
}

} // namespace isf
