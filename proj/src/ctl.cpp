#include "svmc/ctl.hpp"

#include <algorithm>
#include <cctype>

namespace svmc {

CtlSyntaxError::CtlSyntaxError(const std::string& message, std::size_t position)
    : std::runtime_error(message + " at position " + std::to_string(position)), position_(position) {}

Formula::Formula(Kind kind, std::string transition, std::vector<Formula> children)
    : kind_(kind), transition_(std::move(transition)), children_(std::move(children)) {}

Formula Formula::truth() { return Formula(Kind::True, {}, {}); }

Formula Formula::falsity() { return negation(truth()); }

Formula Formula::fireable(std::string transition) {
    if (transition.empty()) throw std::invalid_argument("fireable needs a transition id");
    return Formula(Kind::Fireable, std::move(transition), {});
}

Formula Formula::negation(Formula f) { return Formula(Kind::Not, {}, {std::move(f)}); }

Formula Formula::disjunction(Formula lhs, Formula rhs) {
    return Formula(Kind::Or, {}, {std::move(lhs), std::move(rhs)});
}

Formula Formula::conjunction(Formula lhs, Formula rhs) {
    return Formula(Kind::And, {}, {std::move(lhs), std::move(rhs)});
}

Formula Formula::unary(Kind kind, Formula f) {
    switch (kind) {
        case Kind::EX: case Kind::EF: case Kind::EG: case Kind::AX: case Kind::AF: case Kind::AG:
            return Formula(kind, {}, {std::move(f)});
        default:
            throw std::invalid_argument("not a unary temporal operator");
    }
}

Formula Formula::until(Kind kind, Formula lhs, Formula rhs) {
    if (kind != Kind::EU && kind != Kind::AU) throw std::invalid_argument("not an until operator");
    return Formula(kind, {}, {std::move(lhs), std::move(rhs)});
}

bool Formula::is_false() const noexcept { return kind_ == Kind::Not && children_[0].kind_ == Kind::True; }

bool Formula::is_core() const {
    switch (kind_) {
        case Kind::True: case Kind::Fireable: case Kind::Not: case Kind::Or: case Kind::EX: case Kind::EG:
        case Kind::EU:
            return std::all_of(children_.begin(), children_.end(), [](const Formula& c) { return c.is_core(); });
        default:
            return false;
    }
}

std::size_t Formula::depth() const {
    std::size_t d = 0;
    for (const Formula& c : children_) d = std::max(d, c.depth());
    return children_.empty() ? 0 : d + 1;
}

namespace {

const char* prefix_name(Formula::Kind k) {
    switch (k) {
        case Formula::Kind::EX: return "EX";
        case Formula::Kind::EF: return "EF";
        case Formula::Kind::EG: return "EG";
        case Formula::Kind::AX: return "AX";
        case Formula::Kind::AF: return "AF";
        case Formula::Kind::AG: return "AG";
        default: return "";
    }
}

}  // namespace

std::string Formula::to_string() const {
    switch (kind_) {
        case Kind::True: return "true";
        case Kind::Fireable: return "fireable(" + transition_ + ")";
        case Kind::Not: return "!" + children_[0].to_string();
        case Kind::Or: return "(" + children_[0].to_string() + " || " + children_[1].to_string() + ")";
        case Kind::And: return "(" + children_[0].to_string() + " && " + children_[1].to_string() + ")";
        case Kind::EU: return "E[" + children_[0].to_string() + " U " + children_[1].to_string() + "]";
        case Kind::AU: return "A[" + children_[0].to_string() + " U " + children_[1].to_string() + "]";
        default: return std::string(prefix_name(kind_)) + " " + children_[0].to_string();
    }
}

namespace {

class Parser {
public:
    explicit Parser(std::string_view text) : text_(text) {}

    Formula parse() {
        Formula f = disjunction();
        skip_space();
        if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
        return f;
    }

private:
    [[noreturn]] void fail(const std::string& message) const { throw CtlSyntaxError(message, pos_); }

    void skip_space() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    bool accept(std::string_view symbol) {
        skip_space();
        if (text_.substr(pos_, symbol.size()) != symbol) return false;
        pos_ += symbol.size();
        return true;
    }

    void expect(std::string_view symbol) {
        if (!accept(symbol)) fail("expected '" + std::string(symbol) + "'");
    }

    static bool word_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

    // Next identifier-like word without consuming it.
    std::string_view peek_word() {
        skip_space();
        std::size_t end = pos_;
        while (end < text_.size() && word_char(text_[end])) ++end;
        return text_.substr(pos_, end - pos_);
    }

    Formula disjunction() {
        Formula f = conjunction();
        while (accept("||")) f = Formula::disjunction(std::move(f), conjunction());
        return f;
    }

    Formula conjunction() {
        Formula f = unary();
        while (accept("&&")) f = Formula::conjunction(std::move(f), unary());
        return f;
    }

    Formula unary() {
        if (accept("!")) return Formula::negation(unary());
        std::string_view w = peek_word();
        static const std::pair<std::string_view, Formula::Kind> prefixes[] = {
            {"EX", Formula::Kind::EX}, {"EF", Formula::Kind::EF}, {"EG", Formula::Kind::EG},
            {"AX", Formula::Kind::AX}, {"AF", Formula::Kind::AF}, {"AG", Formula::Kind::AG}};
        for (const auto& [name, kind] : prefixes)
            if (w == name) {
                pos_ += w.size();
                return Formula::unary(kind, unary());
            }
        return primary();
    }

    Formula primary() {
        skip_space();
        if (pos_ == text_.size()) fail("unexpected end of formula");
        if (accept("(")) {
            Formula f = disjunction();
            expect(")");
            return f;
        }
        std::string_view w = peek_word();
        if (w == "true") {
            pos_ += w.size();
            return Formula::truth();
        }
        if (w == "false") {
            pos_ += w.size();
            return Formula::falsity();
        }
        if (w == "fireable") {
            pos_ += w.size();
            expect("(");
            skip_space();
            std::size_t start = pos_;
            while (pos_ < text_.size() && text_[pos_] != ')' && text_[pos_] != '(' &&
                   !std::isspace(static_cast<unsigned char>(text_[pos_])))
                ++pos_;
            if (pos_ == start) fail("expected a transition id");
            std::string id(text_.substr(start, pos_ - start));
            expect(")");
            return Formula::fireable(std::move(id));
        }
        if (w == "E" || w == "A") {
            Formula::Kind kind = w == "E" ? Formula::Kind::EU : Formula::Kind::AU;
            pos_ += w.size();
            expect("[");
            Formula lhs = disjunction();
            skip_space();
            if (peek_word() != "U") fail("expected 'U'");
            ++pos_;
            Formula rhs = disjunction();
            expect("]");
            return Formula::until(kind, std::move(lhs), std::move(rhs));
        }
        if (w.empty()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
        fail("unknown token '" + std::string(w) + "'");
    }

    std::string_view text_;
    std::size_t pos_ = 0;
};

using K = Formula::Kind;

Formula neg(Formula f) { return Formula::negation(std::move(f)); }

}  // namespace

Formula parse_formula(std::string_view text) { return Parser(text).parse(); }

Formula desugar(const Formula& f) {
    switch (f.kind()) {
        case K::True:
        case K::Fireable:
            return f;
        case K::Not:
            return neg(desugar(f.operand()));
        case K::Or:
            return Formula::disjunction(desugar(f.child(0)), desugar(f.child(1)));
        case K::And:
            return neg(Formula::disjunction(neg(desugar(f.child(0))), neg(desugar(f.child(1)))));
        case K::EX:
            return Formula::unary(K::EX, desugar(f.operand()));
        case K::EG:
            return Formula::unary(K::EG, desugar(f.operand()));
        case K::EU:
            return Formula::until(K::EU, desugar(f.child(0)), desugar(f.child(1)));
        case K::EF:
            return Formula::until(K::EU, Formula::truth(), desugar(f.operand()));
        case K::AX:
            return neg(Formula::unary(K::EX, neg(desugar(f.operand()))));
        case K::AG:
            return neg(Formula::until(K::EU, Formula::truth(), neg(desugar(f.operand()))));
        case K::AF:
            return neg(Formula::unary(K::EG, neg(desugar(f.operand()))));
        case K::AU: {
            Formula phi = desugar(f.child(0)), psi = desugar(f.child(1));
            Formula both_fail = neg(Formula::disjunction(neg(neg(phi)), neg(neg(psi))));
            Formula escape = Formula::until(K::EU, neg(psi), both_fail);
            return neg(Formula::disjunction(std::move(escape), Formula::unary(K::EG, neg(psi))));
        }
    }
    throw std::logic_error("unhandled formula kind");
}

namespace {

// One rewrite at the root, if any rule applies.
bool rewrite_root(Formula& f) {
    switch (f.kind()) {
        case K::Not:
            if (f.operand().kind() == K::Not) {
                Formula inner = f.operand().operand();
                f = std::move(inner);
                return true;
            }
            return false;
        case K::Or: {
            const Formula &a = f.child(0), &b = f.child(1);
            if (a.kind() == K::True || b.kind() == K::True) {
                f = Formula::truth();
                return true;
            }
            if (a.is_false() || a == b) {
                Formula keep = b;
                f = std::move(keep);
                return true;
            }
            if (b.is_false()) {
                Formula keep = a;
                f = std::move(keep);
                return true;
            }
            return false;
        }
        case K::EF:
        case K::EG:
        case K::AG:
            if (f.operand().kind() == f.kind()) {
                Formula inner = f.operand();
                f = std::move(inner);
                return true;
            }
            return false;
        case K::EX:
            if (f.operand().is_false()) {
                f = Formula::falsity();
                return true;
            }
            return false;
        default:
            return false;
    }
}

Formula rebuild(const Formula& f, std::vector<Formula> kids) {
    switch (f.kind()) {
        case K::True:
        case K::Fireable:
            return f;
        case K::Not:
            return neg(std::move(kids[0]));
        case K::Or:
            return Formula::disjunction(std::move(kids[0]), std::move(kids[1]));
        case K::And:
            return Formula::conjunction(std::move(kids[0]), std::move(kids[1]));
        case K::EU:
        case K::AU:
            return Formula::until(f.kind(), std::move(kids[0]), std::move(kids[1]));
        default:
            return Formula::unary(f.kind(), std::move(kids[0]));
    }
}

}  // namespace

Formula reduce(const Formula& f) {
    std::vector<Formula> kids;
    for (std::size_t i = 0; i < f.arity(); ++i) kids.push_back(reduce(f.child(i)));
    Formula out = rebuild(f, std::move(kids));
    while (rewrite_root(out)) {
    }
    return out;
}

}  // namespace svmc
