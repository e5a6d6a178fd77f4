#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace svmc {

class CtlSyntaxError : public std::runtime_error {
public:
    CtlSyntaxError(const std::string& message, std::size_t position);
    // Byte offset into the parsed text.
    std::size_t position() const noexcept { return position_; }

private:
    std::size_t position_;
};

// CTL over the atomic proposition fireable(t). Immutable value type.
class Formula {
public:
    enum class Kind { True, Fireable, Not, Or, And, EX, EF, EG, AX, AF, AG, EU, AU };

    static Formula truth();
    // Encoded as !true.
    static Formula falsity();
    static Formula fireable(std::string transition);
    static Formula negation(Formula f);
    static Formula disjunction(Formula lhs, Formula rhs);
    static Formula conjunction(Formula lhs, Formula rhs);
    // kind ∈ {EX, EF, EG, AX, AF, AG}
    static Formula unary(Kind kind, Formula f);
    // kind ∈ {EU, AU}
    static Formula until(Kind kind, Formula lhs, Formula rhs);

    Kind kind() const noexcept { return kind_; }
    const std::string& transition() const noexcept { return transition_; }
    std::size_t arity() const noexcept { return children_.size(); }
    const Formula& child(std::size_t i) const { return children_.at(i); }
    const Formula& operand() const { return children_.at(0); }

    bool is_false() const noexcept;
    // Only True, Fireable, Not, Or, EX, EG, EU nodes.
    bool is_core() const;
    std::size_t depth() const;
    // Text accepted by parse_formula, yielding an equal formula.
    std::string to_string() const;

    friend bool operator==(const Formula&, const Formula&) = default;

private:
    Formula(Kind kind, std::string transition, std::vector<Formula> children);

    Kind kind_;
    std::string transition_;
    std::vector<Formula> children_;
};

// Grammar: true | false | fireable(ID) | !φ | φ && φ | φ || φ | EX φ | EF φ | EG φ
//          | AX φ | AF φ | AG φ | E[φ U φ] | A[φ U φ] | (φ)
// with ! and the temporal prefixes binding tighter than &&, and && tighter than ||.
Formula parse_formula(std::string_view text);

// Rewrites into the core {True, Fireable, Not, Or, EX, EG, EU}.
Formula desugar(const Formula& f);

// Local simplification to a fixpoint: ¬¬φ→φ, φ∨φ→φ, φ∨true→true, φ∨false→φ,
// EF EF φ→EF φ, EG EG φ→EG φ, AG AG φ→AG φ, EX false→false.
Formula reduce(const Formula& f);

}  // namespace svmc
