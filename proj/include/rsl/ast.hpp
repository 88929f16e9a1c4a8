#pragma once

#include <memory>
#include <string>
#include <vector>

#include "rsl/error.hpp"

namespace rsl {

struct Formula;
struct StrategySpec;
using FormulaPtr = std::shared_ptr<const Formula>;
using SpecPtr = std::shared_ptr<const StrategySpec>;

// Formula AST. Core constructors only; box, disjunction, implication and the
// next-step modalities are provided as expanding helpers, so a parsed or
// built formula always consists of the kinds below.
struct Formula {
    enum class Kind { True, False, Prop, Not, And, Diamond, Suggests, Ensures };

    Kind kind;
    std::string name;    // Prop
    std::string action;  // Diamond, Suggests
    int player = 0;      // Suggests, Ensures
    SpecPtr spec;        // Suggests, Ensures
    FormulaPtr lhs;      // Not, Diamond (body), And, Ensures (goal)
    FormulaPtr rhs;      // And
};

// Strategy specification AST: "play a when the condition holds", choice,
// conjunction, and the move restriction. Every node carries one player; the
// factories reject mixed-player combinations.
struct StrategySpec {
    enum class Kind { IfThen, Or, And, Restrict };

    Kind kind;
    int player = 1;
    std::string action;    // IfThen target move, Restrict removed move
    FormulaPtr condition;  // IfThen
    SpecPtr lhs;           // Or, And, Restrict (inner)
    SpecPtr rhs;           // Or, And
};

inline int spec_player(const SpecPtr& s) { return s->player; }

// Basic-fragment check: propositions, negation, conjunction and the move
// diamond only. Conditions of specifications and goals of the ensure
// modality must stay inside this fragment.
inline bool is_basic(const FormulaPtr& f) {  // NOLINT(misc-no-recursion)
    switch (f->kind) {
        case Formula::Kind::True:
        case Formula::Kind::False:
        case Formula::Kind::Prop:
            return true;
        case Formula::Kind::Not:
        case Formula::Kind::Diamond:
            return is_basic(f->lhs);
        case Formula::Kind::And:
            return is_basic(f->lhs) && is_basic(f->rhs);
        case Formula::Kind::Suggests:
        case Formula::Kind::Ensures:
            return false;
    }
    return false;
}

inline void require_player(int player) {
    if (player != 1 && player != 2)
        throw Error("player must be 1 or 2, got " + std::to_string(player));
}

// --- formula factories ----------------------------------------------------

inline FormulaPtr f_true() {
    static const FormulaPtr one = std::make_shared<Formula>(Formula{Formula::Kind::True});
    return one;
}

inline FormulaPtr f_false() {
    static const FormulaPtr one = std::make_shared<Formula>(Formula{Formula::Kind::False});
    return one;
}

inline FormulaPtr f_prop(const std::string& name) {
    Formula f{Formula::Kind::Prop};
    f.name = name;
    return std::make_shared<Formula>(std::move(f));
}

// The reserved turn proposition for a player.
inline FormulaPtr f_turn(int player) {
    require_player(player);
    return f_prop("turn_" + std::to_string(player));
}

inline FormulaPtr f_not(FormulaPtr body) {
    Formula f{Formula::Kind::Not};
    f.lhs = std::move(body);
    return std::make_shared<Formula>(std::move(f));
}

inline FormulaPtr f_and(FormulaPtr l, FormulaPtr r) {
    Formula f{Formula::Kind::And};
    f.lhs = std::move(l);
    f.rhs = std::move(r);
    return std::make_shared<Formula>(std::move(f));
}

inline FormulaPtr f_diamond(const std::string& action, FormulaPtr body) {
    Formula f{Formula::Kind::Diamond};
    f.action = action;
    f.lhs = std::move(body);
    return std::make_shared<Formula>(std::move(f));
}

inline FormulaPtr f_suggests(SpecPtr spec, int player, const std::string& action) {
    require_player(player);
    if (spec->player != player)
        throw Error("player annotation mismatch: specification is for player " +
                    std::to_string(spec->player));
    Formula f{Formula::Kind::Suggests};
    f.spec = std::move(spec);
    f.player = player;
    f.action = action;
    return std::make_shared<Formula>(std::move(f));
}

inline FormulaPtr f_ensures(SpecPtr spec, int player, FormulaPtr goal) {
    require_player(player);
    if (spec->player != player)
        throw Error("player annotation mismatch: specification is for player " +
                    std::to_string(spec->player));
    if (!is_basic(goal)) throw Error("the goal of ~> must be a basic formula");
    Formula f{Formula::Kind::Ensures};
    f.spec = std::move(spec);
    f.player = player;
    f.lhs = std::move(goal);
    return std::make_shared<Formula>(std::move(f));
}

// Derived forms; these expand so the AST stays in core constructors.
inline FormulaPtr f_or(FormulaPtr l, FormulaPtr r) {
    return f_not(f_and(f_not(std::move(l)), f_not(std::move(r))));
}

inline FormulaPtr f_implies(FormulaPtr l, FormulaPtr r) {
    return f_not(f_and(std::move(l), f_not(std::move(r))));
}

inline FormulaPtr f_iff(FormulaPtr l, FormulaPtr r) {
    return f_and(f_implies(l, r), f_implies(r, l));
}

inline FormulaPtr f_box(const std::string& action, FormulaPtr body) {
    return f_not(f_diamond(action, f_not(std::move(body))));
}

// "Some move leads to f": the disjunction of diamonds over the alphabet.
inline FormulaPtr f_some_next(const std::vector<std::string>& alphabet, const FormulaPtr& body) {
    if (alphabet.empty()) return f_false();
    FormulaPtr out;
    for (const auto& a : alphabet) {
        FormulaPtr step = f_diamond(a, body);
        out = out ? f_or(out, step) : step;
    }
    return out;
}

inline FormulaPtr f_all_next(const std::vector<std::string>& alphabet, const FormulaPtr& body) {
    return f_not(f_some_next(alphabet, f_not(body)));
}

// Declared after f_suggests: some available move is also suggested.
inline FormulaPtr f_enabled_prop(const std::vector<std::string>& alphabet, const SpecPtr& spec) {
    FormulaPtr out;
    for (const auto& a : alphabet) {
        FormulaPtr step = f_and(f_diamond(a, f_true()), f_suggests(spec, spec->player, a));
        out = out ? f_or(out, step) : step;
    }
    return out ? out : f_false();
}

// --- specification factories ----------------------------------------------

inline SpecPtr spec_if_then(FormulaPtr condition, const std::string& action, int player) {
    require_player(player);
    if (!is_basic(condition)) throw Error("specification conditions must be basic formulas");
    StrategySpec s{StrategySpec::Kind::IfThen};
    s.player = player;
    s.action = action;
    s.condition = std::move(condition);
    return std::make_shared<StrategySpec>(std::move(s));
}

inline SpecPtr spec_combine(StrategySpec::Kind kind, SpecPtr l, SpecPtr r) {
    if (l->player != r->player)
        throw Error("player annotation mismatch inside a specification");
    StrategySpec s{kind};
    s.player = l->player;
    s.lhs = std::move(l);
    s.rhs = std::move(r);
    return std::make_shared<StrategySpec>(std::move(s));
}

inline SpecPtr spec_or(SpecPtr l, SpecPtr r) {
    return spec_combine(StrategySpec::Kind::Or, std::move(l), std::move(r));
}

inline SpecPtr spec_and(SpecPtr l, SpecPtr r) {
    return spec_combine(StrategySpec::Kind::And, std::move(l), std::move(r));
}

inline SpecPtr spec_restrict(SpecPtr inner, const std::string& action, int player) {
    require_player(player);
    if (inner->player != player)
        throw Error("player annotation mismatch inside a specification");
    StrategySpec s{StrategySpec::Kind::Restrict};
    s.player = player;
    s.action = action;
    s.lhs = std::move(inner);
    return std::make_shared<StrategySpec>(std::move(s));
}

// --- structural predicates and equality ------------------------------------

inline bool spec_has_restrict(const SpecPtr& s) {  // NOLINT(misc-no-recursion)
    switch (s->kind) {
        case StrategySpec::Kind::IfThen:
            return false;
        case StrategySpec::Kind::Restrict:
            return true;
        case StrategySpec::Kind::Or:
        case StrategySpec::Kind::And:
            return spec_has_restrict(s->lhs) || spec_has_restrict(s->rhs);
    }
    return false;
}

inline bool formula_has_restrict(const FormulaPtr& f) {  // NOLINT(misc-no-recursion)
    switch (f->kind) {
        case Formula::Kind::True:
        case Formula::Kind::False:
        case Formula::Kind::Prop:
            return false;
        case Formula::Kind::Not:
        case Formula::Kind::Diamond:
            return formula_has_restrict(f->lhs);
        case Formula::Kind::And:
            return formula_has_restrict(f->lhs) || formula_has_restrict(f->rhs);
        case Formula::Kind::Suggests:
            return spec_has_restrict(f->spec);
        case Formula::Kind::Ensures:
            return spec_has_restrict(f->spec) || formula_has_restrict(f->lhs);
    }
    return false;
}

bool equal(const FormulaPtr& a, const FormulaPtr& b);

inline bool equal(const SpecPtr& a, const SpecPtr& b) {  // NOLINT(misc-no-recursion)
    if (a == b) return true;
    if (!a || !b) return false;
    if (a->kind != b->kind || a->player != b->player || a->action != b->action) return false;
    switch (a->kind) {
        case StrategySpec::Kind::IfThen:
            return equal(a->condition, b->condition);
        case StrategySpec::Kind::Restrict:
            return equal(a->lhs, b->lhs);
        case StrategySpec::Kind::Or:
        case StrategySpec::Kind::And:
            return equal(a->lhs, b->lhs) && equal(a->rhs, b->rhs);
    }
    return false;
}

inline bool equal(const FormulaPtr& a, const FormulaPtr& b) {  // NOLINT(misc-no-recursion)
    if (a == b) return true;
    if (!a || !b) return false;
    if (a->kind != b->kind) return false;
    switch (a->kind) {
        case Formula::Kind::True:
        case Formula::Kind::False:
            return true;
        case Formula::Kind::Prop:
            return a->name == b->name;
        case Formula::Kind::Not:
            return equal(a->lhs, b->lhs);
        case Formula::Kind::And:
            return equal(a->lhs, b->lhs) && equal(a->rhs, b->rhs);
        case Formula::Kind::Diamond:
            return a->action == b->action && equal(a->lhs, b->lhs);
        case Formula::Kind::Suggests:
            return a->player == b->player && a->action == b->action && equal(a->spec, b->spec);
        case Formula::Kind::Ensures:
            return a->player == b->player && equal(a->spec, b->spec) && equal(a->lhs, b->lhs);
    }
    return false;
}

// --- canonical printing -----------------------------------------------------

std::string to_string(const FormulaPtr& f);

inline std::string to_string(const SpecPtr& s) {  // NOLINT(misc-no-recursion)
    switch (s->kind) {
        case StrategySpec::Kind::IfThen:
            return "[" + to_string(s->condition) + " -> " + s->action + "]^" +
                   std::to_string(s->player);
        case StrategySpec::Kind::Or:
            return "(" + to_string(s->lhs) + " + " + to_string(s->rhs) + ")";
        case StrategySpec::Kind::And:
            return "(" + to_string(s->lhs) + " . " + to_string(s->rhs) + ")";
        case StrategySpec::Kind::Restrict:
            return "(" + to_string(s->lhs) + " ! " + s->action + ")^" + std::to_string(s->player);
    }
    return "?";
}

inline std::string to_string(const FormulaPtr& f) {  // NOLINT(misc-no-recursion)
    switch (f->kind) {
        case Formula::Kind::True:
            return "true";
        case Formula::Kind::False:
            return "false";
        case Formula::Kind::Prop:
            return f->name;
        case Formula::Kind::Not:
            return "~" + to_string(f->lhs);
        case Formula::Kind::And:
            return "(" + to_string(f->lhs) + " & " + to_string(f->rhs) + ")";
        case Formula::Kind::Diamond:
            return "<" + f->action + ">" + to_string(f->lhs);
        case Formula::Kind::Suggests:
            return "sug " + to_string(f->spec) + ":" + std::to_string(f->player) + ":" + f->action;
        case Formula::Kind::Ensures:
            return to_string(f->spec) + " ~> " + std::to_string(f->player) + ": " +
                   to_string(f->lhs);
    }
    return "?";
}

// --- size metric -------------------------------------------------------------
// Length of a formula or specification: one unit per AST node plus one unit
// per bracket pair the canonical printer emits. Used by the translation and
// reduction length bounds.

std::size_t formula_size(const FormulaPtr& f);

inline std::size_t spec_size(const SpecPtr& s) {  // NOLINT(misc-no-recursion)
    switch (s->kind) {
        case StrategySpec::Kind::IfThen:
            return 2 + formula_size(s->condition);  // node + "[]"
        case StrategySpec::Kind::Or:
        case StrategySpec::Kind::And:
            return 2 + spec_size(s->lhs) + spec_size(s->rhs);  // node + "()"
        case StrategySpec::Kind::Restrict:
            return 2 + spec_size(s->lhs);  // node + "()"
    }
    return 1;
}

inline std::size_t formula_size(const FormulaPtr& f) {  // NOLINT(misc-no-recursion)
    switch (f->kind) {
        case Formula::Kind::True:
        case Formula::Kind::False:
        case Formula::Kind::Prop:
            return 1;
        case Formula::Kind::Not:
            return 1 + formula_size(f->lhs);
        case Formula::Kind::And:
            return 2 + formula_size(f->lhs) + formula_size(f->rhs);  // node + "()"
        case Formula::Kind::Diamond:
            return 2 + formula_size(f->lhs);  // node + "<>"
        case Formula::Kind::Suggests:
            return 1 + spec_size(f->spec);
        case Formula::Kind::Ensures:
            return 1 + spec_size(f->spec) + formula_size(f->lhs);
    }
    return 1;
}

}  // namespace rsl
