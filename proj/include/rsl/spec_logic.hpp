#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "rsl/ast.hpp"
#include "rsl/game.hpp"
#include "rsl/rng.hpp"

namespace rsl {

// Two readings of the enabled set of a restricted specification:
//   set_minus: (sigma ! a)(s) = sigma(s) - {a}
//   axiom:     (sigma ! a)(s) = sigma(s) when the player owns s and a is not
//              suggested, empty otherwise
// They agree exactly at states owned by the restricted player where the
// removed move was not suggested anyway; the divergence elsewhere is
// surfaced by the axiom suite and the reduction suite.
enum class RestrictionSemantics { set_minus, axiom };

inline const char* to_string(RestrictionSemantics sem) {
    return sem == RestrictionSemantics::set_minus ? "set-minus" : "axiom";
}

bool check_basic(const GameTree& model, const std::string& s, const FormulaPtr& f);

// Enabled moves of a specification at a state. The if-then case suggests its
// move exactly at owned states where the condition holds (and nothing at all
// when that move is unavailable there); everywhere else it allows the whole
// alphabet. Choice is union, conjunction is intersection.
inline std::set<std::string> enabled_moves(
    const GameTree& model, const SpecPtr& spec, const std::string& s,
    RestrictionSemantics sem = RestrictionSemantics::set_minus) {  // NOLINT(misc-no-recursion)
    model.require_state(s);
    switch (spec->kind) {
        case StrategySpec::Kind::IfThen: {
            if (model.turn_is(s, spec->player) && check_basic(model, s, spec->condition)) {
                if (moves(model, s).count(spec->action)) return {spec->action};
                return {};
            }
            return model.alphabet;
        }
        case StrategySpec::Kind::Or: {
            auto l = enabled_moves(model, spec->lhs, s, sem);
            auto r = enabled_moves(model, spec->rhs, s, sem);
            l.insert(r.begin(), r.end());
            return l;
        }
        case StrategySpec::Kind::And: {
            auto l = enabled_moves(model, spec->lhs, s, sem);
            auto r = enabled_moves(model, spec->rhs, s, sem);
            std::set<std::string> out;
            for (const auto& a : l)
                if (r.count(a)) out.insert(a);
            return out;
        }
        case StrategySpec::Kind::Restrict: {
            auto inner = enabled_moves(model, spec->lhs, s, sem);
            if (sem == RestrictionSemantics::set_minus) {
                inner.erase(spec->action);
                return inner;
            }
            if (!model.turn_is(s, spec->player) || inner.count(spec->action)) return {};
            return inner;
        }
    }
    return {};
}

// Evaluates a basic formula (propositions, ~, &, <a>). turn_1/turn_2 are
// resolved from the turn function, never from the valuation.
inline bool check_basic(const GameTree& model, const std::string& s,
                        const FormulaPtr& f) {  // NOLINT(misc-no-recursion)
    model.require_state(s);
    switch (f->kind) {
        case Formula::Kind::True:
            return true;
        case Formula::Kind::False:
            return false;
        case Formula::Kind::Prop: {
            if (f->name == "turn_1") return model.turn_is(s, 1);
            if (f->name == "turn_2") return model.turn_is(s, 2);
            return model.props_of(s).count(f->name) != 0;
        }
        case Formula::Kind::Not:
            return !check_basic(model, s, f->lhs);
        case Formula::Kind::And:
            return check_basic(model, s, f->lhs) && check_basic(model, s, f->rhs);
        case Formula::Kind::Diamond: {
            if (model.alphabet.count(f->action) == 0)
                throw LookupError("unknown action '" + f->action + "'");
            auto next = model.successor(s, f->action);
            return next && check_basic(model, *next, f->lhs);
        }
        case Formula::Kind::Suggests:
        case Formula::Kind::Ensures:
            throw Error("not a basic formula");
    }
    return false;
}

// Conformance of a strategy to a specification at a state. The if-then case
// binds only at states the player owns; elsewhere it holds vacuously. A
// restriction demands that the removed move is not returned here and that
// the correspondingly restricted strategy conforms to the inner
// specification.
inline bool conforms(const GameTree& model, const Strategy& mu, const std::string& s,
                     const SpecPtr& spec) {  // NOLINT(misc-no-recursion)
    model.require_state(s);
    if (mu.player != spec->player)
        throw Error("strategy is for player " + std::to_string(mu.player) +
                    " but the specification is for player " + std::to_string(spec->player));
    switch (spec->kind) {
        case StrategySpec::Kind::IfThen: {
            if (!model.turn_is(s, spec->player)) return true;
            if (!check_basic(model, s, spec->condition)) return true;
            return returned_moves(model, mu, s).count(spec->action) != 0;
        }
        case StrategySpec::Kind::Or:
            return conforms(model, mu, s, spec->lhs) || conforms(model, mu, s, spec->rhs);
        case StrategySpec::Kind::And:
            return conforms(model, mu, s, spec->lhs) && conforms(model, mu, s, spec->rhs);
        case StrategySpec::Kind::Restrict: {
            if (returned_moves(model, mu, s).count(spec->action)) return false;
            return conforms(model, restrict_strategy(mu, spec->action), s, spec->lhs);
        }
    }
    return false;
}

// --- strategy enumeration ----------------------------------------------------

// Number of set-valued strategies for the player: the product of 2^|moves(s)|
// over the player's internal states. Returns nullopt on overflow.
inline std::optional<std::uint64_t> strategy_space_size(const GameTree& tree, int player) {
    std::uint64_t total = 1;
    for (const auto& s : tree.states) {
        if (!tree.turn_is(s, player)) continue;
        std::size_t m = moves(tree, s).size();
        if (m >= 63) return std::nullopt;
        std::uint64_t options = 1ULL << m;
        if (total > UINT64_MAX / options) return std::nullopt;
        total *= options;
    }
    return total;
}

namespace detail {

inline std::vector<std::string> owned_states(const GameTree& tree, int player) {
    std::vector<std::string> out;
    for (const auto& s : tree.states)
        if (tree.turn_is(s, player)) out.push_back(s);
    return out;
}

}  // namespace detail

// All set-valued strategies of the player, subset choices in bitmask order.
// Call only when strategy_space_size fits the cap.
inline std::vector<Strategy> enumerate_strategies(const GameTree& tree, int player) {
    auto states = detail::owned_states(tree, player);
    std::vector<std::vector<std::string>> options;
    for (const auto& s : states) {
        auto ms = moves(tree, s);
        options.emplace_back(ms.begin(), ms.end());
    }
    std::vector<Strategy> out;
    Strategy current;
    current.player = player;
    // Mixed-radix counter over per-state subsets.
    std::vector<std::uint64_t> mask(states.size(), 0);
    while (true) {
        current.assignment.clear();
        for (std::size_t i = 0; i < states.size(); ++i) {
            std::set<std::string> chosen;
            for (std::size_t b = 0; b < options[i].size(); ++b)
                if (mask[i] & (1ULL << b)) chosen.insert(options[i][b]);
            current.assignment[states[i]] = std::move(chosen);
        }
        out.push_back(current);
        std::size_t i = 0;
        for (; i < states.size(); ++i) {
            if (++mask[i] < (1ULL << options[i].size())) break;
            mask[i] = 0;
        }
        if (i == states.size()) break;
        if (states.empty()) break;
    }
    return out;
}

inline Strategy random_strategy(const GameTree& tree, int player, Rng& rng,
                                bool singleton = false) {
    Strategy mu;
    mu.player = player;
    for (const auto& s : detail::owned_states(tree, player)) {
        auto ms = moves(tree, s);
        std::vector<std::string> all(ms.begin(), ms.end());
        std::set<std::string> chosen;
        if (singleton) {
            chosen.insert(all[rng.pick(all.size())]);
        } else {
            for (const auto& a : all)
                if (rng.chance(50)) chosen.insert(a);
        }
        mu.assignment[s] = std::move(chosen);
    }
    return mu;
}

struct EquivOptions {
    std::uint64_t exhaustive_cap = 4096;  // enumerate exhaustively up to this many strategies
    bool allow_sampling = true;           // otherwise a too-large space is a capacity error
    std::size_t samples = 64;             // strategies sampled per model beyond the cap
    std::uint64_t seed = kDefaultSeed;
};

// Equivalence of two specifications with respect to conformance, tested over
// the supplied models, all (or sampled) strategies of the shared player, and
// every state.
inline bool spec_equiv(const std::vector<GameTree>& models, const SpecPtr& a, const SpecPtr& b,
                       const EquivOptions& options = {}) {
    if (a->player != b->player) throw Error("specifications do not share a player");
    int player = a->player;
    Rng rng(options.seed);
    for (const auto& model : models) {
        std::vector<Strategy> strategies;
        auto space = strategy_space_size(model, player);
        if (space && *space <= options.exhaustive_cap) {
            strategies = enumerate_strategies(model, player);
        } else if (options.allow_sampling) {
            for (std::size_t i = 0; i < options.samples; ++i)
                strategies.push_back(random_strategy(model, player, rng));
        } else {
            throw CapacityError("strategy space exceeds the cap of " +
                                std::to_string(options.exhaustive_cap) +
                                " and sampling is disabled");
        }
        for (const auto& mu : strategies)
            for (const auto& s : model.states)
                if (conforms(model, mu, s, a) != conforms(model, mu, s, b)) return false;
    }
    return true;
}

}  // namespace rsl
