#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "rsl/error.hpp"

namespace rsl {

using Payoff = std::pair<long long, long long>;

constexpr int opponent(int player) { return 3 - player; }

inline long long payoff_for(const Payoff& p, int player) {
    return player == 1 ? p.first : p.second;
}

// Finite extensive-form game tree. Edges are a partial function
// (state, action) -> state. `turn` is defined exactly on internal states of a
// well-formed tree; derived trees (strategy trees, pruned trees) may keep a
// turn entry on a state whose outgoing edges were all removed, which is what
// the ensure-modality semantics relies on. Payoffs, when present, live on
// leaves. Values are immutable by convention once built: every operation
// below takes the tree by const reference and returns fresh values.
struct GameTree {
    std::set<std::string> states;
    std::string root;
    std::map<std::string, std::map<std::string, std::string>> edges;  // src -> action -> dst
    std::map<std::string, int> turn;                                  // state -> {1,2}
    std::map<std::string, std::set<std::string>> valuation;           // state -> props
    std::map<std::string, Payoff> payoffs;                            // leaf -> (u1, u2)
    std::set<std::string> alphabet;                                   // the move alphabet

    void add_state(const std::string& s) { states.insert(s); }

    void add_edge(const std::string& src, const std::string& action, const std::string& dst) {
        states.insert(src);
        states.insert(dst);
        edges[src][action] = dst;
        alphabet.insert(action);
    }

    void add_prop(const std::string& s, const std::string& prop) {
        states.insert(s);
        valuation[s].insert(prop);
    }

    bool has_state(const std::string& s) const { return states.count(s) != 0; }

    void require_state(const std::string& s) const {
        if (!has_state(s)) throw LookupError("unknown state '" + s + "'");
    }

    const std::map<std::string, std::string>& edges_from(const std::string& s) const {
        static const std::map<std::string, std::string> kEmpty;
        auto it = edges.find(s);
        return it == edges.end() ? kEmpty : it->second;
    }

    bool is_leaf(const std::string& s) const { return edges_from(s).empty(); }

    std::optional<int> turn_of(const std::string& s) const {
        auto it = turn.find(s);
        if (it == turn.end()) return std::nullopt;
        return it->second;
    }

    bool turn_is(const std::string& s, int player) const {
        auto t = turn_of(s);
        return t && *t == player;
    }

    std::set<std::string> props_of(const std::string& s) const {
        auto it = valuation.find(s);
        return it == valuation.end() ? std::set<std::string>{} : it->second;
    }

    std::optional<Payoff> payoff_of(const std::string& s) const {
        auto it = payoffs.find(s);
        if (it == payoffs.end()) return std::nullopt;
        return it->second;
    }

    std::optional<std::string> successor(const std::string& s, const std::string& action) const {
        const auto& out = edges_from(s);
        auto it = out.find(action);
        if (it == out.end()) return std::nullopt;
        return it->second;
    }

    // Child -> parent map over the edge relation.
    std::map<std::string, std::string> parents() const {
        std::map<std::string, std::string> up;
        for (const auto& [src, out] : edges)
            for (const auto& [action, dst] : out) up[dst] = src;
        return up;
    }

    // States in deterministic (lexicographic) order.
    std::vector<std::string> state_list() const {
        return std::vector<std::string>(states.begin(), states.end());
    }

    std::vector<std::string> action_list() const {
        return std::vector<std::string>(alphabet.begin(), alphabet.end());
    }

    int depth() const {
        if (!has_state(root)) return 0;
        return depth_below(root);
    }

    bool operator==(const GameTree&) const = default;

  private:
    int depth_below(const std::string& s) const {  // NOLINT(misc-no-recursion)
        int best = 0;
        for (const auto& [action, dst] : edges_from(s))
            best = std::max(best, 1 + depth_below(dst));
        return best;
    }
};

// Available moves at s: the actions with an outgoing edge.
inline std::set<std::string> moves(const GameTree& tree, const std::string& s) {
    tree.require_state(s);
    std::set<std::string> out;
    for (const auto& [action, dst] : tree.edges_from(s)) out.insert(action);
    return out;
}

// Set-valued strategy for one player: a map from that player's states to
// sets of moves. The empty set is a valid assignment.
struct Strategy {
    int player = 1;
    std::map<std::string, std::set<std::string>> assignment;

    bool operator==(const Strategy&) const = default;
};

// Moves the strategy returns at s; empty at states the player does not own.
// Throws IncompleteStrategyError when the player owns s but the strategy is
// silent there.
inline std::set<std::string> returned_moves(const GameTree& tree, const Strategy& mu,
                                            const std::string& s) {
    if (!tree.turn_is(s, mu.player)) return {};
    auto it = mu.assignment.find(s);
    if (it == mu.assignment.end())
        throw IncompleteStrategyError("strategy for player " + std::to_string(mu.player) +
                                      " is undefined at state '" + s + "'");
    return it->second;
}

// Drops the given move from every assignment; the player keeps the rest.
inline Strategy restrict_strategy(const Strategy& mu, const std::string& action) {
    Strategy out;
    out.player = mu.player;
    for (const auto& [s, actions] : mu.assignment) {
        std::set<std::string> kept = actions;
        kept.erase(action);
        out.assignment.emplace(s, std::move(kept));
    }
    return out;
}

namespace detail {

// Copies per-state attributes of `src` for `s` into `dst`.
inline void copy_state_info(const GameTree& src, const std::string& s, GameTree& dst) {
    dst.add_state(s);
    if (auto t = src.turn_of(s)) dst.turn[s] = *t;
    auto vit = src.valuation.find(s);
    if (vit != src.valuation.end()) dst.valuation[s] = vit->second;
    if (auto p = src.payoff_of(s)) dst.payoffs[s] = *p;
}

}  // namespace detail

// Least subtree of `tree` containing the root in which the strategizing
// player keeps exactly the assigned moves (intersected with the available
// ones) and the opponent keeps everything. Turn entries survive even when a
// state loses all its edges.
inline GameTree strategy_tree(const GameTree& tree, const Strategy& mu) {
    tree.require_state(tree.root);
    GameTree out;
    out.root = tree.root;
    out.alphabet = tree.alphabet;

    std::vector<std::string> work{tree.root};
    while (!work.empty()) {
        std::string s = work.back();
        work.pop_back();
        if (out.has_state(s)) continue;
        detail::copy_state_info(tree, s, out);
        if (tree.is_leaf(s)) continue;
        bool own = tree.turn_is(s, mu.player);
        std::set<std::string> kept;
        if (own) kept = returned_moves(tree, mu, s);
        for (const auto& [action, dst] : tree.edges_from(s)) {
            if (own && kept.count(action) == 0) continue;
            out.edges[s][action] = dst;
            work.push_back(dst);
        }
    }
    return out;
}

// Component of the strategy tree, with the restricted player's a-edges
// removed, that contains `s`. The opponent's a-edges survive. The component
// is returned as a tree rooted at its topmost state.
inline GameTree restricted_strategy_tree(const GameTree& tree, const Strategy& mu,
                                         const std::string& action, const std::string& s) {
    tree.require_state(s);
    GameTree base = strategy_tree(tree, mu);
    if (!base.has_state(s))
        throw ComponentError("state '" + s + "' is not part of any surviving component");

    // Surviving directed edges after deleting the player's `action` edges.
    std::map<std::string, std::map<std::string, std::string>> kept;
    std::map<std::string, std::vector<std::string>> undirected;
    for (const auto& [src, out] : base.edges) {
        for (const auto& [a, dst] : out) {
            if (a == action && base.turn_is(src, mu.player)) continue;
            kept[src][a] = dst;
            undirected[src].push_back(dst);
            undirected[dst].push_back(src);
        }
    }

    // Connected component of s.
    std::set<std::string> component;
    std::vector<std::string> work{s};
    while (!work.empty()) {
        std::string u = work.back();
        work.pop_back();
        if (!component.insert(u).second) continue;
        auto it = undirected.find(u);
        if (it == undirected.end()) continue;
        for (const auto& v : it->second) work.push_back(v);
    }

    // The component's topmost state: the unique member without a parent
    // inside the component.
    std::set<std::string> with_parent;
    for (const auto& [src, out] : kept) {
        if (component.count(src) == 0) continue;
        for (const auto& [a, dst] : out) with_parent.insert(dst);
    }
    std::string top = s;
    for (const auto& u : component) {
        if (with_parent.count(u) == 0) {
            top = u;
            break;
        }
    }

    GameTree out;
    out.root = top;
    out.alphabet = tree.alphabet;
    for (const auto& u : component) detail::copy_state_info(base, u, out);
    for (const auto& [src, outEdges] : kept) {
        if (component.count(src) == 0) continue;
        for (const auto& [a, dst] : outEdges) out.edges[src][a] = dst;
    }
    return out;
}

// Model diagnostic: a code, the offending subject, and a readable message.
struct Diagnostic {
    std::string code;
    std::string subject;
    std::string message;

    bool operator==(const Diagnostic&) const = default;
};

// Structural well-formedness check. Returns every violation; an empty list
// means the tree satisfies all invariants.
inline std::vector<Diagnostic> validate_model(const GameTree& tree) {
    std::vector<Diagnostic> out;
    auto report = [&out](const std::string& code, const std::string& subject,
                         const std::string& message) {
        out.push_back(Diagnostic{code, subject, message});
    };

    if (tree.root.empty()) {
        report("missing-root", "", "no root state declared");
        return out;
    }
    if (!tree.has_state(tree.root))
        report("unknown-root", tree.root, "root '" + tree.root + "' is not a declared state");

    std::map<std::string, int> incoming;
    for (const auto& [src, outEdges] : tree.edges) {
        if (!tree.has_state(src))
            report("undeclared-state", src, "edge source '" + src + "' is not declared");
        for (const auto& [action, dst] : outEdges) {
            if (!tree.has_state(dst))
                report("undeclared-state", dst, "edge target '" + dst + "' is not declared");
            ++incoming[dst];
            if (tree.alphabet.count(action) == 0)
                report("unknown-action", action,
                       "edge action '" + action + "' is missing from the alphabet");
        }
    }

    if (incoming.count(tree.root) != 0)
        report("cycle", tree.root, "root '" + tree.root + "' has an incoming edge");
    for (const auto& [s, n] : incoming)
        if (n > 1 && s != tree.root)
            report("multiple-parents", s, "state '" + s + "' has " + std::to_string(n) + " parents");

    // Reachability from the root; anything missed is disconnected. A
    // disconnected part may hide a cycle, so walk with a visited set.
    std::set<std::string> reached;
    std::vector<std::string> work;
    if (tree.has_state(tree.root)) work.push_back(tree.root);
    while (!work.empty()) {
        std::string u = work.back();
        work.pop_back();
        if (!reached.insert(u).second) continue;
        for (const auto& [action, dst] : tree.edges_from(u)) work.push_back(dst);
    }
    for (const auto& s : tree.states)
        if (reached.count(s) == 0 && s != tree.root)
            report("unreachable", s, "state '" + s + "' is not reachable from the root");

    // Cycle detection over the whole edge graph (grey/black coloring).
    std::map<std::string, int> color;  // 0 new, 1 in progress, 2 done
    for (const auto& start : tree.states) {
        if (color[start] != 0) continue;
        std::vector<std::pair<std::string, bool>> stack{{start, false}};
        while (!stack.empty()) {
            auto [u, done] = stack.back();
            stack.pop_back();
            if (done) {
                color[u] = 2;
                continue;
            }
            if (color[u] == 1) continue;
            color[u] = 1;
            stack.push_back({u, true});
            for (const auto& [action, dst] : tree.edges_from(u)) {
                if (color[dst] == 1)
                    report("cycle", dst, "edge " + u + " -" + action + "-> " + dst + " closes a cycle");
                else if (color[dst] == 0)
                    stack.push_back({dst, false});
            }
        }
    }

    for (const auto& s : tree.states) {
        bool leaf = tree.is_leaf(s);
        bool has_turn = tree.turn_of(s).has_value();
        if (leaf && has_turn)
            report("turn-on-leaf", s, "leaf '" + s + "' carries a turn assignment");
        if (!leaf && !has_turn)
            report("turn-missing", s, "internal state '" + s + "' has no turn assignment");
        if (!leaf && tree.payoff_of(s))
            report("payoff-on-internal", s, "internal state '" + s + "' carries a payoff");
        if (leaf && !tree.payoffs.empty() && !tree.payoff_of(s))
            report("payoff-missing", s, "leaf '" + s + "' has no payoff while others do");
    }

    for (const auto& [s, props] : tree.valuation)
        for (const auto& p : props)
            if (p == "turn_1" || p == "turn_2")
                report("reserved-prop", s, "proposition '" + p + "' at '" + s + "' is reserved");

    return out;
}

// Strategy sanity against a model. Assigning an unavailable move is a
// diagnostic here, not a construction error: the enabled-move semantics
// distinguishes available from unavailable suggestions.
inline std::vector<Diagnostic> validate_strategy(const GameTree& tree, const Strategy& mu) {
    std::vector<Diagnostic> out;
    for (const auto& [s, actions] : mu.assignment) {
        if (!tree.has_state(s)) {
            out.push_back({"foreign-state", s, "strategy mentions unknown state '" + s + "'"});
            continue;
        }
        if (!tree.turn_is(s, mu.player))
            out.push_back({"not-owner", s,
                           "state '" + s + "' is not owned by player " + std::to_string(mu.player)});
        auto avail = moves(tree, s);
        for (const auto& a : actions)
            if (avail.count(a) == 0)
                out.push_back({"unavailable-action", s,
                               "move '" + a + "' assigned at '" + s + "' is not available there"});
    }
    return out;
}

}  // namespace rsl
