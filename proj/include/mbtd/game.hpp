#pragma once

#include <stdexcept>

#include "mbtd/graph.hpp"

namespace mbtd {

// Which winning-set family the Maker (Dominator) is after.
enum class GameVariant { MBD, MBTD };

enum class Role { Dominator, Staller };

inline Role other(Role r) { return r == Role::Dominator ? Role::Staller : Role::Dominator; }

struct IllegalMove : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Claimed vertices of both players plus whose turn it is. Small value type;
// apply_move returns a fresh state.
struct GameState {
    VertexSet claimed_d;
    VertexSet claimed_s;
    Role to_move = Role::Dominator;

    VertexSet claimed() const { return claimed_d | claimed_s; }
    bool operator==(const GameState&) const = default;
};

inline GameState new_game(const Graph&, Role starter) {
    return GameState{VertexSet(), VertexSet(), starter};
}

inline VertexSet legal_moves(const Graph& g, const GameState& st) {
    return st.claimed().complement(g.order());
}

GameState apply_move(const Graph& g, const GameState& st, int v);

// MBD: claimed_d is a dominating set; MBTD: a total dominating set.
bool dominator_has_won(const Graph& g, GameVariant variant, const GameState& st);

// Transversal condition: Staller holds all of N(v) (MBTD) resp. N[v] (MBD)
// for some vertex v, which kills every remaining winning set of Dominator.
bool staller_has_won(const Graph& g, GameVariant variant, const GameState& st);

}  // namespace mbtd
