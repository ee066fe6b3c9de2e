#include "mbtd/game.hpp"

namespace mbtd {

GameState apply_move(const Graph& g, const GameState& st, int v) {
    if (v < 0 || v >= g.order())
        throw IllegalMove("move " + std::to_string(v) + " out of range");
    if (st.claimed().contains(v))
        throw IllegalMove("vertex " + std::to_string(v) + " already claimed");
    GameState next = st;
    if (st.to_move == Role::Dominator)
        next.claimed_d = st.claimed_d.with(v);
    else
        next.claimed_s = st.claimed_s.with(v);
    next.to_move = other(st.to_move);
    return next;
}

bool dominator_has_won(const Graph& g, GameVariant variant, const GameState& st) {
    for (int v = 0; v < g.order(); ++v) {
        VertexSet nbhd = variant == GameVariant::MBTD ? g.open_neighborhood(v)
                                                      : g.closed_neighborhood(v);
        if (!nbhd.intersects(st.claimed_d))
            return false;
    }
    return true;
}

bool staller_has_won(const Graph& g, GameVariant variant, const GameState& st) {
    for (int v = 0; v < g.order(); ++v) {
        VertexSet nbhd = variant == GameVariant::MBTD ? g.open_neighborhood(v)
                                                      : g.closed_neighborhood(v);
        if (nbhd.subset_of(st.claimed_s))
            return true;
    }
    return false;
}

}  // namespace mbtd
