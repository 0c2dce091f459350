#include "atmatch/painting.hpp"

#include <algorithm>
#include <bit>

#include "atmatch/error.hpp"

namespace atmatch {

namespace {

constexpr std::size_t kHardVertexLimit = 12;  // 12 mask bits + 12 x 4 token bits fit a 64-bit key

}  // namespace

std::string_view player_name(Player p) { return p == Player::Lister ? "Lister" : "Painter"; }

PaintSolver::PaintSolver(const PlaneGraph& g, const ExponentVector& tokens, int d, PaintOptions options)
    : graph_(g), order_(g.vertices().begin(), g.vertices().end()), defect_(d), options_(options) {
    const std::size_t n = order_.size();
    if (n > std::min(options_.max_vertices, kHardVertexLimit))
        throw Error(ErrorCode::SearchBudgetExceeded, std::to_string(n) + " vertices exceed the painting guard of " +
                                                         std::to_string(std::min(options_.max_vertices,
                                                                                 kHardVertexLimit)));
    if (d < 0) throw Error(ErrorCode::PreconditionViolated, "defect must be non-negative");
    adjacency_.assign(n, 0);
    for (std::size_t i = 0; i < n; ++i) {
        for (VertexId u : g.rotation(order_[i])) {
            auto j = static_cast<std::size_t>(std::lower_bound(order_.begin(), order_.end(), u) - order_.begin());
            adjacency_[i] |= std::uint32_t{1} << j;
        }
        start_tokens_.push_back(tokens[order_[i]]);
    }
    for (const auto& [v, t] : tokens.entries())
        if (!g.contains(v)) throw Error(ErrorCode::UnknownVertex, "token count for a vertex outside the graph");
}

GameState PaintSolver::initial_state() const {
    const std::size_t n = order_.size();
    return {n == 0 ? 0u : static_cast<std::uint32_t>((std::uint64_t{1} << n) - 1), start_tokens_};
}

std::vector<VertexId> PaintSolver::vertices_of(std::uint32_t mask) const {
    std::vector<VertexId> out;
    for (std::size_t i = 0; i < order_.size(); ++i)
        if (mask >> i & 1) out.push_back(order_[i]);
    return out;
}

std::uint64_t PaintSolver::key(std::uint32_t uncolored, const std::vector<int>& tokens) const {
    // A vertex with at least as many tokens as there are uncoloured vertices
    // can never run out against a Painter who colours something every round,
    // so counts are clamped there.
    const int r = std::popcount(uncolored);
    std::uint64_t k = uncolored;
    for (std::size_t i = 0; i < order_.size(); ++i) {
        const int t = (uncolored >> i & 1) ? std::min(tokens[i], r) : 0;
        k |= static_cast<std::uint64_t>(t) << (kHardVertexLimit + 4 * i);
    }
    return k;
}

bool PaintSolver::lost_for_painter(std::uint32_t uncolored, const std::vector<int>& tokens) const {
    for (std::size_t i = 0; i < order_.size(); ++i)
        if ((uncolored >> i & 1) && tokens[i] <= 0) return true;
    return false;
}

const std::vector<std::uint32_t>& PaintSolver::replies(std::uint32_t marked) {
    auto it = reply_cache_.find(marked);
    if (it != reply_cache_.end()) return it->second;
    std::vector<std::uint32_t> admissible;
    // Submasks of `marked`, largest first, including the empty set.
    for (std::uint32_t x = marked;; x = (x - 1) & marked) {
        bool ok = true;
        for (std::size_t i = 0; i < order_.size() && ok; ++i)
            if ((x >> i & 1) && std::popcount(adjacency_[i] & x) > defect_) ok = false;
        if (ok) admissible.push_back(x);
        if (x == 0) break;
    }
    if (options_.maximal_replies) {
        std::vector<std::uint32_t> maximal;
        for (std::uint32_t x : admissible) {
            bool dominated = std::any_of(admissible.begin(), admissible.end(),
                                         [&](std::uint32_t y) { return y != x && (x & y) == x; });
            if (!dominated) maximal.push_back(x);
        }
        admissible = std::move(maximal);
    }
    return reply_cache_.emplace(marked, std::move(admissible)).first->second;
}

GameState PaintSolver::after(const GameState& s, std::uint32_t marked, std::uint32_t colored) const {
    GameState next{s.uncolored & ~colored, s.tokens};
    for (std::size_t i = 0; i < order_.size(); ++i) {
        if (marked >> i & 1) --next.tokens[i];
        if (colored >> i & 1) next.tokens[i] = 0;
    }
    return next;
}

bool PaintSolver::win(std::uint32_t uncolored, std::vector<int> tokens) {
    if (uncolored == 0) return true;
    if (lost_for_painter(uncolored, tokens)) return false;
    const std::uint64_t k = key(uncolored, tokens);
    if (auto it = memo_.find(k); it != memo_.end()) return it->second;
    if (memo_.size() >= options_.max_states)
        throw Error(ErrorCode::SearchBudgetExceeded, "painting game exceeded " + std::to_string(options_.max_states) +
                                                         " states");
    bool painter = true;
    const GameState s{uncolored, tokens};
    for (std::uint32_t a = uncolored; a != 0 && painter; a = (a - 1) & uncolored) {
        bool answered = false;
        for (std::uint32_t x : replies(a)) {
            GameState next = after(s, a, x);
            if (!lost_for_painter(next.uncolored, next.tokens) && win(next.uncolored, next.tokens)) {
                answered = true;
                break;
            }
        }
        painter = answered;
    }
    memo_[k] = painter;
    return painter;
}

bool PaintSolver::painter_wins(const GameState& s) { return win(s.uncolored, s.tokens); }

std::optional<std::uint32_t> PaintSolver::lister_winning_move(const GameState& s) {
    if (s.uncolored == 0 || lost_for_painter(s.uncolored, s.tokens)) return std::nullopt;
    for (std::uint32_t a = s.uncolored; a != 0; a = (a - 1) & s.uncolored) {
        bool answered = false;
        for (std::uint32_t x : replies(a)) {
            GameState next = after(s, a, x);
            if (!lost_for_painter(next.uncolored, next.tokens) && win(next.uncolored, next.tokens)) {
                answered = true;
                break;
            }
        }
        if (!answered) return a;
    }
    return std::nullopt;
}

std::uint32_t PaintSolver::painter_reply(const GameState& s, std::uint32_t marked) {
    const auto& options = replies(marked);
    for (std::uint32_t x : options) {
        GameState next = after(s, marked, x);
        if (!lost_for_painter(next.uncolored, next.tokens) && win(next.uncolored, next.tokens)) return x;
    }
    return options.empty() ? 0 : options.front();
}

PaintResult PaintSolver::solve() {
    PaintResult out;
    GameState s = initial_state();
    out.winner = painter_wins(s) ? Player::Painter : Player::Lister;
    while (out.principal_variation.size() < 10 && s.uncolored != 0 && !lost_for_painter(s.uncolored, s.tokens)) {
        std::uint32_t a = lister_winning_move(s).value_or(s.uncolored);
        std::uint32_t x = painter_reply(s, a);
        out.principal_variation.push_back({Player::Lister, vertices_of(a)});
        out.principal_variation.push_back({Player::Painter, vertices_of(x)});
        s = after(s, a, x);
    }
    out.states = memo_.size();
    return out;
}

PaintResult paint_solve(const PlaneGraph& g, const ExponentVector& tokens, int d, PaintOptions options) {
    PaintSolver solver(g, tokens, d, options);
    return solver.solve();
}

}  // namespace atmatch
