#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "lassokit/alphabet.hpp"
#include "lassokit/ratexp.hpp"

namespace lassokit {

using State = std::uint32_t;

/// Complete deterministic automaton on finite words. Transitions default to
/// state 0, so the table is total at every point of its life.
class Dfa {
public:
    Dfa(Alphabet sigma, std::size_t num_states, State initial = 0);

    [[nodiscard]] const Alphabet& alphabet() const noexcept { return sigma_; }
    [[nodiscard]] std::size_t num_states() const noexcept { return finals_.size(); }
    [[nodiscard]] State initial() const noexcept { return initial_; }
    [[nodiscard]] bool is_final(State q) const { return finals_.at(q); }
    /// Successor by letter index (position in the alphabet).
    [[nodiscard]] State next(State q, std::size_t letter) const { return trans_[q * sigma_.size() + letter]; }
    [[nodiscard]] State next_symbol(State q, char a) const { return next(q, sigma_.index_of(a)); }
    /// Run from `q`; throws std::invalid_argument for symbols outside the alphabet.
    [[nodiscard]] State run_from(State q, std::string_view u) const;

    void set_next(State q, std::size_t letter, State p);
    void set_final(State q, bool accepting = true);
    void set_initial(State q);

    /// Optional human-readable state names (used by DOT export).
    std::vector<std::string> labels;

private:
    Alphabet sigma_;
    State initial_;
    std::vector<State> trans_;
    std::vector<bool> finals_;
};

enum class BoolOp { And, Or, Diff };

struct EmptinessResult {
    bool empty = true;
    std::optional<Word> witness;
};

struct EquivalenceResult {
    bool equivalent = true;
    std::optional<Word> counterexample;
};

/// Brzozowski construction: states are normalize_b classes of derivatives.
/// State labels hold the class representatives.
Dfa compile_dfa(const RatExpr& t, const Alphabet& sigma);

/// Accepts nothing; a single non-final state.
Dfa empty_dfa(const Alphabet& sigma);

/// Product on reachable pairs; throws AlphabetMismatch.
Dfa boolean_combine(const Dfa& d1, const Dfa& d2, BoolOp op);
Dfa complement(const Dfa& d);

/// BFS emptiness check; the witness is the shortlex-least accepted word.
EmptinessResult is_empty_dfa(const Dfa& d);
/// Product BFS; the counterexample is the shortlex-least word in the
/// symmetric difference. Throws AlphabetMismatch.
EquivalenceResult equivalent_dfa(const Dfa& d1, const Dfa& d2);

/// {v : a.v in L(d)}
Dfa left_derivative(const Dfa& d, char a);
/// {v : v.a in L(d)}
Dfa right_quotient(const Dfa& d, char a);

/// Moore minimization of the reachable part, renumbered in BFS order from
/// the initial state. Two DFAs with the same language minimize to identical
/// tables.
Dfa minimize(const Dfa& d);

/// {u in Sigma+ : u^k in L(d) for some k >= 1}, built on the transformation
/// monoid of the minimized input. Throws StateCapError past kStateCap.
Dfa root(const Dfa& d);

/// State elimination back to an expression. The result is checked with
/// equivalent_dfa against `d`; a mismatch throws CertificationError.
RatExpr dfa_to_expr(const Dfa& d);

/// Throws std::invalid_argument for symbols outside the alphabet.
bool run_dfa(const Dfa& d, std::string_view u);

std::string dfa_to_dot(const Dfa& d);
std::string write_dfa(const Dfa& d);
Dfa read_dfa(std::string_view text);

}  // namespace lassokit
