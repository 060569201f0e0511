#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "lassokit/alphabet.hpp"
#include "lassokit/dfa.hpp"
#include "lassokit/lasso.hpp"

namespace lassokit {

/// Deterministic two-sorted acceptor of lassos.
///
/// Spoke states X and loop states Y are numbered independently from 0.
/// The spoke map reads the spoke inside X; the switch map reads the first
/// loop letter from X into Y; the loop map reads the remaining letters
/// inside Y. All three tables are total (entries default to state 0).
class LassoAutomaton {
public:
    LassoAutomaton(Alphabet sigma, std::size_t num_spoke, std::size_t num_loop, State initial = 0);

    [[nodiscard]] const Alphabet& alphabet() const noexcept { return sigma_; }
    [[nodiscard]] std::size_t num_spoke() const noexcept { return num_spoke_; }
    [[nodiscard]] std::size_t num_loop() const noexcept { return finals_.size(); }
    [[nodiscard]] State initial() const noexcept { return initial_; }
    [[nodiscard]] bool is_final(State y) const { return finals_.at(y); }

    [[nodiscard]] State spoke_next(State x, std::size_t letter) const { return d1_[x * sigma_.size() + letter]; }
    [[nodiscard]] State switch_next(State x, std::size_t letter) const { return d2_[x * sigma_.size() + letter]; }
    [[nodiscard]] State loop_next(State y, std::size_t letter) const { return d3_[y * sigma_.size() + letter]; }

    void set_spoke_next(State x, std::size_t letter, State x2);
    void set_switch_next(State x, std::size_t letter, State y);
    void set_loop_next(State y, std::size_t letter, State y2);
    void set_final(State y, bool accepting = true);
    void set_initial(State x);

    /// Spoke map extended to words.
    [[nodiscard]] State read_spoke(State x, std::string_view u) const;
    /// Switch-then-loop map extended to a nonempty word.
    [[nodiscard]] State read_loop(State x, std::string_view v) const;

    /// State names used by the file format and DOT export.
    std::vector<std::string> spoke_names;
    std::vector<std::string> loop_names;

private:
    Alphabet sigma_;
    std::size_t num_spoke_;
    State initial_;
    std::vector<State> d1_, d2_, d3_;
    std::vector<bool> finals_;
};

/// Throws std::invalid_argument for symbols outside the alphabet.
bool accepts(const LassoAutomaton& A, const Lasso& l);

/// Spoke states reachable from the initial state, BFS order, paired with
/// the shortlex-least spoke word reaching each.
std::vector<std::pair<State, Word>> reachable_spokes(const LassoAutomaton& A);

/// P_x = {v in Sigma+ : reading v from x via switch then loop ends in F}.
/// State 0 is a fresh non-final marker; loop state y becomes y + 1.
Dfa loop_dfa(const LassoAutomaton& A, State x);
/// Same construction with `finals` replaced by {target}.
Dfa loop_dfa_to(const LassoAutomaton& A, State x, State target);
/// S_x = {u : spoke map from the initial state reaches x}.
Dfa spoke_lang_dfa(const LassoAutomaton& A, State x);

struct LassoEquivalence {
    bool equivalent = true;
    /// Shortest disagreement: minimal |spoke| + |loop|, then shortlex.
    std::optional<Lasso> counterexample;
};

/// Throws AlphabetMismatch.
LassoEquivalence equivalent_lasso(const LassoAutomaton& A1, const LassoAutomaton& A2);

struct SaturationResult {
    bool saturated = true;
    /// Two gamma-equivalent lassos; the first is accepted, the second is not.
    std::optional<std::pair<Lasso, Lasso>> counterexample;
};

/// Exact decision: for every reachable spoke x and letter a with
/// x' = spoke(x, a),
///   (i)   a^-1 P_x == P_x' a^-1            (rotation rule, both directions)
///   (ii)  root(P_x) \ P_x is empty          (power rule, reduction)
///   (iii) P_x & root(~P_x) is empty         (power rule, expansion)
/// The reported counterexample is the least over all failing checks by
/// total length, then rotation before power witnesses, then
/// lexicographically.
SaturationResult is_saturated(const LassoAutomaton& A);

/// Parses the line-oriented automaton format. Throws FormatError with the
/// offending line number.
LassoAutomaton read_automaton(std::string_view text);
std::string write_automaton(const LassoAutomaton& A);
/// Spoke edges solid, switch edges dotted, loop edges dashed.
std::string to_dot(const LassoAutomaton& A);

}  // namespace lassokit
