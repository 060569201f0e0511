#pragma once

#include "lassokit/lasso_automaton.hpp"
#include "lassokit/lassoexp.hpp"
#include "lassokit/omega.hpp"

namespace lassokit {

/// Sum over reachable spoke states x and final loop states y of
/// S_x.(R_xy)@, where S_x collects spoke words reaching x and R_xy the
/// nonempty words read from x through switch and loop into y. Empty
/// summands are dropped. Throws CertificationError if a loop language
/// contains the empty word.
DisjunctiveForm extract_df(const LassoAutomaton& A);
LassoExpr extract_expr(const LassoAutomaton& A);

/// Sum of S_x.(R_xy)$ where R_xy additionally requires the word to return
/// to x on the spoke side and to y on the loop side. Throws
/// PreconditionError unless A is saturated.
OmegaExpr extract_omega_expr(const LassoAutomaton& A);

}  // namespace lassokit
