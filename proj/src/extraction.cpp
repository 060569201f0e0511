#include "lassokit/extraction.hpp"

#include "lassokit/dfa.hpp"
#include "lassokit/errors.hpp"

namespace lassokit {

DisjunctiveForm extract_df(const LassoAutomaton& A) {
    std::vector<LassoPair> out;
    for (const auto& [x, u] : reachable_spokes(A)) {
        RatExpr spoke = dfa_to_expr(spoke_lang_dfa(A, x));
        if (spoke.is_zero()) continue;
        for (State y = 0; y < A.num_loop(); ++y) {
            if (!A.is_final(y)) continue;
            RatExpr loop = dfa_to_expr(loop_dfa_to(A, x, y));
            if (loop.is_zero()) continue;
            if (loop.ewp()) throw CertificationError("extract_expr: loop language contains the empty word");
            out.push_back({spoke, loop});
        }
    }
    return DisjunctiveForm(std::move(out));
}

LassoExpr extract_expr(const LassoAutomaton& A) { return extract_df(A).to_expr(); }

namespace {

/// Words leading from y back to y under the loop map.
Dfa loop_return_dfa(const LassoAutomaton& A, State y) {
    Dfa d(A.alphabet(), A.num_loop(), y);
    for (State q = 0; q < A.num_loop(); ++q)
        for (std::size_t a = 0; a < A.alphabet().size(); ++a) d.set_next(q, a, A.loop_next(q, a));
    d.set_final(y);
    return d;
}

/// Words leading from x back to x under the spoke map.
Dfa spoke_return_dfa(const LassoAutomaton& A, State x) {
    Dfa d = spoke_lang_dfa(A, x);
    d.set_initial(x);
    return d;
}

}  // namespace

OmegaExpr extract_omega_expr(const LassoAutomaton& A) {
    if (auto s = is_saturated(A); !s.saturated)
        throw PreconditionError("automaton is not saturated: accepts " + s.counterexample->first.to_string() +
                                " but rejects " + s.counterexample->second.to_string());
    std::vector<OmegaExpr> terms;
    for (const auto& [x, u] : reachable_spokes(A)) {
        RatExpr spoke = dfa_to_expr(spoke_lang_dfa(A, x));
        if (spoke.is_zero()) continue;
        const Dfa back = spoke_return_dfa(A, x);
        for (State y = 0; y < A.num_loop(); ++y) {
            if (!A.is_final(y)) continue;
            Dfa r = boolean_combine(boolean_combine(back, loop_dfa_to(A, x, y), BoolOp::And),
                                    loop_return_dfa(A, y), BoolOp::And);
            RatExpr loop = dfa_to_expr(r);
            if (loop.is_zero()) continue;
            if (loop.ewp()) throw CertificationError("extract_omega_expr: loop language contains the empty word");
            terms.push_back(spoke.is_one() ? OmegaExpr::power(loop) : OmegaExpr::prefix(spoke, OmegaExpr::power(loop)));
        }
    }
    if (terms.empty()) return OmegaExpr::zero();
    OmegaExpr acc = terms.front();
    for (std::size_t i = 1; i < terms.size(); ++i) acc = OmegaExpr::sum(acc, terms[i]);
    return acc;
}

}  // namespace lassokit
