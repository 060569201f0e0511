#include "lassokit/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <functional>
#include <optional>
#include <sstream>
#include <string>

#include "lassokit/dfa.hpp"
#include "lassokit/errors.hpp"
#include "lassokit/extraction.hpp"
#include "lassokit/lasso.hpp"
#include "lassokit/lasso_automaton.hpp"
#include "lassokit/lassoexp.hpp"
#include "lassokit/omega.hpp"
#include "lassokit/ratexp.hpp"

namespace lassokit {

namespace {

constexpr const char* kGrammarHelp =
    "Expressions: 0, 1, letters a-z, juxtaposition or '.' for concatenation, '+' for union,\n"
    "postfix '*' (star), '@' (lasso circle) and '$' (omega power); postfix binds tighter than\n"
    "concatenation, which binds tighter than '+'. Lassos are written spoke:loop, e.g. aaa:baa or :b.\n"
    "Exit status: 0 yes/success, 1 no, 2 usage or input error.";

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open '" + path + "'");
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

LassoAutomaton load_automaton(const std::string& path) {
    try {
        return read_automaton(read_file(path));
    } catch (const FormatError& e) {
        throw FormatError(path + ": " + e.what(), 0);
    }
}

struct Context {
    std::ostream& out;
    std::ostream& err;
    std::string alphabet;
    std::string output;

    /// The explicit alphabet, or the letters of `text`. An inferred
    /// alphabet is reported when `matters` is set.
    Alphabet sigma(const std::string& text, bool matters) const {
        if (!alphabet.empty()) {
            Alphabet s(alphabet);
            if (!s.contains_all(text)) {
                for (char c : text)
                    if (c >= 'a' && c <= 'z' && !s.contains(c))
                        throw std::invalid_argument(std::string("letter '") + c + "' is not in --alphabet");
            }
            return s;
        }
        Alphabet s = Alphabet::infer(text);
        if (matters) err << "note: alphabet inferred as {" << s.letters() << "}; pass --alphabet to override\n";
        return s;
    }

    void emit(const std::string& text) const {
        if (output.empty()) {
            out << text;
            return;
        }
        std::ofstream f(output);
        if (!f) throw std::runtime_error("cannot write '" + output + "'");
        f << text;
        out << "wrote " << output << "\n";
    }
};

std::string show_word(const Word& w) { return w.empty() ? "1" : w; }

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Lasso automata, rational lasso expressions and omega-expressions"};
    app.footer(kGrammarHelp);
    app.require_subcommand(1);
    app.fallthrough();
    Context ctx{out, err, {}, {}};
    app.add_option("--alphabet", ctx.alphabet, "Alphabet letters, e.g. ab (default: letters of the inputs)");
    std::function<int()> action;

    // member
    std::string rexp, lexp, oexp, word, lasso_text;
    bool has_word = false;
    auto* member = app.add_subcommand("member", "Membership of a word or lasso in an expression");
    auto* m_r = member->add_option("--rexp", rexp, "Rational expression");
    auto* m_l = member->add_option("--lexp", lexp, "Lasso expression");
    auto* m_o = member->add_option("--oexp", oexp, "Omega-expression (ultimately periodic membership)");
    m_r->excludes(m_l)->excludes(m_o);
    m_l->excludes(m_o);
    auto* m_w = member->add_option("--word", word, "Finite word (use 1 or '' for the empty word)");
    auto* m_lasso = member->add_option("--lasso", lasso_text, "Lasso literal spoke:loop");
    m_w->excludes(m_lasso);
    member->callback([&] {
        action = [&]() -> int {
            has_word = m_w->count() > 0;
            if (m_r->count()) {
                if (!has_word) throw CLI::ValidationError("--rexp needs --word");
                if (word == "1") word.clear();
                Alphabet s = ctx.sigma(rexp + word, false);
                bool yes = member_naive(parse_rexp(rexp, s), word);
                out << rexp << (yes ? " contains " : " does not contain ") << show_word(word) << "\n";
                out << (yes ? "yes" : "no") << "\n";
                return yes ? kYes : kNo;
            }
            if (!m_lasso->count()) throw CLI::ValidationError("--lexp/--oexp need --lasso");
            Lasso l = Lasso::parse(lasso_text);
            bool yes;
            std::string shown;
            if (m_l->count()) {
                Alphabet s = ctx.sigma(lexp + l.spoke() + l.loop(), false);
                yes = member_lasso_naive(parse_lexp(lexp, s), l);
                shown = lexp;
            } else if (m_o->count()) {
                Alphabet s = ctx.sigma(oexp + l.spoke() + l.loop(), false);
                yes = up_member(to_nba(parse_oexp(oexp, s), s), l);
                shown = oexp;
            } else {
                throw CLI::ValidationError("one of --rexp, --lexp, --oexp is required");
            }
            out << shown << (yes ? " accepts " : " rejects ") << l.to_string() << "\n";
            out << (yes ? "yes" : "no") << "\n";
            return yes ? kYes : kNo;
        };
    });

    // nf
    std::string nf_arg;
    auto* nf = app.add_subcommand("nf", "Normal form of a lasso under the rewrite rules");
    nf->add_option("lasso", nf_arg, "Lasso literal spoke:loop")->required();
    nf->callback([&] {
        action = [&]() -> int {
            out << normal_form(Lasso::parse(nf_arg)).to_string() << "\n";
            return kYes;
        };
    });

    // equiv-lasso
    std::string eq_a, eq_b;
    bool eq_files = false;
    auto* eq = app.add_subcommand("equiv-lasso", "Gamma-equivalence of two lassos, or equivalence of two automaton files");
    eq->add_option("first", eq_a)->required();
    eq->add_option("second", eq_b)->required();
    eq->add_flag("--files", eq_files, "Treat the arguments as automaton files");
    eq->callback([&] {
        action = [&]() -> int {
            if (eq_files) {
                auto r = equivalent_lasso(load_automaton(eq_a), load_automaton(eq_b));
                if (r.equivalent) {
                    out << "the automata accept the same lassos\nyes\n";
                    return kYes;
                }
                out << "the automata disagree on " << r.counterexample->to_string() << "\n";
                out << "no " << r.counterexample->to_string() << "\n";
                return kNo;
            }
            Lasso a = Lasso::parse(eq_a), b = Lasso::parse(eq_b);
            Lasso na = normal_form(a), nb = normal_form(b);
            out << a.to_string() << " -> " << na.to_string() << ", " << b.to_string() << " -> " << nb.to_string()
                << "\n";
            if (na == nb) {
                out << "yes\n";
                return kYes;
            }
            out << "no " << na.to_string() << " " << nb.to_string() << "\n";
            return kNo;
        };
    });

    // compile
    std::string c_r, c_l;
    auto* compile = app.add_subcommand("compile", "Compile a rational expression to a DFA or a lasso expression to a lasso automaton");
    auto* c_ro = compile->add_option("--rexp", c_r, "Rational expression");
    auto* c_lo = compile->add_option("--lexp", c_l, "Lasso expression");
    c_ro->excludes(c_lo);
    compile->add_option("-o,--output", ctx.output, "Output file (default: stdout)");
    compile->callback([&] {
        action = [&]() -> int {
            if (c_ro->count()) {
                Alphabet s = ctx.sigma(c_r, true);
                ctx.emit(write_dfa(compile_dfa(parse_rexp(c_r, s), s)));
            } else if (c_lo->count()) {
                Alphabet s = ctx.sigma(c_l, true);
                ctx.emit(write_automaton(compile_lasso(parse_lexp(c_l, s), s)));
            } else {
                throw CLI::ValidationError("one of --rexp, --lexp is required");
            }
            return kYes;
        };
    });

    // extract / extract-omega / saturated
    std::string file;
    auto* extract = app.add_subcommand("extract", "Lasso expression accepted by an automaton file");
    extract->add_option("automaton", file)->required()->check(CLI::ExistingFile);
    extract->callback([&] {
        action = [&]() -> int {
            out << extract_df(load_automaton(file)).to_string() << "\n";
            return kYes;
        };
    });
    auto* extract_o = app.add_subcommand("extract-omega", "Omega-expression of a saturated automaton file");
    extract_o->add_option("automaton", file)->required()->check(CLI::ExistingFile);
    extract_o->callback([&] {
        action = [&]() -> int {
            out << extract_omega_expr(load_automaton(file)).to_string() << "\n";
            return kYes;
        };
    });
    auto* saturated = app.add_subcommand("saturated", "Decide whether an automaton file is saturated");
    saturated->add_option("automaton", file)->required()->check(CLI::ExistingFile);
    saturated->callback([&] {
        action = [&]() -> int {
            auto r = is_saturated(load_automaton(file));
            if (r.saturated) {
                out << "saturated\nyes\n";
                return kYes;
            }
            const auto& [acc, rej] = *r.counterexample;
            out << "not saturated: accepts " << acc.to_string() << " but rejects the equivalent " << rej.to_string()
                << "\n";
            out << "no " << acc.to_string() << " " << rej.to_string() << "\n";
            return kNo;
        };
    });

    // convert
    std::string conv_in, conv_to = "df";
    auto* convert = app.add_subcommand("convert", "Convert an omega-expression to a representing lasso expression or automaton");
    convert->add_option("oexp", conv_in, "Omega-expression")->required();
    convert->add_option("--to", conv_to, "Target: df (default) or automaton")
        ->check(CLI::IsMember({"df", "automaton"}));
    convert->add_option("-o,--output", ctx.output, "Output file (default: stdout)");
    convert->callback([&] {
        action = [&]() -> int {
            Alphabet s = ctx.sigma(conv_in, true);
            OmegaExpr T = parse_oexp(conv_in, s);
            if (conv_to == "automaton") ctx.emit(write_automaton(omega_to_omega_automaton(T, s)));
            else ctx.emit(represent(T, s).to_string() + "\n");
            return kYes;
        };
    });

    // split
    std::string split_in;
    auto* split_cmd = app.add_subcommand("split", "Sequential splitting pairs of a rational expression");
    split_cmd->add_option("rexp", split_in)->required();
    split_cmd->callback([&] {
        action = [&]() -> int {
            Alphabet s = ctx.sigma(split_in, false);
            for (const auto& [l, r] : split(parse_rexp(split_in, s)))
                out << "(" << l.to_string() << ", " << r.to_string() << ")\n";
            return kYes;
        };
    });

    // root
    std::string root_in;
    auto* root_cmd = app.add_subcommand("root", "Expression for {u nonempty : some u^k in L}");
    root_cmd->add_option("rexp", root_in)->required();
    root_cmd->callback([&] {
        action = [&]() -> int {
            Alphabet s = ctx.sigma(root_in, true);
            out << dfa_to_expr(root(compile_dfa(parse_rexp(root_in, s), s))).to_string() << "\n";
            return kYes;
        };
    });

    // enumerate
    std::string en_r, en_l, en_o, en_file;
    std::size_t max_len = 4, max_spoke = 3, max_loop = 3;
    auto* en = app.add_subcommand("enumerate", "List words or lassos up to a length bound (the empty word prints as 1)");
    auto* en_ro = en->add_option("--rexp", en_r, "Rational expression (words up to --max-len)");
    auto* en_lo = en->add_option("--lexp", en_l, "Lasso expression");
    auto* en_oo = en->add_option("--oexp", en_o, "Omega-expression");
    auto* en_fo = en->add_option("--automaton", en_file, "Automaton file")->check(CLI::ExistingFile);
    en_ro->excludes(en_lo)->excludes(en_oo)->excludes(en_fo);
    en_lo->excludes(en_oo)->excludes(en_fo);
    en_oo->excludes(en_fo);
    en->add_option("--max-len", max_len, "Word length bound")->check(CLI::NonNegativeNumber);
    en->add_option("--max-spoke", max_spoke, "Spoke length bound")->check(CLI::NonNegativeNumber);
    en->add_option("--max-loop", max_loop, "Loop length bound")->check(CLI::PositiveNumber);
    en->callback([&] {
        action = [&]() -> int {
            if (en_ro->count()) {
                Alphabet s = ctx.sigma(en_r, true);
                for (const auto& w : enumerate_language(parse_rexp(en_r, s), s, max_len)) out << show_word(w) << "\n";
                return kYes;
            }
            std::function<bool(const Lasso&)> test;
            Alphabet s;
            if (en_lo->count()) {
                s = ctx.sigma(en_l, true);
                LassoExpr rho = parse_lexp(en_l, s);
                test = [rho](const Lasso& l) { return member_lasso_naive(rho, l); };
            } else if (en_oo->count()) {
                s = ctx.sigma(en_o, true);
                auto nba = std::make_shared<Nba>(to_nba(parse_oexp(en_o, s), s));
                test = [nba](const Lasso& l) { return up_member(*nba, l); };
            } else if (en_fo->count()) {
                auto A = std::make_shared<LassoAutomaton>(load_automaton(en_file));
                s = A->alphabet();
                test = [A](const Lasso& l) { return accepts(*A, l); };
            } else {
                throw CLI::ValidationError("one of --rexp, --lexp, --oexp, --automaton is required");
            }
            for (const auto& l : enumerate_lassos(s, max_spoke, max_loop))
                if (test(l)) out << l.to_string() << "\n";
            return kYes;
        };
    });

    // dot
    std::string dot_r, dot_l, dot_file;
    auto* dot = app.add_subcommand("dot", "Graphviz rendering of a DFA or lasso automaton");
    auto* d_ro = dot->add_option("--rexp", dot_r, "Rational expression (compiled to a DFA)");
    auto* d_lo = dot->add_option("--lexp", dot_l, "Lasso expression (compiled to a lasso automaton)");
    auto* d_fo = dot->add_option("--automaton", dot_file, "Automaton file")->check(CLI::ExistingFile);
    d_ro->excludes(d_lo)->excludes(d_fo);
    d_lo->excludes(d_fo);
    dot->add_option("-o,--output", ctx.output, "Output file (default: stdout)");
    dot->callback([&] {
        action = [&]() -> int {
            if (d_ro->count()) {
                Alphabet s = ctx.sigma(dot_r, true);
                ctx.emit(dfa_to_dot(compile_dfa(parse_rexp(dot_r, s), s)));
            } else if (d_lo->count()) {
                Alphabet s = ctx.sigma(dot_l, true);
                ctx.emit(to_dot(compile_lasso(parse_lexp(dot_l, s), s)));
            } else if (d_fo->count()) {
                ctx.emit(to_dot(load_automaton(dot_file)));
            } else {
                throw CLI::ValidationError("one of --rexp, --lexp, --automaton is required");
            }
            return kYes;
        };
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        app.exit(e, out, err);
        return kYes;
    } catch (const CLI::CallForAllHelp& e) {
        app.exit(e, out, err);
        return kYes;
    } catch (const CLI::CallForVersion& e) {
        app.exit(e, out, err);
        return kYes;
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return kError;
    }
    try {
        return action();
    } catch (const CLI::Error& e) {
        err << "error: " << e.what() << "\n";
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
    }
    return kError;
}

}  // namespace lassokit
