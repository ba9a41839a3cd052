#ifndef STELLATE_SCRIPT_HPP
#define STELLATE_SCRIPT_HPP

// The ideal-expression DSL: declarations for rings, ideals, multiplicative
// sets and prime families, plus print/check/suite commands. Scripts are
// parsed to an AST first; execution is a separate pass so every runtime
// error can point at its originating statement. Expressions accept either
// declared names or inline module literals like `<x1^2, x1*x2>`.

#include <cctype>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "stellate/format.hpp"
#include "stellate/locstar.hpp"
#include "stellate/monomial.hpp"
#include "stellate/report.hpp"
#include "stellate/sampler.hpp"
#include "stellate/star.hpp"
#include "stellate/suites.hpp"

namespace stellate {

struct ParseError : std::runtime_error {
    int line, col;
    ParseError(int l, int c, const std::string& expected)
        : std::runtime_error("parse error at " + std::to_string(l) + ":" + std::to_string(c) +
                             ": " + expected),
          line(l), col(c) {}
};

struct UndefinedName : std::runtime_error {
    explicit UndefinedName(const std::string& name, int line)
        : std::runtime_error("undefined name '" + name + "' at line " + std::to_string(line)) {}
};

struct RunConfig {
    std::uint64_t seed = 1;
    int samples = 200;
    int max_deg = 4;
    int max_gens = 3;
    int max_iter = kDefaultMaxIter;
    bool json_output = false;
};

namespace ast {

struct Arg {
    std::string name;              // declared name, when not a literal
    bool is_literal = false;
    std::vector<Exponents> gens;   // inline module literal
};

struct Expr {
    std::string head;
    std::vector<Arg> args;
    std::shared_ptr<Expr> nested;  // star argument for suites (stransform/locstar)
    int line = 0;
};

struct Statement {
    enum class Kind { Ring, Ideal, MSet, Family, Print, Check, Suite } kind;
    std::string name;
    int nvars = 0;                          // Ring
    std::vector<Exponents> gens;            // Ideal (sparse-padded, validated at run time)
    std::vector<std::string> member_names;  // MSet
    std::vector<std::set<int>> sigmas;      // Family
    Expr expr;                              // Print/Check/Suite
    int line = 0;
};

struct Script {
    std::vector<Statement> statements;
};

}  // namespace ast

namespace parser_detail {

struct Token {
    enum class Kind { Ident, Int, Symbol, End } kind;
    std::string text;
    long value = 0;
    int line = 1, col = 1;
};

class Lexer {
public:
    explicit Lexer(std::string src) : src_(std::move(src)) { advance(); }

    const Token& peek() const { return tok_; }

    Token next() {
        Token t = tok_;
        advance();
        return t;
    }

private:
    void advance() {
        while (pos_ < src_.size()) {
            char c = src_[pos_];
            if (c == '#') {
                while (pos_ < src_.size() && src_[pos_] != '\n') ++pos_;
            } else if (c == '\n') {
                ++line_; col_ = 1; ++pos_;
            } else if (std::isspace(static_cast<unsigned char>(c))) {
                ++col_; ++pos_;
            } else {
                break;
            }
        }
        tok_.line = line_;
        tok_.col = col_;
        if (pos_ >= src_.size()) {
            tok_ = {Token::Kind::End, "", 0, line_, col_};
            return;
        }
        char c = src_[pos_];
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            int line = line_, col = col_;
            std::string s;
            while (pos_ < src_.size() &&
                   (std::isalnum(static_cast<unsigned char>(src_[pos_])) || src_[pos_] == '_')) {
                s += src_[pos_++];
                ++col_;
            }
            tok_ = {Token::Kind::Ident, s, 0, line, col};
        } else if (std::isdigit(static_cast<unsigned char>(c))) {
            int line = line_, col = col_;
            long v = 0;
            while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) {
                v = v * 10 + (src_[pos_++] - '0');
                ++col_;
            }
            tok_ = {Token::Kind::Int, std::to_string(v), v, line, col};
        } else {
            int line = line_, col = col_;
            ++pos_; ++col_;
            tok_ = {Token::Kind::Symbol, std::string(1, c), 0, line, col};
        }
    }

    std::string src_;
    std::size_t pos_ = 0;
    int line_ = 1, col_ = 1;
    Token tok_;
};

}  // namespace parser_detail

class Parser {
public:
    explicit Parser(const std::string& src) : lex_(src) {}

    ast::Script parse() {
        ast::Script script;
        while (lex_.peek().kind != parser_detail::Token::Kind::End)
            script.statements.push_back(statement());
        return script;
    }

private:
    using Token = parser_detail::Token;

    [[noreturn]] void fail(const std::string& expected) {
        throw ParseError(lex_.peek().line, lex_.peek().col, "expected " + expected);
    }

    Token expect_symbol(const std::string& s) {
        if (lex_.peek().kind != Token::Kind::Symbol || lex_.peek().text != s) fail("'" + s + "'");
        return lex_.next();
    }

    Token expect_ident() {
        if (lex_.peek().kind != Token::Kind::Ident) fail("identifier");
        return lex_.next();
    }

    void expect_keyword(const std::string& kw) {
        if (lex_.peek().kind != Token::Kind::Ident || lex_.peek().text != kw) fail("'" + kw + "'");
        lex_.next();
    }

    long expect_int() {
        bool neg = false;
        if (lex_.peek().kind == Token::Kind::Symbol && lex_.peek().text == "-") {
            lex_.next();
            neg = true;
        }
        if (lex_.peek().kind != Token::Kind::Int) fail("integer");
        long v = lex_.next().value;
        return neg ? -v : v;
    }

    // `1` or  x<index>(^INT)? ('*' ...)*, exponents may be negative
    Exponents monomial_vector() {
        std::map<int, int> sparse;
        while (true) {
            if (lex_.peek().kind == Token::Kind::Int && lex_.peek().value == 1) {
                lex_.next();
            } else {
                Token v = expect_ident();
                if (v.text.size() < 2 || v.text[0] != 'x') fail("variable like x1");
                int idx = 0;
                for (std::size_t i = 1; i < v.text.size(); ++i) {
                    if (!std::isdigit(static_cast<unsigned char>(v.text[i])))
                        fail("variable like x1");
                    idx = idx * 10 + (v.text[i] - '0');
                }
                if (idx < 1) fail("variable index >= 1");
                int e = 1;
                if (lex_.peek().kind == Token::Kind::Symbol && lex_.peek().text == "^") {
                    lex_.next();
                    e = static_cast<int>(expect_int());
                }
                sparse[idx] += e;
            }
            if (lex_.peek().kind == Token::Kind::Symbol && lex_.peek().text == "*")
                lex_.next();
            else
                break;
        }
        int top = sparse.empty() ? 0 : sparse.rbegin()->first;
        Exponents m(static_cast<std::size_t>(std::max(top, 1)), 0);
        for (const auto& [idx, e] : sparse) m[static_cast<std::size_t>(idx - 1)] = e;
        return m;
    }

    std::vector<Exponents> module_literal() {
        expect_symbol("<");
        std::vector<Exponents> gens;
        while (true) {
            gens.push_back(monomial_vector());
            if (lex_.peek().kind == Token::Kind::Symbol && lex_.peek().text == ",")
                lex_.next();
            else
                break;
        }
        expect_symbol(">");
        return gens;
    }

    ast::Expr expr() {
        ast::Expr e;
        Token head = expect_ident();
        e.head = head.text;
        e.line = head.line;
        if (e.head == "d" || e.head == "v" || e.head == "t") return e;  // bare star names
        expect_symbol("(");
        while (true) {
            if (lex_.peek().kind == Token::Kind::Symbol && lex_.peek().text == "<") {
                ast::Arg a;
                a.is_literal = true;
                a.gens = module_literal();
                e.args.push_back(std::move(a));
            } else if (lex_.peek().kind == Token::Kind::Ident &&
                       (lex_.peek().text == "stransform" || lex_.peek().text == "locstar")) {
                e.nested = std::make_shared<ast::Expr>(expr());
            } else {
                ast::Arg a;
                a.name = expect_ident().text;
                e.args.push_back(std::move(a));
            }
            if (lex_.peek().kind == Token::Kind::Symbol && lex_.peek().text == ",")
                lex_.next();
            else
                break;
        }
        expect_symbol(")");
        return e;
    }

    ast::Statement statement() {
        ast::Statement st;
        Token kw = expect_ident();
        st.line = kw.line;
        if (kw.text == "ring") {
            st.kind = ast::Statement::Kind::Ring;
            st.name = expect_ident().text;
            expect_symbol("=");
            expect_keyword("monomial");
            expect_symbol("(");
            expect_keyword("vars");
            expect_symbol("=");
            st.nvars = static_cast<int>(expect_int());
            expect_symbol(")");
        } else if (kw.text == "ideal") {
            st.kind = ast::Statement::Kind::Ideal;
            st.name = expect_ident().text;
            expect_symbol("=");
            st.gens = module_literal();
        } else if (kw.text == "mset") {
            st.kind = ast::Statement::Kind::MSet;
            st.name = expect_ident().text;
            expect_symbol("=");
            expect_keyword("closure");
            expect_symbol("{");
            while (true) {
                st.member_names.push_back(expect_ident().text);
                if (lex_.peek().kind == Token::Kind::Symbol && lex_.peek().text == ",")
                    lex_.next();
                else
                    break;
            }
            expect_symbol("}");
        } else if (kw.text == "family") {
            st.kind = ast::Statement::Kind::Family;
            st.name = expect_ident().text;
            expect_symbol("=");
            expect_symbol("{");
            while (true) {
                expect_symbol("{");
                std::set<int> sigma;
                while (true) {
                    Token v = expect_ident();
                    if (v.text.size() < 2 || v.text[0] != 'x') fail("variable like x1");
                    sigma.insert(std::stoi(v.text.substr(1)) - 1);
                    if (lex_.peek().kind == Token::Kind::Symbol && lex_.peek().text == ",")
                        lex_.next();
                    else
                        break;
                }
                expect_symbol("}");
                st.sigmas.push_back(std::move(sigma));
                if (lex_.peek().kind == Token::Kind::Symbol && lex_.peek().text == ",")
                    lex_.next();
                else
                    break;
            }
            expect_symbol("}");
        } else if (kw.text == "print") {
            st.kind = ast::Statement::Kind::Print;
            st.expr = expr();
        } else if (kw.text == "check") {
            st.kind = ast::Statement::Kind::Check;
            st.expr = expr();
            st.name = st.expr.head;
        } else if (kw.text == "suite") {
            st.kind = ast::Statement::Kind::Suite;
            st.expr = expr();
            st.name = st.expr.head;
        } else {
            throw ParseError(kw.line, kw.col,
                             "expected a statement keyword, got '" + kw.text + "'");
        }
        return st;
    }

    parser_detail::Lexer lex_;
};

inline ast::Script parse_script(const std::string& text) { return Parser(text).parse(); }

struct RunResult {
    int exit_code = 0;
    nlohmann::json reports = nlohmann::json::array();
    std::string text;
};

// Executes a parsed script. Exit codes: 0 all commands succeeded and suites
// passed, 1 a suite or check found violations, 3 a resource guard tripped.
class Interpreter {
public:
    explicit Interpreter(RunConfig cfg) : cfg_(cfg) {}

    RunResult run(const ast::Script& script) {
        RunResult result;
        std::ostringstream out;
        try {
            for (const auto& st : script.statements) execute(st, out, result);
        } catch (const NonStabilizing& e) {
            out << "error: " << e.what() << "\n";
            result.exit_code = 3;
        }
        result.text = out.str();
        return result;
    }

private:
    const MultiplicativeSet& mset(const ast::Arg& a, int line) const {
        auto it = msets_.find(a.name);
        if (it == msets_.end()) throw UndefinedName(a.name, line);
        return it->second;
    }

    const PrimeFamily& family(const ast::Arg& a, int line) const {
        auto it = families_.find(a.name);
        if (it == families_.end()) throw UndefinedName(a.name, line);
        return it->second;
    }

    // Literals may establish the ring when none is declared yet.
    MonomialModule module_arg(const ast::Arg& a, int line) {
        if (!a.is_literal) {
            auto it = ideals_.find(a.name);
            if (it == ideals_.end()) throw UndefinedName(a.name, line);
            return it->second;
        }
        std::size_t top = 1;
        for (const auto& g : a.gens) top = std::max(top, g.size());
        if (!nvars_) nvars_ = static_cast<int>(top);
        return build_module(a.gens, line);
    }

    MonomialModule build_module(const std::vector<Exponents>& raw, int line) {
        int n = require_ring(line);
        std::vector<Exponents> gens;
        for (auto g : raw) {
            if (static_cast<int>(g.size()) > n)
                throw ArityMismatch("line " + std::to_string(line) +
                                    ": monomial uses a variable beyond the ring");
            g.resize(static_cast<std::size_t>(n), 0);
            gens.push_back(std::move(g));
        }
        return MonomialModule(n, std::move(gens));
    }

    int require_ring(int line) const {
        if (!nvars_) throw ParseError(line, 1, "a ring declaration before any ideal");
        return *nvars_;
    }

    StarOperator star_from(const ast::Expr& e, int line) {
        if (e.head == "d") return StarOperator::identity();
        if (e.head == "v") return StarOperator::divisorial();
        if (e.head == "t") return StarOperator::finite_divisorial();
        if (e.head == "stransform" && e.args.size() == 1)
            return StarOperator::transform(mset(e.args[0], line), cfg_.max_iter);
        if (e.head == "locstar" && e.args.size() == 1)
            return localization_star(family(e.args[0], line));
        throw ParseError(line, 1, "a star-operation (d, v, t, stransform(S), locstar(F))");
    }

    void emit_report(const PropertyReport& report, std::ostringstream& out, RunResult& result) {
        nlohmann::json j = report.to_json();
        result.reports.push_back(j);
        out << render_text(j);
        if (!report.pass && result.exit_code == 0) result.exit_code = 1;
    }

    void execute(const ast::Statement& st, std::ostringstream& out, RunResult& result) {
        using Kind = ast::Statement::Kind;
        switch (st.kind) {
            case Kind::Ring: {
                if (nvars_)
                    throw ParseError(st.line, 1, "a single ring per script (one already declared)");
                if (st.nvars < 1) throw ParseError(st.line, 1, "vars >= 1");
                nvars_ = st.nvars;
                break;
            }
            case Kind::Ideal: {
                ideals_.insert_or_assign(st.name, build_module(st.gens, st.line));
                break;
            }
            case Kind::MSet: {
                std::vector<MonomialModule> members;
                for (const auto& name : st.member_names) {
                    ast::Arg a;
                    a.name = name;
                    members.push_back(module_arg(a, st.line));
                }
                msets_.insert_or_assign(st.name, MultiplicativeSet(std::move(members)));
                break;
            }
            case Kind::Family: {
                int n = require_ring(st.line);
                families_.insert_or_assign(st.name, PrimeFamily(n, st.sigmas));
                break;
            }
            case Kind::Print: {
                out << eval_print(st.expr, st.line) << "\n";
                break;
            }
            case Kind::Check: {
                bool ok = eval_check(st.expr, st.line, out);
                out << "check " << st.name << ": " << (ok ? "PASS" : "FAIL") << "\n";
                if (!ok && result.exit_code == 0) result.exit_code = 1;
                break;
            }
            case Kind::Suite: {
                emit_report(eval_suite(st.expr, st.line), out, result);
                break;
            }
        }
    }

    std::string eval_print(const ast::Expr& e, int line) {
        auto A = [&](std::size_t i) { return module_arg(e.args.at(i), line); };
        if (e.head == "vclose") return to_string(v_close(A(0)));
        if (e.head == "tclose") return to_string(t_close(A(0)));
        if (e.head == "inverse") return to_string(inverse(A(0)));
        if (e.head == "colon") return to_string(colon(A(0), A(1)));
        if (e.head == "coloni") return to_string(colon_integral(A(0), A(1)));
        if (e.head == "intersect") return to_string(intersect(A(0), A(1)));
        if (e.head == "add") return to_string(add(A(0), A(1)));
        if (e.head == "mul") return to_string(mul(A(0), A(1)));
        if (e.head == "stransform")
            return to_string(s_transform(A(0), mset(e.args.at(1), line), cfg_.max_iter));
        if (e.head == "locstar") return to_string(loc_star(A(0), family(e.args.at(1), line)));
        if (e.head == "gv") return is_gv(A(0)) ? "true" : "false";
        if (e.head == "insat")
            return in_saturation(A(0), mset(e.args.at(1), line), cfg_.max_iter) ? "true" : "false";
        throw ParseError(line, 1, "a printable expression, got '" + e.head + "'");
    }

    bool eval_check(const ast::Expr& e, int line, std::ostringstream& out) {
        auto A = [&](std::size_t i) { return module_arg(e.args.at(i), line); };
        if (e.head == "gv") return is_gv(A(0));
        if (e.head == "insat") return in_saturation(A(0), mset(e.args.at(1), line), cfg_.max_iter);
        if (e.head == "colonproduct") {
            ColonProductVerdict v = check_colon_product(A(0), A(1));
            out << "  (A:B)B = " << to_string(v.lhs) << ", A n B = " << to_string(v.rhs) << "\n";
            return v.contained && (!v.principal || v.equal_case);
        }
        throw ParseError(line, 1, "a check (gv, insat, colonproduct), got '" + e.head + "'");
    }

    SuiteConfig suite_config() const {
        SuiteConfig sc;
        sc.nvars = nvars_.value_or(2);
        sc.max_deg = cfg_.max_deg;
        sc.max_gens = cfg_.max_gens;
        sc.samples = cfg_.samples;
        sc.seed = cfg_.seed;
        sc.max_iter = cfg_.max_iter;
        return sc;
    }

    PropertyReport eval_suite(const ast::Expr& e, int line) {
        SuiteConfig sc = suite_config();
        auto star_arg = [&]() -> StarOperator {
            if (e.nested) return star_from(*e.nested, line);
            if (e.args.size() == 1 && !e.args[0].is_literal) {
                ast::Expr bare;
                bare.head = e.args[0].name;
                if (bare.head == "d" || bare.head == "v" || bare.head == "t")
                    return star_from(bare, line);
                if (msets_.count(bare.head))
                    return StarOperator::transform(mset(e.args[0], line), cfg_.max_iter);
                if (families_.count(bare.head)) return localization_star(family(e.args[0], line));
            }
            throw ParseError(line, 1, "a star argument");
        };
        if (e.head == "axioms") return check_star_axioms(star_arg(), sc);
        if (e.head == "induced") return check_induced_transform(star_arg(), sc);
        if (e.head == "transformlaws") return check_transform_laws(mset(e.args.at(0), line), sc);
        if (e.head == "gvcriterion") return check_gv_criterion(mset(e.args.at(0), line), sc);
        if (e.head == "idempotence")
            return check_idempotence_localizing(mset(e.args.at(0), line), sc);
        if (e.head == "saturation") return check_saturation_criterion(mset(e.args.at(0), line), sc);
        if (e.head == "localization") return check_localization_star(family(e.args.at(0), line), sc);
        throw ParseError(line, 1, "a suite name, got '" + e.head + "'");
    }

    RunConfig cfg_;
    std::optional<int> nvars_;
    std::map<std::string, MonomialModule> ideals_;
    std::map<std::string, MultiplicativeSet> msets_;
    std::map<std::string, PrimeFamily> families_;
};

inline RunResult run_script(const std::string& text, const RunConfig& cfg) {
    return Interpreter(cfg).run(parse_script(text));
}

}  // namespace stellate

#endif  // STELLATE_SCRIPT_HPP
