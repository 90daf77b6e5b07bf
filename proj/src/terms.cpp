#include "claw/terms.hpp"

#include <algorithm>
#include <cctype>

namespace claw {

int Term::var_count() const {
    int m = kind == Kind::Var ? var + 1 : 0;
    for (const Term& k : kids) m = std::max(m, k.var_count());
    return m;
}

Bits eval(const Term& t, const ClosureAlgebra& a, std::span<const Bits> env) {
    switch (t.kind) {
    case Term::Kind::Zero: return 0;
    case Term::Kind::One: return a.one();
    case Term::Kind::Var:
        if (t.var < 0 || t.var >= static_cast<int>(env.size()))
            throw Error(Errc::UnboundVariable, "x" + std::to_string(t.var));
        return env[t.var];
    case Term::Kind::Join: return eval(t.kids[0], a, env) | eval(t.kids[1], a, env);
    case Term::Kind::Meet: return eval(t.kids[0], a, env) & eval(t.kids[1], a, env);
    case Term::Kind::Compl: return a.one() & ~eval(t.kids[0], a, env);
    case Term::Kind::Closure: return a.closure(eval(t.kids[0], a, env));
    case Term::Kind::Interior: return a.interior(eval(t.kids[0], a, env));
    }
    throw Error(Errc::InvalidArgument, "malformed term");
}

EquationReport check_equation(const Term& t, const ClosureAlgebra& a, std::uint64_t budget) {
    EquationReport rep;
    rep.vars = t.var_count();
    // 2^(atoms * vars) assignments in total
    std::uint64_t bits = std::uint64_t(a.atom_count()) * rep.vars;
    if (bits >= 63 || (std::uint64_t{1} << bits) > budget)
        throw Error(Errc::SearchBudgetExceeded,
                    "assignment space exceeds budget of " + std::to_string(budget));
    std::vector<Bits> env(rep.vars, 0);
    for (bool more = true; more;) {
        ++rep.assignments;
        if (eval(t, a, env) != a.one()) {
            rep.holds = false;
            rep.witness = env;
            return rep;
        }
        more = false;
        for (int i = rep.vars; i-- > 0;) {
            if (++env[i] < a.element_count()) { more = true; break; }
            env[i] = 0;
        }
    }
    return rep;
}

Term axiom_grz() {
    // fd(f(x * f(-x)) + x) <= x
    Term x = Term::variable(0);
    Term lhs = Term::interior(Term::join(
        Term::closure(Term::meet(x, Term::closure(Term::complement(x)))), x));
    return Term::leq(std::move(lhs), Term::variable(0));
}

Term axiom_bd2() {
    // -x * f(x) <= f(fd(x))
    Term x = Term::variable(0);
    Term lhs = Term::meet(Term::complement(x), Term::closure(Term::variable(0)));
    Term rhs = Term::closure(Term::interior(Term::variable(0)));
    return Term::leq(std::move(lhs), std::move(rhs));
}

Term axiom_bw2() {
    // -(x * y * f(x*-y) * f(-x*y) * f(-x*-y)) = 1
    Term x = Term::variable(0), y = Term::variable(1);
    Term m = Term::meet(x, y);
    m = Term::meet(std::move(m), Term::closure(Term::meet(Term::variable(0), Term::complement(Term::variable(1)))));
    m = Term::meet(std::move(m), Term::closure(Term::meet(Term::complement(Term::variable(0)), Term::variable(1))));
    m = Term::meet(std::move(m), Term::closure(Term::meet(Term::complement(Term::variable(0)), Term::complement(Term::variable(1)))));
    return Term::complement(std::move(m));
}

Term axiom_geach() {
    // f(fd(x)) <= fd(f(x))
    return Term::leq(Term::closure(Term::interior(Term::variable(0))),
                     Term::interior(Term::closure(Term::variable(0))));
}

const std::vector<std::string>& axiom_names() {
    static const std::vector<std::string> names{"grz", "bd2", "bw2", "geach"};
    return names;
}

Term builtin_axiom(std::string_view name) {
    if (name == "grz") return axiom_grz();
    if (name == "bd2") return axiom_bd2();
    if (name == "bw2") return axiom_bw2();
    if (name == "geach") return axiom_geach();
    throw Error(Errc::InvalidArgument, "unknown axiom: " + std::string(name));
}

std::string to_string(const Term& t) {
    switch (t.kind) {
    case Term::Kind::Zero: return "0";
    case Term::Kind::One: return "1";
    case Term::Kind::Var: return "x" + std::to_string(t.var);
    case Term::Kind::Join: return "(" + to_string(t.kids[0]) + " + " + to_string(t.kids[1]) + ")";
    case Term::Kind::Meet: return "(" + to_string(t.kids[0]) + " . " + to_string(t.kids[1]) + ")";
    case Term::Kind::Compl: return "-" + to_string(t.kids[0]);
    case Term::Kind::Closure: return "f(" + to_string(t.kids[0]) + ")";
    case Term::Kind::Interior: return "fd(" + to_string(t.kids[0]) + ")";
    }
    return "?";
}

namespace {

struct Token {
    enum class Kind { LParen, RParen, Plus, Dot, Minus, F, Fd, Zero, One, Var, End };
    Kind kind;
    int var = -1;
    std::size_t pos = 0;
};

std::vector<Token> tokenize(std::string_view src) {
    std::vector<Token> toks;
    std::size_t i = 0;
    while (i < src.size()) {
        char c = src[i];
        if (std::isspace(static_cast<unsigned char>(c))) { ++i; continue; }
        Token t;
        t.pos = i;
        switch (c) {
        case '(': t.kind = Token::Kind::LParen; ++i; break;
        case ')': t.kind = Token::Kind::RParen; ++i; break;
        case '+': t.kind = Token::Kind::Plus; ++i; break;
        case '.': t.kind = Token::Kind::Dot; ++i; break;
        case '-': t.kind = Token::Kind::Minus; ++i; break;
        case '0': t.kind = Token::Kind::Zero; ++i; break;
        case '1': t.kind = Token::Kind::One; ++i; break;
        default: {
            if (!std::isalpha(static_cast<unsigned char>(c)))
                throw Error(Errc::ParseError,
                            "unexpected character '" + std::string(1, c) + "' at column " +
                                std::to_string(i + 1));
            std::size_t j = i;
            while (j < src.size() && std::isalnum(static_cast<unsigned char>(src[j]))) ++j;
            std::string_view word = src.substr(i, j - i);
            if (word == "f") t.kind = Token::Kind::F;
            else if (word == "fd") t.kind = Token::Kind::Fd;
            else if (word.size() >= 2 && word[0] == 'x') {
                t.kind = Token::Kind::Var;
                t.var = 0;
                for (std::size_t k = 1; k < word.size(); ++k) {
                    if (!std::isdigit(static_cast<unsigned char>(word[k])))
                        throw Error(Errc::ParseError, "bad variable '" + std::string(word) +
                                                          "' at column " + std::to_string(i + 1));
                    t.var = t.var * 10 + (word[k] - '0');
                }
            } else {
                throw Error(Errc::ParseError, "unknown symbol '" + std::string(word) +
                                                  "' at column " + std::to_string(i + 1));
            }
            i = j;
            break;
        }
        }
        toks.push_back(t);
    }
    toks.push_back(Token{Token::Kind::End, -1, src.size()});
    return toks;
}

struct Parser {
    const std::vector<Token>& toks;
    std::size_t at = 0;

    const Token& peek() const { return toks[at]; }
    Token take() { return toks[at++]; }

    [[noreturn]] void fail(const std::string& what) const {
        throw Error(Errc::ParseError, what + " at column " + std::to_string(peek().pos + 1));
    }

    void expect(Token::Kind k, const char* what) {
        if (peek().kind != k) fail(std::string("expected ") + what);
        ++at;
    }

    // infix:  sum := prod ('+' prod)*, prod := unary ('.' unary)*,
    //         unary := '-' unary | f/fd of unary-or-parenthesized | atom
    Term infix_sum() {
        Term t = infix_prod();
        while (peek().kind == Token::Kind::Plus) {
            ++at;
            t = Term::join(std::move(t), infix_prod());
        }
        return t;
    }

    Term infix_prod() {
        Term t = infix_unary();
        while (peek().kind == Token::Kind::Dot) {
            ++at;
            t = Term::meet(std::move(t), infix_unary());
        }
        return t;
    }

    Term infix_unary() {
        switch (peek().kind) {
        case Token::Kind::Minus: ++at; return Term::complement(infix_unary());
        case Token::Kind::F: ++at; return Term::closure(infix_unary());
        case Token::Kind::Fd: ++at; return Term::interior(infix_unary());
        case Token::Kind::LParen: {
            ++at;
            Term t = infix_sum();
            expect(Token::Kind::RParen, "')'");
            return t;
        }
        case Token::Kind::Zero: ++at; return Term::zero();
        case Token::Kind::One: ++at; return Term::one();
        case Token::Kind::Var: { Token t = take(); return Term::variable(t.var); }
        default: fail("expected a term");
        }
    }

    Term prefix() {
        switch (peek().kind) {
        case Token::Kind::Plus: ++at; { Term a = prefix(); return Term::join(std::move(a), prefix()); }
        case Token::Kind::Dot: ++at; { Term a = prefix(); return Term::meet(std::move(a), prefix()); }
        case Token::Kind::Minus: ++at; return Term::complement(prefix());
        case Token::Kind::F: ++at; return Term::closure(prefix());
        case Token::Kind::Fd: ++at; return Term::interior(prefix());
        case Token::Kind::Zero: ++at; return Term::zero();
        case Token::Kind::One: ++at; return Term::one();
        case Token::Kind::Var: { Token t = take(); return Term::variable(t.var); }
        case Token::Kind::LParen: {
            ++at;
            Term t = prefix();
            expect(Token::Kind::RParen, "')'");
            return t;
        }
        default: fail("expected a term");
        }
    }
};

} // namespace

Term parse_term(std::string_view src) {
    std::vector<Token> toks = tokenize(src);
    Parser p{toks};
    // A leading '+' or '.' can only start a prefix form.
    Term t = (toks[0].kind == Token::Kind::Plus || toks[0].kind == Token::Kind::Dot)
                 ? p.prefix()
                 : p.infix_sum();
    if (p.peek().kind != Token::Kind::End) p.fail("trailing input");
    return t;
}

bool frame_condition_bd2(const Frame& f) {
    if (!is_quasiorder(f)) throw Error(Errc::NotQuasiorder, "frame_condition_bd2");
    for (int x = 0; x < f.n; ++x)
        for (int y : BitRange(f.rel[x])) {
            if (x == y) continue;
            bool witness = false;
            for (int z1 : BitRange(f.rel[x])) {
                if ((f.rel[z1] & ~bit(y)) == 0) { witness = true; break; }
            }
            if (!witness) return false;
        }
    return true;
}

bool frame_condition_bw2(const Frame& f) {
    if (!is_quasiorder(f)) throw Error(Errc::NotQuasiorder, "frame_condition_bw2");
    for (int x = 0; x < f.n; ++x)
        for (int y1 : BitRange(f.rel[x]))
            for (int y2 : BitRange(f.rel[x])) {
                if (x == y1 || x == y2 || y1 == y2) continue;
                if (f.rel[x] & ~(bit(x) | bit(y1) | bit(y2))) return false;
            }
    return true;
}

bool is_fork_algebra(const ClosureAlgebra& a) {
    if (a.is_trivial()) throw Error(Errc::TrivialAlgebra, "is_fork_algebra");
    return check_equation(axiom_grz(), a).holds && check_equation(axiom_bd2(), a).holds &&
           check_equation(axiom_bw2(), a).holds;
}

WdpReport wdp_witness_check(const ClosureAlgebra& a) {
    if (a.atom_count() > 22)
        throw Error(Errc::SearchBudgetExceeded, "wdp scan too large");
    std::vector<Bits> opens;
    for (Bits x = 0; x < a.element_count(); ++x)
        if (a.is_open(x)) opens.push_back(x);
    for (Bits x : opens) {
        if (x == a.one()) continue;
        for (Bits y : opens) {
            if (y == a.one()) continue;
            if ((x | y) == a.one()) return {false, x, y};
        }
    }
    return {};
}

AtomShapeReport atom_shape_checks(const ClosureAlgebra& a) {
    if (a.is_trivial() || !is_fork_algebra(a))
        throw Error(Errc::NotForkAlgebra, "atom_shape_checks");
    AtomShapeReport rep;
    for (int at = 0; at < a.atom_count(); ++at) {
        for (int b : BitRange(a.atom_closure[at] & ~bit(at)))
            if (!a.is_closed(bit(b))) {
                rep.below_closure_closed = false;
                rep.closure_violations.emplace_back(at, b);
            }
        if (!a.is_closed(bit(at)) && !a.is_open(bit(at))) {
            rep.atoms_open_or_closed = false;
            rep.shape_violations.push_back(at);
        }
    }
    return rep;
}

} // namespace claw
