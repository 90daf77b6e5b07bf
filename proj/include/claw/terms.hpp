#ifndef CLAW_TERMS_HPP
#define CLAW_TERMS_HPP

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "claw/algebra.hpp"

namespace claw {

/// Modal terms over variables, 0/1, join, meet, complement, closure f and
/// interior fd.
struct Term {
    enum class Kind { Zero, One, Var, Join, Meet, Compl, Closure, Interior };
    Kind kind = Kind::Zero;
    int var = -1;
    std::vector<Term> kids;

    static Term zero() { return {}; }
    static Term one() { return {Kind::One, -1, {}}; }
    static Term variable(int i) { return {Kind::Var, i, {}}; }
    static Term join(Term a, Term b) { return {Kind::Join, -1, {std::move(a), std::move(b)}}; }
    static Term meet(Term a, Term b) { return {Kind::Meet, -1, {std::move(a), std::move(b)}}; }
    static Term complement(Term a) { return {Kind::Compl, -1, {std::move(a)}}; }
    static Term closure(Term a) { return {Kind::Closure, -1, {std::move(a)}}; }
    static Term interior(Term a) { return {Kind::Interior, -1, {std::move(a)}}; }
    /// s <= t rendered as the equation -s + t = 1.
    static Term leq(Term s, Term t) { return join(complement(std::move(s)), std::move(t)); }

    int var_count() const;
};

Bits eval(const Term& t, const ClosureAlgebra& a, std::span<const Bits> env); // UnboundVariable

/// Exhaustive validity of t = 1 over all assignments, in lexicographic
/// order with variable 0 most significant; the first violation is kept.
struct EquationReport {
    bool holds = true;
    std::vector<Bits> witness;
    std::uint64_t assignments = 0;
    int vars = 0;
};
EquationReport check_equation(const Term& t, const ClosureAlgebra& a,
                              std::uint64_t budget = std::uint64_t{1} << 20);

// The fixed axioms, each in "term = 1" form.
Term axiom_grz();
Term axiom_bd2();
Term axiom_bw2();
Term axiom_geach();
const std::vector<std::string>& axiom_names(); // {"grz","bd2","bw2","geach"}
Term builtin_axiom(std::string_view name);     // InvalidArgument if unknown

std::string to_string(const Term& t);
Term parse_term(std::string_view src); // ParseError; infix or prefix

// Literal first-order frame correspondents of BD2 and BW2.
bool frame_condition_bd2(const Frame& f); // NotQuasiorder
bool frame_condition_bw2(const Frame& f); // NotQuasiorder

/// Membership in the fork variety: Grz, BD2 and BW2 all valid.
bool is_fork_algebra(const ClosureAlgebra& a); // TrivialAlgebra

/// Open elements x,y with x+y = 1 force x = 1 or y = 1 (the per-algebra
/// kernel of the weak disjunction property).
struct WdpReport {
    bool holds = true;
    Bits x = 0, y = 0; // witness when holds is false
};
WdpReport wdp_witness_check(const ClosureAlgebra& a);

/// Per-atom shape facts of fork algebras: atoms below f(a) other than a are
/// closed, and every atom is open or closed.
struct AtomShapeReport {
    bool below_closure_closed = true;
    bool atoms_open_or_closed = true;
    std::vector<std::pair<int, int>> closure_violations; // (a, offending atom)
    std::vector<int> shape_violations;
};
AtomShapeReport atom_shape_checks(const ClosureAlgebra& a); // NotForkAlgebra

} // namespace claw

#endif
