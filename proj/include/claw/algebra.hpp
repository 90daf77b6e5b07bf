#ifndef CLAW_ALGEBRA_HPP
#define CLAW_ALGEBRA_HPP

#include <optional>
#include <vector>

#include "claw/frame.hpp"

namespace claw {

/// A finite closure algebra represented by the quasiorder on its atoms.
/// Elements are atom sets (Bits); f is the possibility operator of the atom
/// frame, so f(a) of an atom is its down-set.  The trivial one-element
/// algebra is the degenerate instance with no atoms; it cannot be read from
/// a frame file but arises as a quotient by the full ideal.
struct ClosureAlgebra {
    Frame atoms;
    std::vector<Bits> atom_closure; // f({a}) per atom

    int atom_count() const { return atoms.n; }
    bool is_trivial() const { return atoms.n == 0; }
    Bits one() const { return atoms.universe(); }
    std::uint64_t element_count() const {
        if (atoms.n > 62) throw Error(Errc::CapExceeded, "element scan beyond 62 atoms");
        return std::uint64_t{1} << atoms.n;
    }

    Bits closure(Bits x) const;
    Bits interior(Bits x) const;
    bool is_closed(Bits x) const { return closure(x) == x; }
    bool is_open(Bits x) const { return interior(x) == x; }
    bool is_clopen(Bits x) const { return is_closed(x) && is_open(x); }

    std::string element_name(Bits x) const; // "{u,v}" style
};

ClosureAlgebra cm(const Frame& f); // NotQuasiorder
Frame cf(const ClosureAlgebra& a); // atoms ordered by a <= f(b)

ClosureAlgebra two_element_algebra();
ClosureAlgebra trivial_algebra();
ClosureAlgebra fork_algebra(); // cm of the fork
ClosureAlgebra w_algebra();    // cm of the W frame

std::vector<Bits> closed_elements(const ClosureAlgebra& a); // ascending

bool algebras_equal(const ClosureAlgebra& a, const ClosureAlgebra& b);

/// Principal closed ideal, stored by its generator (a closed element).
struct ClosedIdeal {
    Bits generator = 0;
};

/// A homomorphism source -> target, stored by its dual bounded morphism
/// cf(target) -> cf(source); h(x) is the dual preimage of x.
struct AlgHom {
    ClosureAlgebra source;
    ClosureAlgebra target;
    Morphism dual; // target.atoms -> source.atoms

    Bits apply(Bits x) const;
    Bits dual_image() const { return image_of(dual); }
    Bits kernel_generator() const { return source.one() & ~dual_image(); }
    bool surjective() const; // dual injective with generated image
    bool injective() const;  // dual surjective
};

bool verify_hom(const AlgHom& h);
AlgHom identity_hom(const ClosureAlgebra& a);
AlgHom compose(const AlgHom& g, const AlgHom& f); // g after f

enum class HomKind { Any, Surjective, Injective };

/// All homomorphisms a -> b as bounded morphisms cf(b) -> cf(a), found by
/// backtracking in ascending atom order (deterministic output order).
std::vector<AlgHom> hom_search(const ClosureAlgebra& a, const ClosureAlgebra& b,
                               HomKind kind = HomKind::Any);

/// Direct product; the atom frame is the disjoint union.
struct ProductResult {
    ClosureAlgebra algebra;
    Bits left_one;  // image of (1,0)
    Bits right_one; // image of (0,1)
};
ProductResult product(const ClosureAlgebra& a, const ClosureAlgebra& b);

/// Relative algebra on the atoms below a closed element.  x -> b*x is always
/// a surjective Boolean homomorphism onto it; it respects the closure
/// operator exactly when b is clopen (see canonical_map_is_modal_hom).
struct RelativeResult {
    ClosureAlgebra algebra;
    std::vector<int> atom_points; // relative atom -> original atom
    bool canonical_map_is_modal_hom = false;
};
RelativeResult relative_algebra(const ClosureAlgebra& a, Bits b); // NotClosed, ZeroBound

/// Quotient by a closed ideal, realized as the complex algebra of the
/// generated subframe on the atoms outside the ideal.
struct QuotientResult {
    ClosureAlgebra algebra;
    AlgHom projection; // the canonical surjection
};
QuotientResult quotient(const ClosureAlgebra& a, ClosedIdeal k); // NotClosed

bool is_directly_indecomposable(const ClosureAlgebra& a); // TrivialAlgebra

std::optional<AlgHom> find_isomorphism(const ClosureAlgebra& a, const ClosureAlgebra& b);

} // namespace claw

#endif
