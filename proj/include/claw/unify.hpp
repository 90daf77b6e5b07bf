#ifndef CLAW_UNIFY_HPP
#define CLAW_UNIFY_HPP

#include <optional>

#include "claw/algebra.hpp"

namespace claw {

/// A canonical algebraic unifier: the quotient by an admissible congruence
/// together with its projection.  The projective target is the quotient
/// itself (admissibility in the fork variety makes the quotient projective).
struct Unifier {
    ClosureAlgebra source;
    ClosedIdeal kernel;
    ClosureAlgebra quotient;
    AlgHom hom; // source -> quotient, kernel as stated
};

/// The two-element algebra is a homomorphic image iff the algebra is
/// non-trivial.
bool is_unifiable(const ClosureAlgebra& a);

/// All closed ideals whose quotient is projective, ascending by generator;
/// the full ideal (trivial quotient) is excluded.
std::vector<ClosedIdeal> admissible_congruences(const ClosureAlgebra& a); // NotForkAlgebra

Unifier canonical_unifier(const ClosureAlgebra& a, ClosedIdeal k);

/// Witness h with u2.hom = h . u1.hom, if u1 is more general than u2.
/// Kernel inclusion decides first and the homomorphism search certifies;
/// a disagreement between the two raises Consistency.
std::optional<AlgHom> more_general(const Unifier& u1, const Unifier& u2);

struct MuCertificate {
    Bits dominated_kernel = 0;  // a non-minimal admissible congruence
    std::size_t dominating = 0; // index into mu
    AlgHom witness;             // mu[dominating].quotient -> dominated quotient
};
struct MuReport {
    std::vector<Unifier> mu; // ascending by kernel generator
    UnifType type = UnifType::Nullary;
    std::vector<MuCertificate> certificates;
};

/// The mu-set realized by the inclusion-minimal admissible congruences,
/// cross-checked against the dense antichains of the unifier poset.
MuReport mu_set(const ClosureAlgebra& a); // NotForkAlgebra, NotUnifiable

UnifType unification_type(const ClosureAlgebra& a);

/// Definition-level oracle: every unifier <u,B> with B projective and at
/// most `bound` atoms, quotiented by mutual generality, with the mu-sets of
/// the resulting class poset.
struct BruteUnifier {
    AlgHom hom; // a -> target, target projective
    Bits kernel = 0;
};
struct BruteMuReport {
    std::vector<BruteUnifier> unifiers;
    std::vector<int> class_of;             // unifier -> class index
    std::vector<int> class_rep;            // class -> representative unifier
    std::vector<int> maximal_classes;      // ascending
    std::vector<std::vector<int>> mu_sets; // dense antichains of the class poset
    UnifType type = UnifType::Nullary;
};
BruteMuReport brute_force_mu(const ClosureAlgebra& a, int bound,
                             std::uint64_t budget = 20'000'000); // SearchBudgetExceeded

/// True iff the computed mu-set and the oracle agree up to mutual
/// generality.
bool mu_matches_brute(const ClosureAlgebra& a, const MuReport& mu, const BruteMuReport& brute);

/// Pairwise products of projective fork algebras are never projective
/// (unification in the fork variety is not filtering); the report carries
/// the per-pair verdicts and the per-algebra Geach status.
struct FilteringReport {
    struct Pair {
        std::size_t left, right;
        bool product_projective;
        Bits clopen_witness; // a clopen element of the product besides 0,1
    };
    std::vector<Pair> pairs;
    std::vector<bool> geach_holds;
    bool any_product_projective = false;
};
FilteringReport filtering_probe(const std::vector<ClosureAlgebra>& catalog);

} // namespace claw

#endif
