#ifndef CLAW_PROJECTIVE_HPP
#define CLAW_PROJECTIVE_HPP

#include <optional>
#include <string>

#include "claw/algebra.hpp"

namespace claw {

/// Dual form of the projectivity condition on a fork frame: connected, and
/// the down-sets of any two upper-level points meet.
bool frame_is_projective_fork(const Frame& f);

/// Directly indecomposable with f(a)*f(b) != 0 for all non-closed atom
/// pairs; equivalent to projectivity in the fork variety.
bool is_projective_fork(const ClosureAlgebra& a); // NotForkAlgebra

/// Necessary condition for projectivity in the height-2 / local-width-m
/// variety: indecomposable, and every k <= m non-closed atoms have a jointly
/// nonzero closure meet.
bool necessary_condition_v2m(const ClosureAlgebra& a, int m); // WrongVariety

/// The five-element partition witnessing an embedded copy of the W algebra,
/// built from the first non-closed atom pair with disjoint closures.
struct BWWitness {
    int atom_a = -1, atom_b = -1;
    Bits v = 0, d = 0, u = 0, t = 0, u_prime = 0, w = 0;
    ClosureAlgebra subalgebra; // isomorphic copy of the W algebra
    AlgHom embedding;          // subalgebra -> a
};
std::optional<BWWitness> find_bw_subalgebra(const ClosureAlgebra& a); // NotForkAlgebra, NotIndecomposable

/// One verified witness per qualifying atom pair, in lexicographic order.
std::vector<BWWitness> find_bw_witnesses(const ClosureAlgebra& a);

/// A surjective bounded morphism sup -> sub fixing the subframe, together
/// with the proof case that fixed each point.
struct CaseEntry {
    int point = -1;          // sup point
    std::string tag;         // id / out / const / 1a / 1b / 2y / 2a / 2b / 3a..3e
    int value = -1;          // chosen image, as a sub-frame point
};
struct RetractionPlan {
    Frame sup;
    Subframe sub;      // the embedded image, frame plus original points
    Morphism map;      // sup -> sub.frame
    Bits set_w1 = 0, set_w2 = 0, set_w3 = 0;
    std::vector<CaseEntry> case_log; // ordered by point
};

/// Constructive retraction of a fork frame onto a projective generated
/// subframe, by the lower-level case analysis.  Every free choice is
/// resolved by least index.
RetractionPlan build_retraction(const Frame& sup, const Morphism& v_embedding);
// NotForkFrame, NotGenerated, NotProjectiveSubalgebra, ProofGap

/// Oracle: exhaustive search over all maps fixing the embedded subframe;
/// returns the lexicographically least retraction if one exists.
std::optional<Morphism> brute_force_retraction(const Frame& sup, const Morphism& v_embedding,
                                               std::uint64_t budget = 50'000'000);

/// For every extension of v by at most max_points - |v| fresh points (up to
/// isomorphism fixing v setwise) in the given frame class, search for a
/// retraction onto v.
enum class ProbeClass { Fork, Poset, Quasiorder };
struct ProbeReport {
    std::uint64_t extensions = 0;
    std::uint64_t retractable = 0;
    std::vector<Frame> failures; // extensions with no retraction
    bool all_retractable() const { return retractable == extensions; }
};
ProbeReport bounded_injectivity_probe(const Frame& v, int max_points,
                                      ProbeClass cls = ProbeClass::Fork,
                                      std::uint64_t budget = 50'000'000);

} // namespace claw

#endif
