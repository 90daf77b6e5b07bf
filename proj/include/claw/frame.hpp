#ifndef CLAW_FRAME_HPP
#define CLAW_FRAME_HPP

#include <optional>
#include <string>
#include <vector>

#include "claw/bits.hpp"
#include "claw/error.hpp"

namespace claw {

// Unification/μ-set types, shared between quasiordered frames and unifier
// posets: unitary (1), finitary (ω), infinitary (∞), nullary (0).
enum class UnifType { Unitary, Finitary, Infinitary, Nullary };
const char* unif_type_name(UnifType t);

/// A finite frame <W,R>: points 0..n-1, rel[x] is the successor set R(x).
/// Values are immutable once built; every operation below is a pure function.
struct Frame {
    int n = 0;
    std::vector<Bits> rel;             // rel[x] bit y  <=>  x R y
    std::vector<std::string> labels;   // empty, or one name per point

    Frame() = default;
    explicit Frame(int points);

    bool has(int x, int y) const { return has_bit(rel[x], y); }
    void add(int x, int y) { rel[x] |= bit(y); }
    Bits universe() const { return full_mask(n); }
    std::string point_name(int x) const;
};

bool frames_equal(const Frame& f, const Frame& g); // structural, labels ignored

bool is_reflexive(const Frame& f);
bool is_transitive(const Frame& f);
bool is_antisymmetric(const Frame& f);
bool is_quasiorder(const Frame& f);
bool is_partial_order(const Frame& f);

Frame reflexive_transitive_closure(const Frame& f);
Frame converse(const Frame& f);

// Set operators of the quasiorder: R(x), up/down closures, strict up-set
// (successors outside x's cluster).
Bits up_set(const Frame& f, Bits s);
Bits down_set(const Frame& f, Bits s);
Bits strict_up(const Frame& f, int x);
bool is_up_closed(const Frame& f, Bits s);

/// Maximal R∪R˘-connected subsets, ordered by least member.
std::vector<Bits> components(const Frame& f);
bool is_connected(const Frame& f);

/// Clusters of theta (mutual reachability) with the induced partial order.
/// classes are ordered by least member; order.rel is on class indices.
struct ClusterPoset {
    std::vector<Bits> classes;
    std::vector<int> class_of;  // point -> class index
    Frame order;                // partial order on classes
};
ClusterPoset cluster_poset(const Frame& f); // NotQuasiorder

struct OrderStats {
    int height = 0;      // clusters in a longest chain
    int width = 0;       // largest antichain of clusters
    int local_width = 0; // max width of an up-set
};
OrderStats order_stats(const Frame& f); // NotQuasiorder

/// Lower level (minimal points) and upper level of a height-<=2 partial
/// order; lower ∪ upper = W. Throws NotForkFrame otherwise.
struct Levels {
    Bits lower = 0;
    Bits upper = 0;
};
Levels levels(const Frame& f);

/// Partial order of height <= 2 and local width <= 2 (the duals of the
/// algebras in the fork variety).
bool is_fork_frame(const Frame& f);

/// A total point map between frames; the dual object of an algebra
/// homomorphism.
struct Morphism {
    Frame source;
    Frame target;
    std::vector<int> map; // source point -> target point

    int operator()(int x) const { return map[x]; }
};

bool is_valid(const Morphism& m);
bool is_injective(const Morphism& m);
bool is_surjective(const Morphism& m);
Bits image_of(const Morphism& m);

/// Forth condition plus the back condition
/// p(x) S z  =>  exists y with x R y and p(y) = z.
bool is_bounded_morphism(const Morphism& m);

/// True iff the embedding is injective with an up-closed induced image.
bool is_generated_subframe(const Frame& sub, const Frame& sup, const Morphism& embedding);

/// Induced subframe on a point set; points[i] is the original index of
/// subframe point i (ascending).
struct Subframe {
    Frame frame;
    std::vector<int> points;
};
Subframe subframe(const Frame& f, Bits s);
Morphism inclusion_morphism(const Subframe& sub, const Frame& sup);

/// All dense antichains of a quasiorder.  Every returned set has the same
/// cardinality (one representative per maximal cluster); the type tag is
/// Unitary for cardinality 1 and Finitary otherwise.
struct FrameMu {
    std::vector<Bits> sets; // ascending by mask
    UnifType type = UnifType::Nullary;
};
FrameMu mu_sets(const Frame& f); // NotQuasiorder

std::optional<std::vector<int>> find_frame_isomorphism(const Frame& f, const Frame& g);
Frame apply_permutation(const Frame& f, const std::vector<int>& perm); // point x -> perm[x]

// The two built-in frames: the 2-pronged fork (u < v,w) and the W-shaped
// 5-point frame (u < t,v; u' < v,w).
Frame fork_frame();
Frame w_frame();

} // namespace claw

#endif
