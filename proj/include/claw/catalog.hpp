#ifndef CLAW_CATALOG_HPP
#define CLAW_CATALOG_HPP

#include <functional>
#include <optional>
#include <random>

#include "claw/frame.hpp"

namespace claw {

/// Constraints for small-frame enumeration.  Quasiorder is the base class;
/// fork implies poset, height <= 2 and local width <= 2.
struct CatalogQuery {
    int max_points = 0;
    bool poset = false;
    bool connected = false;
    bool fork = false;
    std::optional<int> max_height;
    std::optional<int> max_local_width;
    bool up_to_iso = true;
    int hard_cap = 7;
};

/// Streams every frame matching the query exactly once (up to isomorphism by
/// default), sizes ascending and canonical keys ascending within a size.
/// Beyond 5 points only height-<=2 poset queries are supported (CapExceeded
/// otherwise); labeled enumeration is capped at 5 points.
void enumerate(const CatalogQuery& q, const std::function<void(const Frame&)>& emit);
std::vector<Frame> enumerate_all(const CatalogQuery& q);
std::uint64_t count_frames(const CatalogQuery& q);

/// Minimal row-major adjacency bit-string over all point permutations,
/// packed with the size; equal keys iff isomorphic.  Capped at 8 points.
std::uint64_t canonical_key(const Frame& f);
Frame frame_from_key(std::uint64_t key);

/// Uniform sampling helpers for property tests; frames come out with a
/// random point order.
Frame random_fork_frame(std::mt19937_64& rng, int max_points);
Bits random_projective_generated_subframe(std::mt19937_64& rng, const Frame& fork);

} // namespace claw

#endif
