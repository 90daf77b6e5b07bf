#include "claw/catalog.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "claw/projective.hpp"

namespace claw {

std::uint64_t canonical_key(const Frame& f) {
    if (f.n > 8) throw Error(Errc::CapExceeded, "canonical_key capped at 8 points");
    std::vector<int> perm(f.n);
    std::iota(perm.begin(), perm.end(), 0);
    std::uint64_t best = ~std::uint64_t{0};
    do {
        std::uint64_t key = 0;
        for (int i = 0; i < f.n; ++i)
            for (int j = 0; j < f.n; ++j)
                if (f.has(perm[i], perm[j])) key |= std::uint64_t{1} << (i * f.n + j);
        best = std::min(best, key);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return best | (std::uint64_t(f.n) << 56);
}

Frame frame_from_key(std::uint64_t key) {
    int n = static_cast<int>(key >> 56);
    Frame f(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if ((key >> (i * n + j)) & 1) f.add(i, j);
    return f;
}

namespace {

bool passes(const CatalogQuery& q, const Frame& f) {
    if (q.poset || q.fork) {
        if (!is_antisymmetric(f)) return false;
    }
    if (q.connected && !is_connected(f)) return false;
    int height_cap = q.fork ? std::min(q.max_height.value_or(2), 2) : q.max_height.value_or(-1);
    int lw_cap = q.fork ? std::min(q.max_local_width.value_or(2), 2) : q.max_local_width.value_or(-1);
    if (height_cap >= 0 || lw_cap >= 0) {
        OrderStats st = order_stats(f);
        if (height_cap >= 0 && st.height > height_cap) return false;
        if (lw_cap >= 0 && st.local_width > lw_cap) return false;
    }
    return true;
}

// All quasiorders on n points by brute force over the off-diagonal bits.
template <typename Fn>
void raw_quasiorders(int n, Fn&& sink) {
    int bits = n * (n - 1);
    for (std::uint64_t m = 0; m < (std::uint64_t{1} << bits); ++m) {
        Frame f(n);
        int k = 0;
        for (int x = 0; x < n; ++x) {
            f.add(x, x);
            for (int y = 0; y < n; ++y) {
                if (x == y) continue;
                if ((m >> k) & 1) f.add(x, y);
                ++k;
            }
        }
        if (is_transitive(f)) sink(f);
    }
}

// Posets of height <= 2 on n points: lowers 0..k-1 get up-sets among the
// uppers, every upper needs a lower below it.  The number of minimal points
// is an isomorphism invariant, so splits do not overlap.
template <typename Fn>
void bipartite_posets(int n, int lw_cap, Fn&& sink) {
    for (int k = n; k >= 0; --k) {
        int m = n - k;
        std::vector<Bits> upsets;
        Bits uppers = full_mask(n) & ~full_mask(k);
        for (Bits s = 0; s < (Bits{1} << m); ++s)
            if (lw_cap < 0 || popcount(s) <= lw_cap) upsets.push_back(s << k);
        if (m > 0 && k == 0) continue; // uppers need support
        std::vector<std::size_t> odo(k, 0);
        for (bool more = true; more;) {
            Bits covered = 0;
            for (int i = 0; i < k; ++i) covered |= upsets[odo[i]];
            if (covered == uppers) {
                Frame f(n);
                for (int x = 0; x < n; ++x) f.add(x, x);
                for (int i = 0; i < k; ++i) f.rel[i] |= upsets[odo[i]];
                sink(f);
            }
            more = false;
            for (int i = k; i-- > 0;) {
                if (++odo[i] < upsets.size()) { more = true; break; }
                odo[i] = 0;
            }
        }
        if (k == 0 && m == 0) break;
    }
}

} // namespace

void enumerate(const CatalogQuery& q, const std::function<void(const Frame&)>& emit) {
    if (q.max_points > q.hard_cap)
        throw Error(Errc::CapExceeded, "catalog capped at " + std::to_string(q.hard_cap) + " points");
    bool height2 = q.fork || (q.poset && q.max_height.value_or(99) <= 2);
    for (int n = 1; n <= q.max_points; ++n) {
        if (n > 5 && !height2)
            throw Error(Errc::CapExceeded, "beyond 5 points only height-2 poset queries are supported");
        if (n > 5 && !q.up_to_iso)
            throw Error(Errc::CapExceeded, "labeled enumeration capped at 5 points");
        std::set<std::uint64_t> keys;
        auto sink = [&](const Frame& f) {
            if (!passes(q, f)) return;
            if (q.up_to_iso) keys.insert(canonical_key(f));
            else emit(f);
        };
        if (height2 && q.up_to_iso) {
            int lw = q.fork ? std::min(q.max_local_width.value_or(2), 2) : q.max_local_width.value_or(-1);
            bipartite_posets(n, lw, sink);
        } else {
            raw_quasiorders(n, sink);
        }
        for (std::uint64_t key : keys) emit(frame_from_key(key));
    }
}

std::vector<Frame> enumerate_all(const CatalogQuery& q) {
    std::vector<Frame> out;
    enumerate(q, [&](const Frame& f) { out.push_back(f); });
    return out;
}

std::uint64_t count_frames(const CatalogQuery& q) {
    std::uint64_t n = 0;
    enumerate(q, [&](const Frame&) { ++n; });
    return n;
}

Frame random_fork_frame(std::mt19937_64& rng, int max_points) {
    int n = std::uniform_int_distribution<int>(1, max_points)(rng);
    int k = std::uniform_int_distribution<int>(1, n)(rng); // minimal points
    int m = n - k;
    Frame f(n);
    for (int x = 0; x < n; ++x) f.add(x, x);
    for (int i = 0; i < k; ++i) {
        if (m == 0) break;
        int deg = std::uniform_int_distribution<int>(0, 2)(rng);
        for (int d = 0; d < deg; ++d)
            f.add(i, k + std::uniform_int_distribution<int>(0, m - 1)(rng));
    }
    // Uppers that nothing reaches become isolated minimal points; that is
    // still a fork frame.  Scramble the point order.
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    Frame g = apply_permutation(f, perm);
    if (!is_fork_frame(g)) throw Error(Errc::Consistency, "random frame is not a fork frame");
    return g;
}

Bits random_projective_generated_subframe(std::mt19937_64& rng, const Frame& fork) {
    std::vector<Bits> candidates;
    for (Bits s = 1; s < (Bits{1} << fork.n); ++s) {
        if (!is_up_closed(fork, s)) continue;
        if (frame_is_projective_fork(subframe(fork, s).frame)) candidates.push_back(s);
    }
    if (candidates.empty())
        throw Error(Errc::Consistency, "no projective generated subframe found");
    return candidates[std::uniform_int_distribution<std::size_t>(0, candidates.size() - 1)(rng)];
}

} // namespace claw
