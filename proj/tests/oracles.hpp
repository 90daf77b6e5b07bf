// Test-only reference implementations, kept independent of the library code
// paths they check.
#ifndef CLAW_TEST_ORACLES_HPP
#define CLAW_TEST_ORACLES_HPP

#include <algorithm>
#include <random>
#include <vector>

#include "claw/algebra.hpp"
#include "claw/frame.hpp"

namespace claw::oracles {

// Components by explicit path search: y is reachable from x over R or its
// converse in any number of steps.
inline std::vector<Bits> components_by_paths(const Frame& f) {
    std::vector<Bits> comps;
    for (int x = 0; x < f.n; ++x) {
        Bits comp = bit(x);
        bool grew = true;
        while (grew) {
            grew = false;
            for (int a = 0; a < f.n; ++a) {
                if (!has_bit(comp, a)) continue;
                for (int b = 0; b < f.n; ++b)
                    if ((f.has(a, b) || f.has(b, a)) && !has_bit(comp, b)) {
                        comp |= bit(b);
                        grew = true;
                    }
            }
        }
        bool fresh = true;
        for (Bits c : comps)
            if (c & comp) fresh = false;
        if (fresh) comps.push_back(comp);
    }
    std::sort(comps.begin(), comps.end(),
              [](Bits a, Bits b) { return lowest_bit(a) < lowest_bit(b); });
    return comps;
}

// Height and width by enumerating every subset of clusters and testing the
// chain/antichain property directly.
struct BruteStats {
    int height = 0;
    int width = 0;
    int local_width = 0;
};

inline int longest_chain_subsets(const Frame& f, const std::vector<Bits>& classes) {
    auto rep = [&](int c) { return lowest_bit(classes[c]); };
    int k = static_cast<int>(classes.size());
    int best = 0;
    for (Bits s = 1; s < (Bits{1} << k); ++s) {
        bool chain = true;
        for (int i = 0; i < k && chain; ++i)
            for (int j = 0; j < k && chain; ++j) {
                if (i == j || !has_bit(s, i) || !has_bit(s, j)) continue;
                if (!f.has(rep(i), rep(j)) && !f.has(rep(j), rep(i))) chain = false;
            }
        if (chain) best = std::max(best, popcount(s));
    }
    return best;
}

inline int widest_antichain_subsets(const Frame& f, const std::vector<Bits>& classes) {
    auto rep = [&](int c) { return lowest_bit(classes[c]); };
    int k = static_cast<int>(classes.size());
    int best = 0;
    for (Bits s = 1; s < (Bits{1} << k); ++s) {
        bool antichain = true;
        for (int i = 0; i < k && antichain; ++i)
            for (int j = 0; j < k && antichain; ++j) {
                if (i == j || !has_bit(s, i) || !has_bit(s, j)) continue;
                if (f.has(rep(i), rep(j)) || f.has(rep(j), rep(i))) antichain = false;
            }
        if (antichain) best = std::max(best, popcount(s));
    }
    return best;
}

inline BruteStats stats_by_subsets(const Frame& f) {
    BruteStats st;
    ClusterPoset cp = cluster_poset(f);
    st.height = longest_chain_subsets(f, cp.classes);
    st.width = widest_antichain_subsets(f, cp.classes);
    for (int x = 0; x < f.n; ++x) {
        Subframe up = subframe(f, up_set(f, bit(x)));
        ClusterPoset local = cluster_poset(up.frame);
        st.local_width = std::max(st.local_width, widest_antichain_subsets(up.frame, local.classes));
    }
    return st;
}

// Bounded-morphism check written as the two quantifier loops.
inline bool bounded_by_loops(const Frame& src, const Frame& dst, const std::vector<int>& map) {
    for (int x = 0; x < src.n; ++x)
        for (int y = 0; y < src.n; ++y)
            if (src.has(x, y) && !dst.has(map[x], map[y])) return false;
    for (int x = 0; x < src.n; ++x)
        for (int z = 0; z < dst.n; ++z) {
            if (!dst.has(map[x], z)) continue;
            bool hit = false;
            for (int y = 0; y < src.n && !hit; ++y)
                if (src.has(x, y) && map[y] == z) hit = true;
            if (!hit) return false;
        }
    return true;
}

// Dense antichains straight from the definitions.
inline std::vector<Bits> dense_antichains_by_subsets(const Frame& f) {
    std::vector<Bits> out;
    for (Bits s = 1; s < (Bits{1} << f.n); ++s) {
        bool antichain = true;
        for (int x = 0; x < f.n && antichain; ++x)
            for (int y = 0; y < f.n && antichain; ++y) {
                if (x == y || !has_bit(s, x) || !has_bit(s, y)) continue;
                if (f.has(x, y) || f.has(y, x)) antichain = false;
            }
        if (!antichain) continue;
        bool dense = true;
        for (int x = 0; x < f.n && dense; ++x) {
            bool below = false;
            for (int m = 0; m < f.n && !below; ++m)
                if (has_bit(s, m) && f.has(x, m)) below = true;
            dense = below;
        }
        if (dense) out.push_back(s);
    }
    return out;
}

// Every homomorphism a -> b found on the element level: candidate atom
// images, extended additively, verified against the operation tables.
inline std::vector<std::vector<Bits>> element_level_homs(const ClosureAlgebra& a,
                                                         const ClosureAlgebra& b) {
    std::vector<std::vector<Bits>> found;
    int n = a.atom_count();
    std::vector<Bits> img(n, 0);
    auto extend = [&](Bits x) {
        Bits r = 0;
        for (int at : BitRange(x)) r |= img[at];
        return r;
    };
    auto check = [&]() {
        for (Bits x = 0; x < a.element_count(); ++x) {
            for (Bits y = 0; y < a.element_count(); ++y) {
                if (extend(x | y) != (extend(x) | extend(y))) return false;
                if (extend(x & y) != (extend(x) & extend(y))) return false;
            }
            if (extend(a.one() & ~x) != (b.one() & ~extend(x))) return false;
            if (extend(a.closure(x)) != b.closure(extend(x))) return false;
        }
        return extend(a.one()) == b.one();
    };
    for (bool more = true; more;) {
        if (check()) found.push_back(img);
        more = false;
        for (int i = n; i-- > 0;) {
            if (++img[i] < b.element_count()) { more = true; break; }
            img[i] = 0;
        }
    }
    return found;
}

// A random quasiorder: random edges closed under reflexivity/transitivity.
inline Frame random_quasiorder(std::mt19937_64& rng, int n) {
    Frame f(n);
    std::uniform_int_distribution<int> coin(0, 3);
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            if (coin(rng) == 0) f.add(x, y);
    return reflexive_transitive_closure(f);
}

inline Frame random_frame(std::mt19937_64& rng, int n) {
    Frame f(n);
    std::uniform_int_distribution<int> coin(0, 2);
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            if (coin(rng) == 0) f.add(x, y);
    return f;
}

} // namespace claw::oracles

#endif
