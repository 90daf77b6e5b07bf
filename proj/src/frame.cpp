#include "claw/frame.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace claw {

const char* errc_name(Errc c) {
    switch (c) {
    case Errc::NotQuasiorder: return "NotQuasiorder";
    case Errc::NotForkFrame: return "NotForkFrame";
    case Errc::NotForkAlgebra: return "NotForkAlgebra";
    case Errc::NotClosed: return "NotClosed";
    case Errc::ZeroBound: return "ZeroBound";
    case Errc::TrivialAlgebra: return "TrivialAlgebra";
    case Errc::NotIndecomposable: return "NotIndecomposable";
    case Errc::NotProjectiveSubalgebra: return "NotProjectiveSubalgebra";
    case Errc::NotGenerated: return "NotGenerated";
    case Errc::NotUnifiable: return "NotUnifiable";
    case Errc::WrongVariety: return "WrongVariety";
    case Errc::UnboundVariable: return "UnboundVariable";
    case Errc::SearchBudgetExceeded: return "SearchBudgetExceeded";
    case Errc::CapExceeded: return "CapExceeded";
    case Errc::ProofGap: return "ProofGap";
    case Errc::Consistency: return "Consistency";
    case Errc::ParseError: return "ParseError";
    case Errc::InvalidArgument: return "InvalidArgument";
    }
    return "Error";
}

const char* unif_type_name(UnifType t) {
    switch (t) {
    case UnifType::Unitary: return "1";
    case UnifType::Finitary: return "omega";
    case UnifType::Infinitary: return "infinity";
    case UnifType::Nullary: return "0";
    }
    return "?";
}

Frame::Frame(int points) : n(points), rel(points, 0) {
    if (points < 0 || points > kMaxPoints)
        throw Error(Errc::InvalidArgument, "frame size out of range: " + std::to_string(points));
}

std::string Frame::point_name(int x) const {
    if (!labels.empty()) return labels[x];
    return std::to_string(x);
}

bool frames_equal(const Frame& f, const Frame& g) {
    return f.n == g.n && f.rel == g.rel;
}

bool is_reflexive(const Frame& f) {
    for (int x = 0; x < f.n; ++x)
        if (!f.has(x, x)) return false;
    return true;
}

bool is_transitive(const Frame& f) {
    for (int x = 0; x < f.n; ++x) {
        Bits reach = 0;
        for (int y : BitRange(f.rel[x])) reach |= f.rel[y];
        if (reach & ~f.rel[x]) return false;
    }
    return true;
}

bool is_antisymmetric(const Frame& f) {
    for (int x = 0; x < f.n; ++x)
        for (int y : BitRange(f.rel[x]))
            if (y != x && f.has(y, x)) return false;
    return true;
}

bool is_quasiorder(const Frame& f) { return is_reflexive(f) && is_transitive(f); }
bool is_partial_order(const Frame& f) { return is_quasiorder(f) && is_antisymmetric(f); }

static void require_quasiorder(const Frame& f, const char* op) {
    if (!is_quasiorder(f))
        throw Error(Errc::NotQuasiorder, std::string(op) + " requires a reflexive transitive frame");
}

Frame reflexive_transitive_closure(const Frame& f) {
    Frame g = f;
    for (int x = 0; x < g.n; ++x) g.rel[x] |= bit(x);
    for (bool changed = true; changed;) {
        changed = false;
        for (int x = 0; x < g.n; ++x) {
            Bits reach = g.rel[x];
            for (int y : BitRange(g.rel[x])) reach |= g.rel[y];
            if (reach != g.rel[x]) { g.rel[x] = reach; changed = true; }
        }
    }
    return g;
}

Frame converse(const Frame& f) {
    Frame g(f.n);
    g.labels = f.labels;
    for (int x = 0; x < f.n; ++x)
        for (int y : BitRange(f.rel[x])) g.add(y, x);
    return g;
}

Bits up_set(const Frame& f, Bits s) {
    Bits r = 0;
    for (int x : BitRange(s)) r |= f.rel[x];
    return r | s;
}

Bits down_set(const Frame& f, Bits s) {
    Bits r = s;
    for (int x = 0; x < f.n; ++x)
        if (f.rel[x] & s) r |= bit(x);
    return r;
}

Bits strict_up(const Frame& f, int x) {
    Bits r = 0;
    for (int y : BitRange(f.rel[x]))
        if (!f.has(y, x)) r |= bit(y);
    return r;
}

bool is_up_closed(const Frame& f, Bits s) { return (up_set(f, s) & ~s) == 0; }

std::vector<Bits> components(const Frame& f) {
    std::vector<Bits> undirected(f.n, 0);
    for (int x = 0; x < f.n; ++x)
        for (int y : BitRange(f.rel[x])) {
            undirected[x] |= bit(y);
            undirected[y] |= bit(x);
        }
    std::vector<Bits> comps;
    Bits seen = 0;
    for (int x = 0; x < f.n; ++x) {
        if (has_bit(seen, x)) continue;
        Bits comp = bit(x);
        for (;;) {
            Bits grow = comp;
            for (int y : BitRange(comp)) grow |= undirected[y];
            if (grow == comp) break;
            comp = grow;
        }
        comps.push_back(comp);
        seen |= comp;
    }
    return comps;
}

bool is_connected(const Frame& f) { return components(f).size() == 1; }

ClusterPoset cluster_poset(const Frame& f) {
    require_quasiorder(f, "cluster_poset");
    ClusterPoset cp;
    cp.class_of.assign(f.n, -1);
    for (int x = 0; x < f.n; ++x) {
        if (cp.class_of[x] >= 0) continue;
        Bits cls = 0;
        for (int y : BitRange(f.rel[x]))
            if (f.has(y, x)) cls |= bit(y);
        int idx = static_cast<int>(cp.classes.size());
        for (int y : BitRange(cls)) cp.class_of[y] = idx;
        cp.classes.push_back(cls);
    }
    int k = static_cast<int>(cp.classes.size());
    cp.order = Frame(k);
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j)
            if (f.has(lowest_bit(cp.classes[i]), lowest_bit(cp.classes[j])))
                cp.order.add(i, j);
    if (!is_partial_order(cp.order))
        throw Error(Errc::Consistency, "cluster quotient is not a partial order");
    return cp;
}

// Longest chain through each node of a finite poset.
static int longest_chain(const Frame& order) {
    std::vector<int> memo(order.n, 0);
    int best = 0;
    for (bool changed = true; changed;) {
        changed = false;
        for (int x = 0; x < order.n; ++x) {
            int h = 1;
            for (int y : BitRange(order.rel[x] & ~bit(x)))
                h = std::max(h, memo[y] + 1);
            if (h != memo[x]) { memo[x] = h; changed = true; }
        }
    }
    for (int x = 0; x < order.n; ++x) best = std::max(best, memo[x]);
    return best;
}

// Max antichain by Dilworth: n minus a maximum matching of the strict order.
namespace {
struct Matcher {
    const Frame& order;
    std::vector<int> match_r;
    std::vector<bool> used;

    explicit Matcher(const Frame& o) : order(o), match_r(o.n, -1) {}

    bool augment(int x) {
        for (int y : BitRange(order.rel[x] & ~bit(x))) {
            if (used[y]) continue;
            used[y] = true;
            if (match_r[y] < 0 || augment(match_r[y])) {
                match_r[y] = x;
                return true;
            }
        }
        return false;
    }

    int run() {
        int m = 0;
        for (int x = 0; x < order.n; ++x) {
            used.assign(order.n, false);
            if (augment(x)) ++m;
        }
        return m;
    }
};
} // namespace

static int max_antichain(const Frame& order) {
    if (order.n == 0) return 0;
    Matcher m(order);
    return order.n - m.run();
}

OrderStats order_stats(const Frame& f) {
    ClusterPoset cp = cluster_poset(f);
    OrderStats st;
    st.height = longest_chain(cp.order);
    st.width = max_antichain(cp.order);
    st.local_width = 0;
    for (int x = 0; x < f.n; ++x) {
        Subframe up = subframe(f, up_set(f, bit(x)));
        ClusterPoset local = cluster_poset(up.frame);
        st.local_width = std::max(st.local_width, max_antichain(local.order));
    }
    return st;
}

Levels levels(const Frame& f) {
    if (!is_partial_order(f))
        throw Error(Errc::NotForkFrame, "levels requires a partial order");
    Levels lv;
    for (int x = 0; x < f.n; ++x) {
        bool minimal = (down_set(f, bit(x)) & ~bit(x)) == 0;
        (minimal ? lv.lower : lv.upper) |= bit(x);
    }
    for (int x : BitRange(lv.upper))
        if (strict_up(f, x) != 0)
            throw Error(Errc::NotForkFrame, "frame has height > 2");
    return lv;
}

bool is_fork_frame(const Frame& f) {
    if (f.n == 0 || !is_partial_order(f)) return false;
    OrderStats st = order_stats(f);
    return st.height <= 2 && st.local_width <= 2;
}

bool is_valid(const Morphism& m) {
    if (static_cast<int>(m.map.size()) != m.source.n) return false;
    for (int v : m.map)
        if (v < 0 || v >= m.target.n) return false;
    return true;
}

bool is_injective(const Morphism& m) {
    Bits seen = 0;
    for (int v : m.map) {
        if (has_bit(seen, v)) return false;
        seen |= bit(v);
    }
    return true;
}

Bits image_of(const Morphism& m) {
    Bits img = 0;
    for (int v : m.map) img |= bit(v);
    return img;
}

bool is_surjective(const Morphism& m) { return image_of(m) == m.target.universe(); }

bool is_bounded_morphism(const Morphism& m) {
    if (!is_valid(m)) return false;
    for (int x = 0; x < m.source.n; ++x) {
        for (int y : BitRange(m.source.rel[x]))
            if (!m.target.has(m.map[x], m.map[y])) return false;
        Bits covered = 0;
        for (int y : BitRange(m.source.rel[x])) covered |= bit(m.map[y]);
        if (m.target.rel[m.map[x]] & ~covered) return false;
    }
    return true;
}

bool is_generated_subframe(const Frame& sub, const Frame& sup, const Morphism& embedding) {
    if (!is_valid(embedding) || embedding.source.n != sub.n || embedding.target.n != sup.n)
        return false;
    if (!is_injective(embedding)) return false;
    for (int x = 0; x < sub.n; ++x)
        for (int y = 0; y < sub.n; ++y)
            if (sub.has(x, y) != sup.has(embedding.map[x], embedding.map[y]))
                return false; // not a first-order substructure
    return is_up_closed(sup, image_of(embedding));
}

Subframe subframe(const Frame& f, Bits s) {
    Subframe r;
    for (int x : BitRange(s)) r.points.push_back(x);
    r.frame = Frame(static_cast<int>(r.points.size()));
    if (!f.labels.empty())
        for (int x : r.points) r.frame.labels.push_back(f.labels[x]);
    for (int i = 0; i < r.frame.n; ++i)
        for (int j = 0; j < r.frame.n; ++j)
            if (f.has(r.points[i], r.points[j])) r.frame.add(i, j);
    return r;
}

Morphism inclusion_morphism(const Subframe& sub, const Frame& sup) {
    return Morphism{sub.frame, sup, sub.points};
}

FrameMu mu_sets(const Frame& f) {
    require_quasiorder(f, "mu_sets");
    FrameMu out;
    if (f.n == 0) { out.type = UnifType::Nullary; return out; }
    ClusterPoset cp = cluster_poset(f);
    // A dense antichain picks exactly one representative from every maximal
    // cluster, so the sets are the products of the maximal clusters.
    std::vector<std::vector<int>> choices;
    for (int c = 0; c < cp.order.n; ++c) {
        if (cp.order.rel[c] & ~bit(c)) continue; // not maximal
        std::vector<int> members;
        for (int x : BitRange(cp.classes[c])) members.push_back(x);
        choices.push_back(members);
    }
    std::uint64_t total = 1;
    for (const auto& ch : choices) {
        total *= ch.size();
        if (total > (1u << 20))
            throw Error(Errc::SearchBudgetExceeded, "too many dense antichains");
    }
    std::vector<std::size_t> odo(choices.size(), 0);
    for (bool more = true; more;) {
        Bits s = 0;
        for (std::size_t i = 0; i < choices.size(); ++i) s |= bit(choices[i][odo[i]]);
        out.sets.push_back(s);
        more = false;
        for (std::size_t i = choices.size(); i-- > 0;) {
            if (++odo[i] < choices[i].size()) { more = true; break; }
            odo[i] = 0;
        }
    }
    std::sort(out.sets.begin(), out.sets.end());
    int card = popcount(out.sets.front());
    for (Bits s : out.sets)
        if (popcount(s) != card)
            throw Error(Errc::Consistency, "mu-sets of unequal cardinality");
    out.type = card == 1 ? UnifType::Unitary : UnifType::Finitary;
    return out;
}

std::optional<std::vector<int>> find_frame_isomorphism(const Frame& f, const Frame& g) {
    if (f.n != g.n) return std::nullopt;
    // Invariant per point: (out-degree, in-degree, loop).
    auto signature = [](const Frame& h, int x) {
        int indeg = 0;
        for (int y = 0; y < h.n; ++y)
            if (h.has(y, x)) ++indeg;
        return popcount(h.rel[x]) * 1000 + indeg * 2 + (h.has(x, x) ? 1 : 0);
    };
    std::vector<int> fs(f.n), gs(g.n);
    for (int x = 0; x < f.n; ++x) fs[x] = signature(f, x);
    for (int x = 0; x < g.n; ++x) gs[x] = signature(g, x);
    {
        auto a = fs, b = gs;
        std::sort(a.begin(), a.end());
        std::sort(b.begin(), b.end());
        if (a != b) return std::nullopt;
    }
    std::vector<int> perm(f.n, -1);
    Bits used = 0;
    auto consistent = [&](int x, int y) {
        if (fs[x] != gs[y]) return false;
        for (int z = 0; z < f.n; ++z) {
            if (perm[z] < 0) continue;
            if (f.has(x, z) != g.has(y, perm[z])) return false;
            if (f.has(z, x) != g.has(perm[z], y)) return false;
        }
        return f.has(x, x) == g.has(y, y);
    };
    auto rec = [&](auto&& self, int x) -> bool {
        if (x == f.n) return true;
        for (int y = 0; y < g.n; ++y) {
            if (has_bit(used, y) || !consistent(x, y)) continue;
            perm[x] = y;
            used |= bit(y);
            if (self(self, x + 1)) return true;
            perm[x] = -1;
            used &= ~bit(y);
        }
        return false;
    };
    if (!rec(rec, 0)) return std::nullopt;
    return perm;
}

Frame apply_permutation(const Frame& f, const std::vector<int>& perm) {
    Frame g(f.n);
    if (!f.labels.empty()) {
        g.labels.resize(f.n);
        for (int x = 0; x < f.n; ++x) g.labels[perm[x]] = f.labels[x];
    }
    for (int x = 0; x < f.n; ++x)
        for (int y : BitRange(f.rel[x])) g.add(perm[x], perm[y]);
    return g;
}

Frame fork_frame() {
    Frame f(3);
    f.labels = {"u", "v", "w"};
    for (int x = 0; x < 3; ++x) f.add(x, x);
    f.add(0, 1);
    f.add(0, 2);
    return f;
}

Frame w_frame() {
    Frame f(5);
    f.labels = {"u", "u'", "t", "v", "w"};
    for (int x = 0; x < 5; ++x) f.add(x, x);
    f.add(0, 2); // u < t
    f.add(0, 3); // u < v
    f.add(1, 3); // u' < v
    f.add(1, 4); // u' < w
    return f;
}

} // namespace claw
