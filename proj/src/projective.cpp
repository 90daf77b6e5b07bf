#include "claw/projective.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "claw/terms.hpp"

namespace claw {

bool frame_is_projective_fork(const Frame& f) {
    if (f.n == 0) return false;
    if (!is_partial_order(f)) return false;
    Levels lv = levels(f); // throws NotForkFrame when height > 2
    if (!is_connected(f)) return false;
    for (int x : BitRange(lv.upper))
        for (int y : BitRange(lv.upper & ~(full_mask(x + 1))))
            if ((down_set(f, bit(x)) & down_set(f, bit(y))) == 0) return false;
    return true;
}

static void require_fork_algebra(const ClosureAlgebra& a, const char* op) {
    if (a.is_trivial() || !is_fork_algebra(a))
        throw Error(Errc::NotForkAlgebra, std::string(op) + " requires a fork algebra");
}

bool is_projective_fork(const ClosureAlgebra& a) {
    require_fork_algebra(a, "is_projective_fork");
    if (!is_directly_indecomposable(a)) return false;
    for (int i = 0; i < a.atom_count(); ++i) {
        if (a.is_closed(bit(i))) continue;
        for (int j = i + 1; j < a.atom_count(); ++j) {
            if (a.is_closed(bit(j))) continue;
            if ((a.atom_closure[i] & a.atom_closure[j]) == 0) return false;
        }
    }
    return true;
}

bool necessary_condition_v2m(const ClosureAlgebra& a, int m) {
    if (m < 2) throw Error(Errc::InvalidArgument, "necessary_condition_v2m needs m >= 2");
    if (a.is_trivial()) throw Error(Errc::TrivialAlgebra, "necessary_condition_v2m");
    if (!is_partial_order(a.atoms))
        throw Error(Errc::WrongVariety, "atom frame is not a partial order");
    OrderStats st = order_stats(a.atoms);
    if (st.height > 2 || st.local_width > m)
        throw Error(Errc::WrongVariety, "atom frame outside height 2 / local width " + std::to_string(m));
    if (!is_directly_indecomposable(a)) return false;
    std::vector<int> non_closed;
    for (int i = 0; i < a.atom_count(); ++i)
        if (!a.is_closed(bit(i))) non_closed.push_back(i);
    // Search for <= m non-closed atoms whose closures meet in 0; any zero
    // meet has a minimal witness found by this DFS.
    auto dfs = [&](auto&& self, std::size_t start, Bits meet, int depth) -> bool {
        if (meet == 0) return true;
        if (depth == m) return false;
        for (std::size_t i = start; i < non_closed.size(); ++i)
            if (self(self, i + 1, meet & a.atom_closure[non_closed[i]], depth + 1)) return true;
        return false;
    };
    return !dfs(dfs, 0, a.one(), 0);
}

namespace {

BWWitness build_bw_witness(const ClosureAlgebra& a, int a0, int b0) {
    BWWitness bw;
    bw.atom_a = a0;
    bw.atom_b = b0;
    Bits fa = a.atom_closure[a0], fb = a.atom_closure[b0];
    bw.v = a.one() & ~(fa | fb);
    Bits fv = a.closure(bw.v);
    bw.d = fv & ~bw.v;
    bw.u = bw.d & fa;
    bw.t = fa & ~bw.d;
    bw.u_prime = bw.d & fb;
    bw.w = fb & ~bw.d;

    // Intermediate claims of the construction.
    std::vector<Bits> blocks{bw.u, bw.u_prime, bw.t, bw.v, bw.w};
    Bits all = 0;
    for (Bits blk : blocks) {
        if (blk == 0) throw Error(Errc::Consistency, "bw block is zero");
        if (all & blk) throw Error(Errc::Consistency, "bw blocks overlap");
        all |= blk;
    }
    if (all != a.one()) throw Error(Errc::Consistency, "bw blocks do not cover");
    if (!a.is_closed(bw.u) || !a.is_closed(bw.u_prime))
        throw Error(Errc::Consistency, "bw lower blocks not closed");
    if (a.closure(bw.t) != fa || a.closure(bw.w) != fb || fv != (bw.v | bw.d))
        throw Error(Errc::Consistency, "bw closures off");

    // The partition carries the subalgebra; each block closure must be a
    // union of blocks.
    Frame sub(5);
    sub.labels = {"u", "u'", "t", "v", "w"};
    std::vector<int> block_of(a.atom_count(), -1);
    for (int bi = 0; bi < 5; ++bi)
        for (int at : BitRange(blocks[bi])) block_of[at] = bi;
    for (int bi = 0; bi < 5; ++bi) {
        Bits cl = a.closure(blocks[bi]);
        Bits covered = 0;
        for (int bj = 0; bj < 5; ++bj) {
            if ((cl & blocks[bj]) == 0) continue;
            if ((cl & blocks[bj]) != blocks[bj])
                throw Error(Errc::Consistency, "bw closure splits a block");
            sub.add(bj, bi);
            covered |= blocks[bj];
        }
        if (covered != cl) throw Error(Errc::Consistency, "bw closure not covered");
    }
    if (!find_frame_isomorphism(sub, w_frame()))
        throw Error(Errc::Consistency, "bw subalgebra is not the W algebra");
    bw.subalgebra = cm(sub);
    bw.embedding = AlgHom{bw.subalgebra, a, Morphism{a.atoms, sub, block_of}};
    if (!verify_hom(bw.embedding) || !bw.embedding.injective())
        throw Error(Errc::Consistency, "bw embedding failed verification");
    return bw;
}

} // namespace

std::optional<BWWitness> find_bw_subalgebra(const ClosureAlgebra& a) {
    require_fork_algebra(a, "find_bw_subalgebra");
    if (!is_directly_indecomposable(a))
        throw Error(Errc::NotIndecomposable, "find_bw_subalgebra");
    for (int i = 0; i < a.atom_count(); ++i) {
        if (a.is_closed(bit(i))) continue;
        for (int j = i + 1; j < a.atom_count(); ++j) {
            if (a.is_closed(bit(j))) continue;
            if ((a.atom_closure[i] & a.atom_closure[j]) == 0) return build_bw_witness(a, i, j);
        }
    }
    return std::nullopt;
}

std::vector<BWWitness> find_bw_witnesses(const ClosureAlgebra& a) {
    require_fork_algebra(a, "find_bw_witnesses");
    if (!is_directly_indecomposable(a))
        throw Error(Errc::NotIndecomposable, "find_bw_witnesses");
    std::vector<BWWitness> out;
    for (int i = 0; i < a.atom_count(); ++i) {
        if (a.is_closed(bit(i))) continue;
        for (int j = i + 1; j < a.atom_count(); ++j) {
            if (a.is_closed(bit(j))) continue;
            if ((a.atom_closure[i] & a.atom_closure[j]) == 0)
                out.push_back(build_bw_witness(a, i, j));
        }
    }
    return out;
}

namespace {

struct RetractionBuilder {
    const Frame& sup;
    const Morphism& emb;
    const Frame& vfr;           // the subframe structure
    Bits img = 0;               // image of the embedding in sup
    std::vector<int> vindex;    // sup point -> v point (or -1)
    Bits v_upper_sup = 0;       // sup points that are upper level inside V
    Bits v_max_sup = 0;         // sup points maximal inside V
    std::vector<int> p;         // the map being built, as v points
    std::vector<CaseEntry> log;

    RetractionBuilder(const Frame& s, const Morphism& e)
        : sup(s), emb(e), vfr(e.source), vindex(s.n, -1), p(s.n, -1) {}

    void assign(int x, int value, const char* tag) {
        if (p[x] >= 0) throw Error(Errc::Consistency, "retraction point assigned twice");
        p[x] = value;
        log.push_back({x, tag, value});
    }

    int least_of(Bits v_mask, const char* what) const { // least sup index in a v-mask
        int best = -1;
        for (int v : BitRange(v_mask)) {
            int s = emb.map[v];
            if (best < 0 || s < emb.map[best]) best = v;
        }
        if (best < 0) throw Error(Errc::Consistency, std::string("empty choice set: ") + what);
        return best;
    }

    Bits down_v(int v) const { return down_set(vfr, bit(v)); }

    // Common meet step: both arguments are upper-level points of V; when they
    // differ, any point of V below both has exactly those two strict uppers,
    // so the back condition holds at it.
    int meet_point(int alpha, int beta) {
        if (alpha == beta) return alpha;
        Bits m = down_v(alpha) & down_v(beta);
        if (m == 0) throw Error(Errc::Consistency, "projective subframe has empty meet");
        return least_of(m, "meet");
    }

    void check_assigned_upper(int y) const {
        if (!has_bit(v_upper_sup, emb.map[p[y]]) && !has_bit(v_max_sup, emb.map[p[y]]))
            throw Error(Errc::ProofGap, "upper point mapped below the top level of V");
    }
};

} // namespace

RetractionPlan build_retraction(const Frame& sup, const Morphism& v_embedding) {
    if (!is_fork_frame(sup))
        throw Error(Errc::NotForkFrame, "build_retraction requires a fork frame");
    if (!is_generated_subframe(v_embedding.source, sup, v_embedding))
        throw Error(Errc::NotGenerated, "embedded image is not a generated subframe");
    if (!frame_is_projective_fork(v_embedding.source))
        throw Error(Errc::NotProjectiveSubalgebra,
                    "complex algebra of the subframe is not projective");

    RetractionBuilder b(sup, v_embedding);
    const Frame& vfr = v_embedding.source;
    for (int v = 0; v < vfr.n; ++v) {
        b.img |= bit(v_embedding.map[v]);
        b.vindex[v_embedding.map[v]] = v;
    }
    Levels vlv = levels(vfr);
    for (int v : BitRange(vlv.upper)) b.v_upper_sup |= bit(v_embedding.map[v]);
    for (int v = 0; v < vfr.n; ++v)
        if (strict_up(vfr, v) == 0) b.v_max_sup |= bit(v_embedding.map[v]);

    // Identity on V.
    for (int x : BitRange(b.img)) b.assign(x, b.vindex[x], "id");

    // Points outside V's component collapse to the least maximal point of V.
    int in_img = 0;
    Bits comp = 0;
    for (Bits c : components(sup))
        if (c & b.img) { comp |= c; ++in_img; }
    if (in_img != 1)
        throw Error(Errc::NotProjectiveSubalgebra, "subframe is not connected");
    {
        Bits vmax_mask = 0;
        for (int v = 0; v < vfr.n; ++v)
            if (strict_up(vfr, v) == 0) vmax_mask |= bit(v);
        int target = b.least_of(vmax_mask, "maximal point of V");
        for (int x = 0; x < sup.n; ++x)
            if (!has_bit(comp, x)) b.assign(x, target, "out");
    }

    Bits plan_sets[3] = {0, 0, 0};
    if (vfr.n == 1) { // the one-point subframe: collapse the component
        for (int x : BitRange(comp & ~b.img)) b.assign(x, 0, "const");
    } else {
        Levels wlv = levels(sup);
        Bits rest = wlv.lower & comp & ~b.img;
        Bits w1 = 0, w2 = 0, w3 = 0;
        for (int x : BitRange(rest)) {
            Bits su = strict_up(sup, x);
            if ((su & ~b.img) == 0) w1 |= bit(x);
            else if (su & b.img) w2 |= bit(x);
            else w3 |= bit(x);
        }

        // Case 1: all strict uppers lie in V.
        for (int x : BitRange(w1)) {
            Bits su = strict_up(sup, x);
            if (popcount(su) == 1) {
                b.assign(x, b.vindex[lowest_bit(su)], "1a");
            } else if (popcount(su) == 2) {
                int v1 = b.vindex[lowest_bit(su)];
                int v2 = b.vindex[lowest_bit(su & (su - 1))];
                b.assign(x, b.meet_point(v1, v2), "1b");
            } else {
                throw Error(Errc::Consistency, "lower point with more than two uppers");
            }
        }

        // Case 2: uppers both inside and outside V.  The x below a shared
        // outer upper y are grouped by their unique upper in V; the group of
        // the least x names p(y).
        Bits yset = 0;
        for (int x : BitRange(w2)) yset |= strict_up(sup, x) & ~b.img;
        for (int y : BitRange(yset & wlv.upper)) {
            std::vector<int> xs;
            for (int x : BitRange(wlv.lower)) {
                if (!sup.has(x, y) || x == y) continue;
                if ((sup.rel[x] & b.v_upper_sup) == 0) continue;
                if (!has_bit(w2, x))
                    throw Error(Errc::Consistency, "case-2 group member outside W2");
                xs.push_back(x);
            }
            if (xs.empty()) throw Error(Errc::Consistency, "empty case-2 group");
            std::vector<int> vx(xs.size());
            for (std::size_t i = 0; i < xs.size(); ++i) {
                Bits in_v = strict_up(sup, xs[i]) & b.img;
                if (popcount(in_v) != 1)
                    throw Error(Errc::Consistency, "case-2 member without unique V upper");
                vx[i] = b.vindex[lowest_bit(in_v)];
            }
            int v1 = vx[0];
            b.assign(y, v1, "2y");
            for (std::size_t i = 0; i < xs.size(); ++i) {
                if (vx[i] == v1) b.assign(xs[i], v1, "2a");
                else b.assign(xs[i], b.meet_point(v1, vx[i]), "2b");
            }
        }
        for (int x : BitRange(w2))
            if (b.p[x] < 0) throw Error(Errc::Consistency, "case-2 left a point unassigned");

        // Case 3: no upper inside V; processed last, in ascending order, so
        // values picked for shared outer uppers are reused.
        int vstar = b.least_of(vlv.upper, "upper level of V");
        for (int x : BitRange(w3)) {
            Bits su = strict_up(sup, x);
            int c = popcount(su);
            if (c == 1) {
                int y = lowest_bit(su);
                if (b.p[y] >= 0) {
                    b.check_assigned_upper(y);
                    b.assign(x, b.p[y], "3a");
                } else {
                    b.assign(y, vstar, "3b");
                    b.assign(x, vstar, "3b");
                }
            } else if (c == 2) {
                int y = lowest_bit(su);
                int z = lowest_bit(su & (su - 1));
                bool dy = b.p[y] >= 0, dz = b.p[z] >= 0;
                if (dy && dz) {
                    b.check_assigned_upper(y);
                    b.check_assigned_upper(z);
                    b.assign(x, b.meet_point(b.p[y], b.p[z]), "3c");
                } else if (dy || dz) {
                    int defined = dy ? y : z, fresh = dy ? z : y;
                    b.check_assigned_upper(defined);
                    b.assign(fresh, vstar, "3d");
                    b.assign(x, b.meet_point(b.p[defined], vstar), "3d");
                } else {
                    // Collapsing the whole cone to one upper point of V keeps
                    // the back condition even when V has no lower point with
                    // a unique upper neighbour.
                    b.assign(y, vstar, "3e");
                    b.assign(z, vstar, "3e");
                    b.assign(x, vstar, "3e");
                }
            } else {
                throw Error(Errc::Consistency, "case-3 point with bad upper count");
            }
        }
        plan_sets[0] = w1;
        plan_sets[1] = w2;
        plan_sets[2] = w3;
    }

    RetractionPlan plan;
    plan.set_w1 = plan_sets[0];
    plan.set_w2 = plan_sets[1];
    plan.set_w3 = plan_sets[2];
    for (int x = 0; x < sup.n; ++x)
        if (b.p[x] < 0) throw Error(Errc::Consistency, "point left unassigned");
    plan.sup = sup;
    plan.sub = Subframe{vfr, v_embedding.map};
    plan.map = Morphism{sup, vfr, b.p};
    std::sort(b.log.begin(), b.log.end(),
              [](const CaseEntry& l, const CaseEntry& r) { return l.point < r.point; });
    plan.case_log = std::move(b.log);
    if (!is_bounded_morphism(plan.map) || !is_surjective(plan.map))
        throw Error(Errc::ProofGap, "constructed map is not a bounded surjection");
    for (int v = 0; v < vfr.n; ++v)
        if (plan.map.map[v_embedding.map[v]] != v)
            throw Error(Errc::ProofGap, "constructed map does not fix V");
    return plan;
}

std::optional<Morphism> brute_force_retraction(const Frame& sup, const Morphism& v_embedding,
                                               std::uint64_t budget) {
    if (!is_injective(v_embedding) || !is_bounded_morphism(v_embedding))
        throw Error(Errc::InvalidArgument, "embedding must be an injective bounded morphism");
    const Frame& vfr = v_embedding.source;
    std::vector<int> p(sup.n, -1);
    std::vector<int> free_pos;
    for (int v = 0; v < vfr.n; ++v) p[v_embedding.map[v]] = v;
    for (int x = 0; x < sup.n; ++x)
        if (p[x] < 0) free_pos.push_back(x);
    std::uint64_t total = 1;
    for (std::size_t i = 0; i < free_pos.size(); ++i) {
        total *= static_cast<std::uint64_t>(vfr.n);
        if (total > budget)
            throw Error(Errc::SearchBudgetExceeded, "retraction search too large");
    }
    for (int x : free_pos) p[x] = 0;
    for (bool more = true; more;) {
        Morphism m{sup, vfr, p};
        if (is_bounded_morphism(m)) return m;
        more = false;
        for (std::size_t i = free_pos.size(); i-- > 0;) {
            if (++p[free_pos[i]] < vfr.n) { more = true; break; }
            p[free_pos[i]] = 0;
        }
    }
    return std::nullopt;
}

ProbeReport bounded_injectivity_probe(const Frame& v, int max_points, ProbeClass cls,
                                      std::uint64_t budget) {
    auto admits = [&](const Frame& f) {
        switch (cls) {
        case ProbeClass::Fork: return is_fork_frame(f);
        case ProbeClass::Poset: return is_partial_order(f);
        case ProbeClass::Quasiorder: return is_quasiorder(f);
        }
        return false;
    };
    if (!admits(v))
        throw Error(Errc::InvalidArgument, "base frame is outside the probe class");
    if (max_points > 8)
        throw Error(Errc::CapExceeded, "probe capped at 8 points");
    ProbeReport rep;
    std::uint64_t steps = 0;
    for (int k = 1; k <= max_points - v.n; ++k) {
        int n = v.n + k;
        std::set<std::uint64_t> seen;
        std::vector<std::uint64_t> row(k, 0);
        std::uint64_t row_space = std::uint64_t{1} << (n - 1);
        for (bool more = true; more;) {
            if (++steps > budget) throw Error(Errc::SearchBudgetExceeded, "probe too large");
            Frame w(n);
            for (int x = 0; x < v.n; ++x) w.rel[x] = v.rel[x];
            for (int i = 0; i < k; ++i) {
                int self = v.n + i;
                Bits r = row[i];
                // splice the forced loop bit into the row pattern
                Bits low = r & full_mask(self);
                Bits high = (r >> self) << (self + 1);
                w.rel[self] = low | bit(self) | high;
            }
            if (admits(w)) {
                // canonical key over permutations preserving the V block
                std::vector<int> po(v.n), pn(k);
                std::iota(po.begin(), po.end(), 0);
                std::uint64_t best = ~std::uint64_t{0};
                do {
                    std::iota(pn.begin(), pn.end(), v.n);
                    do {
                        std::uint64_t key = 0;
                        auto at = [&](int i) { return i < v.n ? po[i] : pn[i - v.n]; };
                        for (int i = 0; i < n; ++i)
                            for (int j = 0; j < n; ++j)
                                if (w.has(at(i), at(j))) key |= std::uint64_t{1} << (i * n + j);
                        best = std::min(best, key);
                    } while (std::next_permutation(pn.begin(), pn.end()));
                } while (std::next_permutation(po.begin(), po.end()));
                if (seen.insert(best).second) {
                    ++rep.extensions;
                    std::vector<int> incl(v.n);
                    std::iota(incl.begin(), incl.end(), 0);
                    if (brute_force_retraction(w, Morphism{v, w, incl}, budget))
                        ++rep.retractable;
                    else
                        rep.failures.push_back(w);
                }
            }
            more = false;
            for (int i = k; i-- > 0;) {
                if (++row[i] < row_space) { more = true; break; }
                row[i] = 0;
            }
        }
    }
    return rep;
}

} // namespace claw
