#include "claw/unify.hpp"

#include <algorithm>

#include "claw/catalog.hpp"
#include "claw/projective.hpp"
#include "claw/terms.hpp"

namespace claw {

bool is_unifiable(const ClosureAlgebra& a) {
    if (a.is_trivial()) return false;
    return !hom_search(a, two_element_algebra(), HomKind::Surjective).empty();
}

std::vector<ClosedIdeal> admissible_congruences(const ClosureAlgebra& a) {
    if (a.is_trivial() || !is_fork_algebra(a))
        throw Error(Errc::NotForkAlgebra, "admissible_congruences");
    std::vector<ClosedIdeal> out;
    for (Bits g : closed_elements(a)) {
        if (g == a.one()) continue; // trivial quotient
        QuotientResult q = quotient(a, ClosedIdeal{g});
        if (is_projective_fork(q.algebra)) out.push_back(ClosedIdeal{g});
    }
    return out;
}

Unifier canonical_unifier(const ClosureAlgebra& a, ClosedIdeal k) {
    QuotientResult q = quotient(a, k);
    return Unifier{a, k, q.algebra, q.projection};
}

namespace {

// First h with h2 = h . h1, searched in ascending dual order.  The commuting
// condition fixes the dual of h fiberwise: a target atom x may only map to
// atoms y with h1.dual(y) = h2.dual(x).
std::optional<AlgHom> find_factoring(const AlgHom& h1, const AlgHom& h2) {
    if ((h1.kernel_generator() & ~h2.kernel_generator()) != 0) return std::nullopt;
    const Frame& from = h2.target.atoms;
    const Frame& to = h1.target.atoms;
    std::vector<std::vector<int>> fibers(from.n);
    for (int x = 0; x < from.n; ++x) {
        for (int y = 0; y < to.n; ++y)
            if (h1.dual.map[y] == h2.dual.map[x]) fibers[x].push_back(y);
        if (fibers[x].empty()) return std::nullopt;
    }
    std::vector<int> map(from.n, -1);
    std::optional<AlgHom> found;
    auto rec = [&](auto&& self, int x) -> bool {
        if (x == from.n) {
            Morphism d{from, to, map};
            if (!is_bounded_morphism(d)) return false;
            AlgHom g{h1.target, h2.target, std::move(d)};
            for (int at = 0; at < h1.source.atom_count(); ++at)
                if (g.apply(h1.apply(bit(at))) != h2.apply(bit(at))) return false;
            found = std::move(g);
            return true;
        }
        for (int y : fibers[x]) {
            bool ok = !from.has(x, x) || to.has(y, y);
            for (int s = 0; s < x && ok; ++s) {
                if (from.has(s, x) && !to.has(map[s], y)) ok = false;
                if (from.has(x, s) && !to.has(y, map[s])) ok = false;
            }
            if (!ok) continue;
            map[x] = y;
            if (self(self, x + 1)) return true;
            map[x] = -1;
        }
        return false;
    };
    rec(rec, 0);
    return found;
}

} // namespace

std::optional<AlgHom> more_general(const Unifier& u1, const Unifier& u2) {
    if (!algebras_equal(u1.source, u2.source))
        throw Error(Errc::InvalidArgument, "more_general: different sources");
    bool kernel_le = (u1.kernel.generator & ~u2.kernel.generator) == 0;
    std::optional<AlgHom> found = find_factoring(u1.hom, u2.hom);
    if (kernel_le != found.has_value())
        throw Error(Errc::Consistency, "kernel order and homomorphism search disagree");
    return found;
}

MuReport mu_set(const ClosureAlgebra& a) {
    if (a.is_trivial() || !is_fork_algebra(a))
        throw Error(Errc::NotForkAlgebra, "mu_set");
    if (!is_unifiable(a)) throw Error(Errc::NotUnifiable, "mu_set");
    std::vector<ClosedIdeal> adm = admissible_congruences(a);
    MuReport rep;
    std::vector<std::size_t> minimal;
    for (std::size_t i = 0; i < adm.size(); ++i) {
        bool is_min = true;
        for (std::size_t j = 0; j < adm.size() && is_min; ++j)
            if (j != i && (adm[j].generator & ~adm[i].generator) == 0) is_min = false;
        if (is_min) minimal.push_back(i);
    }
    for (std::size_t i : minimal) rep.mu.push_back(canonical_unifier(a, adm[i]));
    rep.type = rep.mu.size() == 1 ? UnifType::Unitary : UnifType::Finitary;

    // Cross-check the dense-antichain clauses against the generality order
    // itself; every pair goes through both decision paths of more_general.
    if (adm.size() * adm.size() > (std::size_t{1} << 20))
        throw Error(Errc::SearchBudgetExceeded, "admissible congruence poset too large");
    std::vector<Unifier> canon;
    for (const ClosedIdeal& k : adm) canon.push_back(canonical_unifier(a, k));
    std::vector<std::vector<char>> ge(adm.size(), std::vector<char>(adm.size(), 0));
    for (std::size_t i = 0; i < adm.size(); ++i)
        for (std::size_t j = 0; j < adm.size(); ++j)
            ge[i][j] = more_general(canon[i], canon[j]).has_value();
    std::vector<std::size_t> maximal;
    for (std::size_t i = 0; i < adm.size(); ++i) {
        bool max = true;
        for (std::size_t j = 0; j < adm.size() && max; ++j)
            if (j != i && ge[j][i]) max = false;
        if (max) maximal.push_back(i);
    }
    if (maximal != minimal)
        throw Error(Errc::Consistency, "mu-set disagrees with the unifier poset");
    for (std::size_t j = 0; j < adm.size(); ++j) {
        bool covered = false;
        for (std::size_t i : maximal)
            if (i == j || ge[i][j]) covered = true;
        if (!covered) throw Error(Errc::Consistency, "mu-set is not dense");
    }

    for (std::size_t i = 0; i < adm.size(); ++i) {
        if (std::find(minimal.begin(), minimal.end(), i) != minimal.end()) continue;
        for (std::size_t mi = 0; mi < minimal.size(); ++mi) {
            if ((adm[minimal[mi]].generator & ~adm[i].generator) != 0) continue;
            auto h = more_general(rep.mu[mi], canon[i]);
            if (!h) throw Error(Errc::Consistency, "missing domination witness");
            rep.certificates.push_back(MuCertificate{adm[i].generator, mi, *h});
            break;
        }
    }
    return rep;
}

UnifType unification_type(const ClosureAlgebra& a) {
    UnifType t = mu_set(a).type;
    if (t != UnifType::Unitary && t != UnifType::Finitary)
        throw Error(Errc::Consistency, "fork algebras are unitary or finitary");
    return t;
}

namespace {

// Does h2 factor through h1, i.e. is there g with h2 = g . h1?
bool factors_through(const AlgHom& h1, const AlgHom& h2) {
    return find_factoring(h1, h2).has_value();
}

} // namespace

BruteMuReport brute_force_mu(const ClosureAlgebra& a, int bound, std::uint64_t budget) {
    if (a.is_trivial()) throw Error(Errc::NotUnifiable, "brute_force_mu");
    BruteMuReport rep;
    CatalogQuery q;
    q.max_points = bound;
    q.fork = true;
    q.connected = true;
    std::uint64_t work = 0;
    enumerate(q, [&](const Frame& f) {
        if (!frame_is_projective_fork(f)) return;
        ClosureAlgebra target = cm(f);
        for (AlgHom& h : hom_search(a, target)) {
            rep.unifiers.push_back(BruteUnifier{std::move(h), 0});
            rep.unifiers.back().kernel = rep.unifiers.back().hom.kernel_generator();
            if (++work > budget) throw Error(Errc::SearchBudgetExceeded, "too many unifiers");
        }
    });

    int n = static_cast<int>(rep.unifiers.size());
    if (static_cast<std::uint64_t>(n) * n > budget)
        throw Error(Errc::SearchBudgetExceeded,
                    "unifier poset too large: " + std::to_string(n));
    // below[i][j]: i is less general than j (factors through j).
    std::vector<std::vector<char>> below(n, std::vector<char>(n, 0));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            below[i][j] = factors_through(rep.unifiers[j].hom, rep.unifiers[i].hom);
    rep.class_of.assign(n, -1);
    for (int i = 0; i < n; ++i) {
        if (rep.class_of[i] >= 0) continue;
        int c = static_cast<int>(rep.class_rep.size());
        rep.class_rep.push_back(i);
        for (int j = i; j < n; ++j)
            if (below[i][j] && below[j][i]) rep.class_of[j] = c;
    }
    int k = static_cast<int>(rep.class_rep.size());
    auto class_below = [&](int ci, int cj) { return below[rep.class_rep[ci]][rep.class_rep[cj]]; };
    for (int ci = 0; ci < k; ++ci)
        for (int cj = 0; cj < k; ++cj)
            if (ci != cj && class_below(ci, cj) && class_below(cj, ci))
                throw Error(Errc::Consistency, "class order is not antisymmetric");
    for (int c = 0; c < k; ++c) {
        bool maximal = true;
        for (int d = 0; d < k && maximal; ++d)
            if (d != c && class_below(c, d)) maximal = false;
        if (maximal) rep.maximal_classes.push_back(c);
    }
    // The class quotient is a poset, so its one dense antichain is the set of
    // maximal classes; verify both definition clauses anyway.
    for (std::size_t i = 0; i < rep.maximal_classes.size(); ++i)
        for (std::size_t j = 0; j < rep.maximal_classes.size(); ++j)
            if (i != j && class_below(rep.maximal_classes[i], rep.maximal_classes[j]))
                throw Error(Errc::Consistency, "maximal classes are not an antichain");
    for (int c = 0; c < k; ++c) {
        bool covered = false;
        for (int m : rep.maximal_classes)
            if (c == m || class_below(c, m)) covered = true;
        if (!covered) throw Error(Errc::Consistency, "a class escapes every maximal class");
    }
    rep.mu_sets.push_back(rep.maximal_classes);
    rep.type = rep.maximal_classes.size() == 1 ? UnifType::Unitary : UnifType::Finitary;
    return rep;
}

bool mu_matches_brute(const ClosureAlgebra& a, const MuReport& mu, const BruteMuReport& brute) {
    (void)a;
    // Each mu member must land in a distinct maximal oracle class...
    std::vector<int> classes;
    for (const Unifier& u : mu.mu) {
        int found = -1;
        for (std::size_t i = 0; i < brute.unifiers.size(); ++i) {
            if (factors_through(u.hom, brute.unifiers[i].hom) &&
                factors_through(brute.unifiers[i].hom, u.hom)) {
                found = brute.class_of[i];
                break;
            }
        }
        if (found < 0) return false;
        classes.push_back(found);
    }
    std::sort(classes.begin(), classes.end());
    if (std::adjacent_find(classes.begin(), classes.end()) != classes.end()) return false;
    // ... and the maximal classes must be exactly those.
    if (classes != brute.maximal_classes) return false;
    // Density: every oracle unifier is below some mu member.
    for (const BruteUnifier& bu : brute.unifiers) {
        bool dominated = false;
        for (const Unifier& u : mu.mu)
            if (factors_through(u.hom, bu.hom)) { dominated = true; break; }
        if (!dominated) return false;
    }
    if (brute.mu_sets.empty() || mu.type != brute.type) return false;
    return mu.mu.size() == brute.mu_sets[0].size();
}

FilteringReport filtering_probe(const std::vector<ClosureAlgebra>& catalog) {
    FilteringReport rep;
    for (const ClosureAlgebra& a : catalog)
        if (!is_projective_fork(a))
            throw Error(Errc::InvalidArgument, "filtering_probe expects projective fork algebras");
    for (const ClosureAlgebra& a : catalog)
        rep.geach_holds.push_back(check_equation(axiom_geach(), a).holds);
    for (std::size_t i = 0; i < catalog.size(); ++i)
        for (std::size_t j = i; j < catalog.size(); ++j) {
            ProductResult pr = product(catalog[i], catalog[j]);
            bool proj = is_projective_fork(pr.algebra);
            rep.pairs.push_back({i, j, proj, pr.left_one});
            rep.any_product_projective |= proj;
        }
    return rep;
}

} // namespace claw
