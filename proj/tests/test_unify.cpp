#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "claw/catalog.hpp"
#include "claw/projective.hpp"
#include "claw/terms.hpp"
#include "claw/unify.hpp"

using namespace claw;

namespace {

Frame chain(int n) {
    Frame f(n);
    for (int x = 0; x < n; ++x)
        for (int y = x; y < n; ++y) f.add(x, y);
    return f;
}

std::vector<Bits> kernel_list(const std::vector<ClosedIdeal>& ks) {
    std::vector<Bits> out;
    for (const ClosedIdeal& k : ks) out.push_back(k.generator);
    return out;
}

} // namespace

TEST_CASE("unifiability") {
    CHECK(is_unifiable(w_algebra()));
    CHECK(is_unifiable(product(fork_algebra(), fork_algebra()).algebra));
    CHECK_FALSE(is_unifiable(trivial_algebra()));
}

TEST_CASE("admissible congruences") {
    ClosureAlgebra w = w_algebra();
    // quotient frames {u',v,w}, {w}, {u,t,v}, {v}, {t} by ascending kernel
    CHECK(kernel_list(admissible_congruences(w)) ==
          std::vector<Bits>{0b00101, 0b01111, 0b10010, 0b10111, 0b11011});

    ClosureAlgebra f = fork_algebra();
    CHECK(kernel_list(admissible_congruences(f)) == std::vector<Bits>{0b000, 0b011, 0b101});

    CHECK(kernel_list(admissible_congruences(two_element_algebra())) == std::vector<Bits>{0});

    CHECK_THROWS_AS(admissible_congruences(cm(chain(3))), Error);

    // every admissible quotient is projective, and every projective quotient
    // is admissible
    CatalogQuery q;
    q.max_points = 4;
    q.fork = true;
    enumerate(q, [&](const Frame& fr) {
        ClosureAlgebra a = cm(fr);
        auto adm = admissible_congruences(a);
        std::size_t projective_quotients = 0;
        for (Bits g : closed_elements(a)) {
            if (g == a.one()) continue;
            if (is_projective_fork(quotient(a, ClosedIdeal{g}).algebra)) ++projective_quotients;
        }
        CHECK(adm.size() == projective_quotients);
        for (const ClosedIdeal& k : adm)
            CHECK(is_projective_fork(canonical_unifier(a, k).quotient));
    });
}

TEST_CASE("generality order") {
    ClosureAlgebra w = w_algebra();
    Unifier p1 = canonical_unifier(w, ClosedIdeal{w.atom_closure[2]}); // by f(t)
    Unifier p2 = canonical_unifier(w, ClosedIdeal{w.atom_closure[4]}); // by f(w)
    CHECK_FALSE(more_general(p1, p2).has_value());
    CHECK_FALSE(more_general(p2, p1).has_value());

    // the identity unifier of a projective algebra dominates everything
    ClosureAlgebra f = fork_algebra();
    Unifier id = canonical_unifier(f, ClosedIdeal{0});
    for (const ClosedIdeal& k : admissible_congruences(f)) {
        auto h = more_general(id, canonical_unifier(f, k));
        REQUIRE(h.has_value());
        CHECK(verify_hom(*h));
    }

    // two distinct surjections onto the two-element algebra are incomparable
    Unifier s1 = canonical_unifier(f, ClosedIdeal{0b011});
    Unifier s2 = canonical_unifier(f, ClosedIdeal{0b101});
    CHECK_FALSE(more_general(s1, s2).has_value());
    CHECK_FALSE(more_general(s2, s1).has_value());
}

TEST_CASE("retract absorption") {
    // u: B_W ->> 2, embedded into the fork algebra via its unit; the two
    // unifiers are mutually comparable.
    ClosureAlgebra w = w_algebra(), f = fork_algebra(), two = two_element_algebra();
    Unifier u = canonical_unifier(w, ClosedIdeal{0b11011}); // quotient {t}, a copy of 2
    REQUIRE(u.quotient.atom_count() == 1);
    auto units = hom_search(two, f);
    REQUIRE(units.size() == 1);
    AlgHom i = compose(units[0], find_isomorphism(u.quotient, two).value());
    AlgHom iu = compose(i, u.hom); // B_W -> B_F through the retract

    // forward: i itself witnesses u >= iu
    bool forward = true;
    for (int at = 0; at < w.atom_count(); ++at)
        forward = forward && i.apply(u.hom.apply(bit(at))) == iu.apply(bit(at));
    CHECK(forward);
    // backward: some hom B_F -> quotient undoes the embedding
    bool backward = false;
    for (const AlgHom& g : hom_search(f, u.quotient)) {
        bool commutes = true;
        for (int at = 0; at < w.atom_count(); ++at)
            commutes = commutes && g.apply(iu.apply(bit(at))) == u.hom.apply(bit(at));
        if (commutes) { backward = true; break; }
    }
    CHECK(backward);

    // a second retract pair: the fork algebra inside the algebra of the fork
    // with one extra lower point; the retraction plan supplies the embedding
    Frame ext(4);
    for (int x = 0; x < 4; ++x) ext.add(x, x);
    ext.add(0, 1);
    ext.add(0, 2);
    ext.add(3, 1); // fresh point below v
    ClosureAlgebra c = cm(ext);
    REQUIRE(is_projective_fork(c));
    RetractionPlan plan = build_retraction(ext, Morphism{fork_frame(), ext, {0, 1, 2}});
    AlgHom embed{f, c, plan.map}; // dual of the bounded surjection
    CHECK(verify_hom(embed));
    CHECK(embed.injective());
    for (const ClosedIdeal& k : admissible_congruences(w)) {
        Unifier base = canonical_unifier(w, k);
        auto into_fork = hom_search(base.quotient, f);
        if (into_fork.empty()) continue;
        AlgHom uf = compose(into_fork[0], base.hom);  // B_W -> B_F
        AlgHom uc = compose(embed, uf);               // B_W -> C through the retract
        bool fwd = false, bwd = false;
        for (const AlgHom& g : hom_search(f, c)) {
            bool commutes = true;
            for (int at = 0; at < w.atom_count() && commutes; ++at)
                commutes = g.apply(uf.apply(bit(at))) == uc.apply(bit(at));
            if (commutes) { fwd = true; break; }
        }
        for (const AlgHom& g : hom_search(c, f)) {
            bool commutes = true;
            for (int at = 0; at < w.atom_count() && commutes; ++at)
                commutes = g.apply(uc.apply(bit(at))) == uf.apply(bit(at));
            if (commutes) { bwd = true; break; }
        }
        CHECK(fwd);
        CHECK(bwd);
    }
}

TEST_CASE("mu sets and types of the named algebras") {
    ClosureAlgebra w = w_algebra();
    MuReport mu = mu_set(w);
    REQUIRE(mu.mu.size() == 2);
    CHECK(mu.mu[0].kernel.generator == w.atom_closure[2]); // f(t)
    CHECK(mu.mu[1].kernel.generator == w.atom_closure[4]); // f(w)
    CHECK(mu.type == UnifType::Finitary);
    CHECK(unification_type(w) == UnifType::Finitary);
    CHECK(mu.certificates.size() == 3); // the three dominated congruences
    for (const MuCertificate& c : mu.certificates) CHECK(verify_hom(c.witness));

    CHECK(unification_type(fork_algebra()) == UnifType::Unitary);
    CHECK(unification_type(two_element_algebra()) == UnifType::Unitary);

    ClosureAlgebra mixed = product(fork_algebra(), two_element_algebra()).algebra;
    MuReport mixed_mu = mu_set(mixed);
    CHECK(mixed_mu.type == UnifType::Finitary);
    CHECK(mixed_mu.mu.size() == 2);
    CHECK(mu_matches_brute(mixed, mixed_mu, brute_force_mu(mixed, mixed.atom_count())));

    CHECK_THROWS_AS(mu_set(cm(chain(3))), Error);
    CHECK_THROWS_AS(unification_type(trivial_algebra()), Error);

    // a wide co-fork has one admissible congruence per lower subset; the
    // whole algebra is projective, so the identity congruence dominates
    Frame cofork(8);
    for (int x = 0; x < 8; ++x) cofork.add(x, x);
    for (int x = 1; x < 8; ++x) cofork.add(x, 0); // lowers 1..7 under top 0
    ClosureAlgebra big = cm(cofork);
    CHECK(admissible_congruences(big).size() == 128);
    MuReport big_mu = mu_set(big);
    CHECK(big_mu.type == UnifType::Unitary);
    CHECK(big_mu.mu.size() == 1);
    CHECK(big_mu.mu[0].kernel.generator == 0);
}

TEST_CASE("brute-force oracle on the named algebras") {
    BruteMuReport bw = brute_force_mu(w_algebra(), 5);
    CHECK(bw.maximal_classes.size() == 2);
    CHECK(bw.type == UnifType::Finitary);
    CHECK(mu_matches_brute(w_algebra(), mu_set(w_algebra()), bw));

    BruteMuReport btwo = brute_force_mu(two_element_algebra(), 2);
    CHECK(btwo.maximal_classes.size() == 1);
    CHECK(btwo.type == UnifType::Unitary);

    BruteMuReport bf = brute_force_mu(fork_algebra(), 4);
    CHECK(bf.maximal_classes.size() == 1);
    CHECK(bf.type == UnifType::Unitary);
    CHECK(mu_matches_brute(fork_algebra(), mu_set(fork_algebra()), bf));
}

TEST_CASE("mu sets match the oracle on every small fork algebra") {
    CatalogQuery q;
    q.max_points = 4;
    q.fork = true;
    enumerate(q, [&](const Frame& fr) {
        ClosureAlgebra a = cm(fr);
        MuReport mu = mu_set(a);
        CHECK((mu.type == UnifType::Unitary || mu.type == UnifType::Finitary));
        CHECK(mu_matches_brute(a, mu, brute_force_mu(a, a.atom_count())));
        // mu members are pairwise incomparable
        for (std::size_t i = 0; i < mu.mu.size(); ++i)
            for (std::size_t j = 0; j < mu.mu.size(); ++j)
                if (i != j) CHECK_FALSE(more_general(mu.mu[i], mu.mu[j]).has_value());
    });
}

TEST_CASE("filtering probe") {
    std::vector<ClosureAlgebra> catalog{fork_algebra(), two_element_algebra()};
    FilteringReport rep = filtering_probe(catalog);
    CHECK_FALSE(rep.any_product_projective);
    CHECK(rep.pairs.size() == 3); // (f,f), (f,2), (2,2)
    for (const auto& p : rep.pairs) CHECK_FALSE(p.product_projective);
    CHECK_FALSE(rep.geach_holds[0]); // the fork algebra falls outside the Geach variety
    CHECK(rep.geach_holds[1]);       // the two-element algebra satisfies it

    CHECK_THROWS_AS(filtering_probe({w_algebra()}), Error); // not projective
}
