#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "claw/algebra.hpp"
#include "claw/catalog.hpp"
#include "oracles.hpp"

using namespace claw;

namespace {

Frame chain(int n) {
    Frame f(n);
    for (int x = 0; x < n; ++x)
        for (int y = x; y < n; ++y) f.add(x, y);
    return f;
}

Frame antichain(int n) {
    Frame f(n);
    for (int x = 0; x < n; ++x) f.add(x, x);
    return f;
}

// atom-image vector of a hom, for comparing against the element-level oracle
std::vector<Bits> image_vector(const AlgHom& h) {
    std::vector<Bits> v(h.source.atom_count());
    for (int i = 0; i < h.source.atom_count(); ++i) v[i] = h.apply(bit(i));
    return v;
}

} // namespace

TEST_CASE("complex algebra of the fork") {
    ClosureAlgebra a = fork_algebra();
    CHECK(a.element_count() == 8);
    CHECK(a.atom_count() == 3);
    CHECK(closed_elements(a) == std::vector<Bits>{0b000, 0b001, 0b011, 0b101, 0b111});
    CHECK(a.element_name(0b011) == "{u,v}");

    ClosureAlgebra two = two_element_algebra();
    CHECK(two.element_count() == 2);
    CHECK(two.atom_closure == std::vector<Bits>{1}); // identity operator

    ClosureAlgebra w = w_algebra();
    CHECK(w.atom_closure == std::vector<Bits>{0b00001, 0b00010, 0b00101, 0b01011, 0b10010});

    CHECK_THROWS_AS(cm(Frame(2)), Error);
}

TEST_CASE("closure and interior") {
    ClosureAlgebra a = fork_algebra();
    CHECK(a.interior(0b010) == 0b010);  // {v} open
    CHECK(a.closure(0b010) == 0b011);   // cl{v} = {u,v}
    CHECK(a.closure(0) == 0);
    CHECK(a.interior(a.one()) == a.one());
    CHECK(a.is_clopen(0));
    CHECK(a.is_clopen(a.one()));
    CHECK_FALSE(a.is_open(0b001)); // {u} closed, not open
    ClosureAlgebra w = w_algebra();
    CHECK(w.closure(0b00100) == 0b00101); // cl{t} = {u,t}

    // closure laws on every element of every small algebra
    CatalogQuery q;
    q.max_points = 4;
    enumerate(q, [&](const Frame& fr) {
        ClosureAlgebra alg = cm(fr);
        CHECK(alg.closure(0) == 0);
        for (Bits x = 0; x < alg.element_count(); ++x) {
            CHECK((x & alg.closure(x)) == x);
            CHECK(alg.closure(alg.closure(x)) == alg.closure(x));
            for (Bits y = 0; y < alg.element_count(); ++y)
                CHECK(alg.closure(x | y) == (alg.closure(x) | alg.closure(y)));
        }
    });
}

TEST_CASE("duality round trips") {
    CHECK(frames_equal(cf(fork_algebra()), fork_frame()));
    CHECK(frames_equal(cf(two_element_algebra()), antichain(1)));
    CHECK(frames_equal(cf(w_algebra()), w_frame()));
    CatalogQuery q;
    q.max_points = 5;
    enumerate(q, [&](const Frame& fr) {
        ClosureAlgebra a = cm(fr);
        CHECK(frames_equal(cf(a), fr));              // Cf Cm = id on finite frames
        CHECK(algebras_equal(cm(cf(a)), a));         // Em = id on finite algebras
    });
}

TEST_CASE("relative algebras") {
    ClosureAlgebra w = w_algebra();
    RelativeResult r = relative_algebra(w, w.atom_closure[3]); // f(v) = u+u'+v
    CHECK(r.algebra.atom_count() == 3);
    CHECK_FALSE(r.canonical_map_is_modal_hom); // closed but not open

    RelativeResult full = relative_algebra(w, w.one());
    CHECK(algebras_equal(full.algebra, w));
    CHECK(full.canonical_map_is_modal_hom);

    CHECK_THROWS_AS(relative_algebra(w, Bits{0}), Error);
    ClosureAlgebra f = fork_algebra();
    CHECK_THROWS_AS(relative_algebra(f, Bits{0b010}), Error); // {v} not closed

    // clopen decomposition: B = rel(b) x rel(-b) for clopen b
    ProductResult p = product(fork_algebra(), fork_algebra());
    CHECK(p.algebra.is_clopen(p.left_one));
    RelativeResult left = relative_algebra(p.algebra, p.left_one);
    RelativeResult right = relative_algebra(p.algebra, p.algebra.one() & ~p.left_one);
    CHECK(left.canonical_map_is_modal_hom);
    CHECK(right.canonical_map_is_modal_hom);
    ProductResult rebuilt = product(left.algebra, right.algebra);
    CHECK(find_isomorphism(rebuilt.algebra, p.algebra).has_value());
}

TEST_CASE("products") {
    ProductResult tt = product(two_element_algebra(), two_element_algebra());
    CHECK(tt.algebra.element_count() == 4);
    CHECK(components(tt.algebra.atoms).size() == 2);
    CHECK_FALSE(is_directly_indecomposable(tt.algebra));

    ProductResult ff = product(fork_algebra(), fork_algebra());
    CHECK(ff.algebra.atom_count() == 6);
    CHECK(ff.algebra.is_clopen(ff.left_one));
    CHECK(components(ff.algebra.atoms).size() ==
          components(fork_frame()).size() + components(fork_frame()).size());
}

TEST_CASE("quotients") {
    ClosureAlgebra w = w_algebra();
    QuotientResult q1 = quotient(w, ClosedIdeal{w.atom_closure[2]}); // by f(t)
    CHECK(q1.algebra.atom_count() == 3);
    CHECK(find_isomorphism(q1.algebra, fork_algebra()).has_value());
    CHECK(q1.projection.surjective());
    CHECK(q1.projection.kernel_generator() == w.atom_closure[2]);

    QuotientResult q2 = quotient(w, ClosedIdeal{w.atom_closure[4]}); // by f(w)
    CHECK(find_isomorphism(q2.algebra, fork_algebra()).has_value());

    QuotientResult q0 = quotient(w, ClosedIdeal{0});
    CHECK(algebras_equal(q0.algebra, w));

    QuotientResult qfull = quotient(w, ClosedIdeal{w.one()});
    CHECK(qfull.algebra.is_trivial());

    CHECK_THROWS_AS(quotient(fork_algebra(), ClosedIdeal{0b010}), Error); // not closed
}

TEST_CASE("hom search against the element-level oracle") {
    // all pairs of quasiorders with <= 3 atoms on each side
    CatalogQuery q;
    q.max_points = 3;
    std::vector<ClosureAlgebra> algebras;
    enumerate(q, [&](const Frame& fr) { algebras.push_back(cm(fr)); });
    for (const ClosureAlgebra& a : algebras)
        for (const ClosureAlgebra& b : algebras) {
            auto oracle = oracles::element_level_homs(a, b);
            std::vector<std::vector<Bits>> got;
            for (const AlgHom& h : hom_search(a, b)) {
                CHECK(verify_hom(h));
                got.push_back(image_vector(h));
            }
            std::sort(got.begin(), got.end());
            std::sort(oracle.begin(), oracle.end());
            CHECK(got == oracle);
        }
}

TEST_CASE("hom search constraints") {
    ClosureAlgebra bf = fork_algebra(), two = two_element_algebra(), bw = w_algebra();

    // Two surjections onto the two-element algebra (one per closed coatom);
    // the element-level oracle pins the count.
    auto surj = hom_search(bf, two, HomKind::Surjective);
    CHECK(surj.size() == 2);
    int oracle_surjections = 0;
    for (const auto& img : oracles::element_level_homs(bf, two)) {
        Bits covered = 0;
        for (Bits x : img) covered |= x;
        if (covered == two.one()) ++oracle_surjections;
    }
    CHECK(oracle_surjections == 2);
    for (const AlgHom& h : surj) {
        CHECK(h.surjective());
        CHECK(popcount(h.kernel_generator()) == 2); // {u,v} or {u,w}
        CHECK(bf.is_closed(h.kernel_generator()));
        CHECK(h.apply(h.kernel_generator()) == 0);
    }

    CHECK(hom_search(two, bf).size() == 1); // 0 -> 0, 1 -> 1

    auto embeddings = hom_search(bf, bw, HomKind::Injective);
    CHECK(embeddings.size() == 6); // six bounded surjections of the W frame onto the fork
    for (const AlgHom& h : embeddings) CHECK(h.injective());
    auto onto_fork = hom_search(bw, bf, HomKind::Surjective);
    CHECK(onto_fork.size() == 4);
    for (const AlgHom& h : onto_fork) {
        CHECK(h.surjective());
        QuotientResult qr = quotient(bw, ClosedIdeal{h.kernel_generator()});
        CHECK(find_isomorphism(qr.algebra, bf).has_value()); // homomorphism theorem
    }
}

TEST_CASE("duality of injections and surjections on small pairs") {
    CatalogQuery q;
    q.max_points = 4;
    std::vector<Frame> frames = enumerate_all(q);
    for (const Frame& p : frames)
        for (const Frame& r : frames) {
            ClosureAlgebra a = cm(p), b = cm(r);
            // direct searches over all point maps, independent of hom_search
            bool bounded_onto = false, bounded_into_generated = false;
            std::vector<int> map(r.n, 0);
            for (bool more = true; more;) {
                Morphism m{r, p, map};
                if (oracles::bounded_by_loops(r, p, map)) {
                    if (is_surjective(m)) bounded_onto = true;
                    if (is_injective(m) && is_up_closed(p, image_of(m)))
                        bounded_into_generated = true;
                }
                more = false;
                for (int i = r.n; i-- > 0;) {
                    if (++map[i] < p.n) { more = true; break; }
                    map[i] = 0;
                }
            }
            // A embeds in B iff cf(B) maps boundedly onto cf(A); here A=cm(p),
            // B=cm(r), cf(B)=r, cf(A)=p.
            bool has_injection = !hom_search(a, b, HomKind::Injective).empty();
            bool has_surjection = !hom_search(a, b, HomKind::Surjective).empty();
            CHECK(has_injection == bounded_onto);
            CHECK(has_surjection == bounded_into_generated);
            // homomorphism theorem: the quotient by the kernel is the image
            for (const AlgHom& h : hom_search(a, b, HomKind::Surjective)) {
                QuotientResult qr = quotient(a, ClosedIdeal{h.kernel_generator()});
                CHECK(find_isomorphism(qr.algebra, b).has_value());
            }
        }
}

TEST_CASE("direct indecomposability") {
    CHECK(is_directly_indecomposable(fork_algebra()));
    CHECK(is_directly_indecomposable(w_algebra()));
    CHECK_FALSE(is_directly_indecomposable(product(fork_algebra(), fork_algebra()).algebra));
    CHECK_THROWS_AS(is_directly_indecomposable(trivial_algebra()), Error);

    // equals the clopen criterion on small algebras
    CatalogQuery q;
    q.max_points = 4;
    enumerate(q, [&](const Frame& fr) {
        ClosureAlgebra a = cm(fr);
        bool only_trivial_clopens = true;
        for (Bits x = 1; x < a.one(); ++x)
            if (a.is_clopen(x)) only_trivial_clopens = false;
        CHECK(is_directly_indecomposable(a) == only_trivial_clopens);
    });
}

TEST_CASE("algebra isomorphism") {
    ClosureAlgebra a = fork_algebra();
    ClosureAlgebra b = cm(apply_permutation(fork_frame(), {1, 2, 0}));
    auto iso = find_isomorphism(a, b);
    REQUIRE(iso.has_value());
    CHECK(verify_hom(*iso));
    CHECK(iso->injective());
    CHECK(iso->surjective());

    CHECK_FALSE(find_isomorphism(a, cm(antichain(3))).has_value()); // same size, different f
    CHECK(find_isomorphism(w_algebra(), cm(w_frame())).has_value());
}

TEST_CASE("trivial algebra corner") {
    ClosureAlgebra t = trivial_algebra();
    CHECK(t.is_trivial());
    CHECK(t.element_count() == 1);
    CHECK(t.one() == 0);
    CHECK(hom_search(fork_algebra(), t).size() == 1); // collapse everything
    CHECK(hom_search(t, fork_algebra()).empty());     // 0 != 1 in the target
    CHECK(chain(1).n == 1);
}
