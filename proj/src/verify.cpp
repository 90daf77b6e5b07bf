#include "claw/verify.hpp"

#include <algorithm>
#include <sstream>

#include "claw/catalog.hpp"
#include "claw/io.hpp"
#include "claw/projective.hpp"
#include "claw/terms.hpp"
#include "claw/unify.hpp"

namespace claw {

namespace {

CriterionResult fork_structure() {
    CriterionResult r{1, "fork algebra structure and closed elements", false, ""};
    ClosureAlgebra a = fork_algebra();
    std::vector<Bits> closed = closed_elements(a);
    std::vector<Bits> expected{0b000, 0b001, 0b011, 0b101, 0b111}; // 0, u, u+v, u+w, 1
    r.pass = a.element_count() == 8 && a.atom_count() == 3 && closed == expected;
    std::ostringstream d;
    d << "8 elements, 3 atoms, closed:";
    for (Bits x : closed) d << " " << a.element_name(x);
    r.detail = d.str();
    return r;
}

CriterionResult w_table() {
    CriterionResult r{2, "atom closures of the W algebra", false, ""};
    ClosureAlgebra a = w_algebra();
    // u, u', t -> u+t, v -> u+u'+v, w -> u'+w
    std::vector<Bits> expected{0b00001, 0b00010, 0b00101, 0b01011, 0b10010};
    r.pass = a.atom_closure == expected;
    std::ostringstream d;
    for (int i = 0; i < a.atom_count(); ++i)
        d << (i ? ", " : "") << "f(" << a.atoms.labels[i] << ")=" << a.element_name(a.atom_closure[i]);
    r.detail = d.str();
    return r;
}

CriterionResult axioms_hold() {
    CriterionResult r{3, "Grz, BD2, BW2 valid on both algebras; Geach fails on the fork", false, ""};
    bool ok = true;
    std::uint64_t worst = 0;
    for (const ClosureAlgebra& a : {fork_algebra(), w_algebra()})
        for (const char* name : {"grz", "bd2", "bw2"}) {
            EquationReport rep = check_equation(builtin_axiom(name), a);
            ok = ok && rep.holds && rep.assignments <= 1024;
            worst = std::max(worst, rep.assignments);
        }
    EquationReport geach = check_equation(axiom_geach(), fork_algebra());
    ClosureAlgebra bf = fork_algebra();
    bool geach_ok = !geach.holds && geach.witness.size() == 1 && geach.witness[0] == 0b010;
    r.pass = ok && geach_ok;
    std::ostringstream d;
    d << "max " << worst << " assignments; geach witness x="
      << (geach.holds ? "none" : bf.element_name(geach.witness[0]));
    r.detail = d.str();
    return r;
}

CriterionResult correspondence() {
    CriterionResult r{4, "BD2/BW2 equation validity matches the frame conditions (<= 5 points)",
                      false, ""};
    CatalogQuery q;
    q.max_points = 5;
    std::uint64_t n = 0, bad = 0;
    enumerate(q, [&](const Frame& f) {
        ++n;
        ClosureAlgebra a = cm(f);
        if (check_equation(axiom_bd2(), a).holds != frame_condition_bd2(f)) ++bad;
        if (check_equation(axiom_bw2(), a).holds != frame_condition_bw2(f)) ++bad;
    });
    r.pass = bad == 0 && n > 0;
    r.detail = std::to_string(n) + " quasiorders, " + std::to_string(bad) + " mismatches";
    return r;
}

CriterionResult projectivity_routes() {
    CriterionResult r{5, "three projectivity routes agree on connected fork frames (<= 6 points)",
                      false, ""};
    CatalogQuery q;
    q.max_points = 6;
    q.fork = true;
    q.connected = true;
    std::uint64_t n = 0, bad = 0, projective = 0;
    enumerate(q, [&](const Frame& f) {
        ++n;
        ClosureAlgebra a = cm(f);
        bool by_atoms = is_projective_fork(a);
        bool by_bw = !find_bw_subalgebra(a).has_value();
        bool by_retract = bounded_injectivity_probe(f, f.n + 2).all_retractable();
        if (by_atoms != by_bw || by_atoms != by_retract) ++bad;
        if (by_atoms) ++projective;
    });
    r.pass = bad == 0 && n > 0;
    r.detail = std::to_string(n) + " frames (" + std::to_string(projective) + " projective), " +
               std::to_string(bad) + " disagreements";
    return r;
}

CriterionResult w_certificate() {
    CriterionResult r{6, "non-projectivity certificate of the W algebra", false, ""};
    ClosureAlgebra a = w_algebra();
    bool meet_zero = (a.atom_closure[2] & a.atom_closure[4]) == 0; // f(t)*f(w)
    auto bw = find_bw_subalgebra(a);
    r.pass = meet_zero && bw && bw->atom_a == 2 && bw->atom_b == 4 && bw->v == 0b01000 &&
             bw->d == 0b00011 && bw->u == 0b00001 && bw->t == 0b00100 && bw->u_prime == 0b00010 &&
             bw->w == 0b10000;
    if (bw) {
        std::ostringstream d;
        d << "pair (" << a.atoms.labels[bw->atom_a] << "," << a.atoms.labels[bw->atom_b] << "), v="
          << a.element_name(bw->v) << " d=" << a.element_name(bw->d) << " u="
          << a.element_name(bw->u) << " t=" << a.element_name(bw->t) << " u'="
          << a.element_name(bw->u_prime) << " w=" << a.element_name(bw->w);
        r.detail = d.str();
    } else {
        r.detail = "no witness found";
    }
    return r;
}

CriterionResult random_retractions() {
    CriterionResult r{7, "constructive retraction on 500 random fork frames (<= 12 points)",
                      false, ""};
    std::mt19937_64 rng(0x00C0FFEE);
    int failures = 0, brute_checked = 0;
    for (int it = 0; it < 500; ++it) {
        Frame w = random_fork_frame(rng, 12);
        Bits s = random_projective_generated_subframe(rng, w);
        Subframe sub = subframe(w, s);
        Morphism emb = inclusion_morphism(sub, w);
        try {
            RetractionPlan plan = build_retraction(w, emb);
            bool ok = is_bounded_morphism(plan.map) && is_surjective(plan.map);
            for (int v = 0; v < sub.frame.n && ok; ++v)
                ok = plan.map.map[sub.points[v]] == v;
            if (!ok) ++failures;
            if (w.n <= 8) {
                ++brute_checked;
                if (!brute_force_retraction(w, emb)) ++failures;
            }
        } catch (const Error&) {
            ++failures;
        }
    }
    r.pass = failures == 0;
    r.detail = "500 frames, " + std::to_string(brute_checked) + " brute-checked, " +
               std::to_string(failures) + " failures";
    return r;
}

CriterionResult w_unification() {
    CriterionResult r{8, "the W algebra has exactly two maximal unifiers (finitary)", false, ""};
    ClosureAlgebra a = w_algebra();
    MuReport mu = mu_set(a);
    Bits ft = a.atom_closure[2], fw = a.atom_closure[4];
    bool kernels_ok = mu.mu.size() == 2 && mu.mu[0].kernel.generator == ft &&
                      mu.mu[1].kernel.generator == fw;
    bool incomparable = kernels_ok && !more_general(mu.mu[0], mu.mu[1]).has_value() &&
                        !more_general(mu.mu[1], mu.mu[0]).has_value();
    bool type_ok = unification_type(a) == UnifType::Finitary;
    BruteMuReport brute = brute_force_mu(a, 5);
    bool brute_ok = mu_matches_brute(a, mu, brute);
    r.pass = kernels_ok && incomparable && type_ok && brute_ok;
    std::ostringstream d;
    d << mu.mu.size() << " maximal unifiers, kernels";
    for (const Unifier& u : mu.mu) d << " " << a.element_name(u.kernel.generator);
    d << ", type " << unif_type_name(mu.type) << ", oracle "
      << (brute_ok ? "agrees" : "disagrees");
    r.detail = d.str();
    return r;
}

CriterionResult type_theorem() {
    CriterionResult r{9, "every fork algebra (<= 5 atoms) is unitary or finitary; oracle agrees",
                      false, ""};
    CatalogQuery q;
    q.max_points = 5;
    q.fork = true;
    std::uint64_t n = 0, bad = 0;
    enumerate(q, [&](const Frame& f) {
        ++n;
        ClosureAlgebra a = cm(f);
        MuReport mu = mu_set(a);
        if (mu.type != UnifType::Unitary && mu.type != UnifType::Finitary) ++bad;
        if (!mu_matches_brute(a, mu, brute_force_mu(a, a.atom_count()))) ++bad;
    });
    r.pass = bad == 0 && n > 0;
    r.detail = std::to_string(n) + " fork algebras, " + std::to_string(bad) + " exceptions";
    return r;
}

CriterionResult variety_sanity() {
    CriterionResult r{10, "the W algebra satisfies the axioms and maps onto the fork algebra",
                      false, ""};
    ClosureAlgebra bw = w_algebra(), bf = fork_algebra();
    bool ax = is_fork_algebra(bw);
    Bits up_uprime = up_set(bw.atoms, bit(1));
    Subframe sub = subframe(bw.atoms, up_uprime);
    bool sub_is_fork = find_frame_isomorphism(sub.frame, fork_frame()).has_value();
    QuotientResult qr = quotient(bw, ClosedIdeal{bw.atom_closure[2]}); // by f(t)
    bool image_ok = find_isomorphism(qr.algebra, bf).has_value() && qr.projection.surjective();
    r.pass = ax && sub_is_fork && image_ok;
    r.detail = std::string("axioms ") + (ax ? "hold" : "fail") + ", generated subframe on " +
               bw.element_name(up_uprime) + (sub_is_fork ? " is" : " is not") +
               " a fork, quotient is" + (image_ok ? "" : " not") + " the fork algebra";
    return r;
}

CriterionResult wdp_and_filtering() {
    CriterionResult r{11, "open-join witness holds on the fork algebra; no projective products",
                      false, ""};
    ClosureAlgebra bf = fork_algebra();
    WdpReport direct = wdp_witness_check(bf);
    ProductResult sq = product(bf, bf);
    WdpReport doubled = wdp_witness_check(sq.algebra);
    bool witness_ok = direct.holds && !doubled.holds && doubled.x == sq.left_one &&
                      doubled.y == sq.right_one;
    CatalogQuery q;
    q.max_points = 5;
    q.fork = true;
    q.connected = true;
    std::vector<ClosureAlgebra> projectives;
    enumerate(q, [&](const Frame& f) {
        ClosureAlgebra a = cm(f);
        if (is_projective_fork(a)) projectives.push_back(std::move(a));
    });
    FilteringReport fr = filtering_probe(projectives);
    r.pass = witness_ok && !fr.any_product_projective && !projectives.empty();
    r.detail = std::to_string(projectives.size()) + " projective algebras, " +
               std::to_string(fr.pairs.size()) + " products, all non-projective: " +
               (fr.any_product_projective ? "no" : "yes");
    return r;
}

CriterionResult mu_cardinality() {
    CriterionResult r{12, "all mu-sets of any one structure have equal cardinality", false, ""};
    std::uint64_t checked = 0, bad = 0;
    CatalogQuery q;
    q.max_points = 5;
    enumerate(q, [&](const Frame& f) {
        FrameMu fm = mu_sets(f); // throws Consistency on violation
        for (Bits s : fm.sets)
            if (popcount(s) != popcount(fm.sets.front())) ++bad;
        ++checked;
    });
    CatalogQuery qf;
    qf.max_points = 5;
    qf.fork = true;
    enumerate(qf, [&](const Frame& f) {
        ClosureAlgebra a = cm(f);
        BruteMuReport brute = brute_force_mu(a, a.atom_count());
        for (const auto& s : brute.mu_sets)
            if (s.size() != brute.mu_sets.front().size()) ++bad;
        ++checked;
    });
    r.pass = bad == 0 && checked > 0;
    r.detail = std::to_string(checked) + " structures, " + std::to_string(bad) + " violations";
    return r;
}

} // namespace

std::vector<CriterionResult> run_paper_verification() {
    std::vector<CriterionResult> out;
    out.push_back(fork_structure());
    out.push_back(w_table());
    out.push_back(axioms_hold());
    out.push_back(correspondence());
    out.push_back(projectivity_routes());
    out.push_back(w_certificate());
    out.push_back(random_retractions());
    out.push_back(w_unification());
    out.push_back(type_theorem());
    out.push_back(variety_sanity());
    out.push_back(wdp_and_filtering());
    out.push_back(mu_cardinality());
    return out;
}

} // namespace claw
