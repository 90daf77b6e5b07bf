#include "claw/cli.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "claw/catalog.hpp"
#include "claw/io.hpp"
#include "claw/projective.hpp"
#include "claw/terms.hpp"
#include "claw/unify.hpp"
#include "claw/verify.hpp"

namespace claw {

namespace {

using json = nlohmann::ordered_json;

struct CommonOpts {
    std::string input;
    bool close = false;
    std::string format = "text";
};

void add_common(CLI::App* cmd, CommonOpts& o, bool with_dot) {
    cmd->add_option("input", o.input, "frame file, @fork or @w")->required();
    cmd->add_flag("--close", o.close, "apply reflexive-transitive closure on load");
    cmd->add_option("--format", o.format, "output format")
        ->check(CLI::IsMember(with_dot ? std::vector<std::string>{"text", "json", "dot"}
                                       : std::vector<std::string>{"text", "json"}));
}

json frame_json(const Frame& f) {
    json j;
    j["points"] = f.n;
    if (!f.labels.empty()) j["labels"] = f.labels;
    json rels = json::array();
    for (int x = 0; x < f.n; ++x)
        for (int y : BitRange(f.rel[x])) rels.push_back({f.point_name(x), f.point_name(y)});
    j["rel"] = rels;
    return j;
}

std::string set_name(const Frame& f, Bits s) {
    std::string out = "{";
    bool first = true;
    for (int x : BitRange(s)) {
        if (!first) out += ",";
        out += f.point_name(x);
        first = false;
    }
    return out + "}";
}

int cmd_frame_stats(const CommonOpts& o, std::ostream& out) {
    Frame f = load_frame(o.input, o.close);
    if (!is_quasiorder(f))
        throw Error(Errc::NotQuasiorder, "frame statistics need a quasiorder (try --close)");
    if (o.format == "dot") {
        out << dot_frame(f);
        return 0;
    }
    OrderStats st = order_stats(f);
    ClusterPoset cp = cluster_poset(f);
    auto comps = components(f);
    bool fork = is_fork_frame(f);
    if (o.format == "json") {
        json j;
        j["frame"] = frame_json(f);
        j["quasiorder"] = true;
        j["partial_order"] = is_antisymmetric(f);
        j["components"] = comps.size();
        j["clusters"] = cp.classes.size();
        j["height"] = st.height;
        j["width"] = st.width;
        j["local_width"] = st.local_width;
        j["fork_frame"] = fork;
        if (fork) {
            Levels lv = levels(f);
            j["lower_level"] = set_name(f, lv.lower);
            j["upper_level"] = set_name(f, lv.upper);
        }
        out << j.dump(2) << "\n";
        return 0;
    }
    out << "points: " << f.n << "\n";
    out << "partial order: " << (is_antisymmetric(f) ? "yes" : "no") << "\n";
    out << "components: " << comps.size() << "\n";
    out << "clusters: " << cp.classes.size() << "\n";
    out << "height: " << st.height << "\nwidth: " << st.width << "\nlocal width: " << st.local_width
        << "\n";
    out << "fork frame: " << (fork ? "yes" : "no") << "\n";
    if (fork) {
        Levels lv = levels(f);
        out << "levels: lower " << set_name(f, lv.lower) << ", upper " << set_name(f, lv.upper)
            << "\n";
    }
    return 0;
}

int cmd_frame_mu(const CommonOpts& o, std::ostream& out) {
    Frame f = load_frame(o.input, o.close);
    FrameMu fm = mu_sets(f);
    if (o.format == "json") {
        json j;
        j["type"] = unif_type_name(fm.type);
        json sets = json::array();
        for (Bits s : fm.sets) sets.push_back(set_name(f, s));
        j["mu_sets"] = sets;
        out << j.dump(2) << "\n";
        return 0;
    }
    out << "type: " << unif_type_name(fm.type) << "\n";
    for (Bits s : fm.sets) out << "mu-set: " << set_name(f, s) << "\n";
    return 0;
}

int cmd_algebra_axioms(const CommonOpts& o, const std::vector<std::string>& extra_terms,
                       std::ostream& out) {
    ClosureAlgebra a = cm(load_frame(o.input, o.close));
    struct Row {
        std::string name;
        EquationReport rep;
    };
    std::vector<Row> rows;
    for (const std::string& name : axiom_names())
        rows.push_back({name, check_equation(builtin_axiom(name), a)});
    for (const std::string& src : extra_terms) {
        bool named = std::find(axiom_names().begin(), axiom_names().end(), src) != axiom_names().end();
        Term t = named ? builtin_axiom(src) : parse_term(src);
        rows.push_back({src, check_equation(t, a)});
    }
    bool fork = rows[0].rep.holds && rows[1].rep.holds && rows[2].rep.holds;
    if (o.format == "json") {
        json j;
        j["atoms"] = a.atom_count();
        json axs = json::array();
        for (const Row& r : rows) {
            json ja;
            ja["axiom"] = r.name;
            ja["holds"] = r.rep.holds;
            ja["assignments"] = r.rep.assignments;
            if (!r.rep.holds) {
                json w = json::array();
                for (Bits b : r.rep.witness) w.push_back(a.element_name(b));
                ja["witness"] = w;
            }
            axs.push_back(ja);
        }
        j["axioms"] = axs;
        j["fork_algebra"] = fork;
        out << j.dump(2) << "\n";
    } else {
        std::size_t width = 10;
        for (const Row& r : rows) width = std::max(width, r.name.size() + 2);
        for (const Row& r : rows) {
            out << std::left << std::setw(static_cast<int>(width)) << r.name
                << (r.rep.holds ? "holds" : "fails");
            if (!r.rep.holds) {
                out << "  witness:";
                for (std::size_t i = 0; i < r.rep.witness.size(); ++i)
                    out << " x" << i << "=" << a.element_name(r.rep.witness[i]);
            }
            out << "\n";
        }
        out << "fork algebra: " << (fork ? "yes" : "no") << "\n";
    }
    return fork ? 0 : 1;
}

int cmd_algebra_projective(const CommonOpts& o, std::ostream& out) {
    ClosureAlgebra a = cm(load_frame(o.input, o.close));
    bool proj = is_projective_fork(a);
    std::pair<int, int> witness{-1, -1};
    if (!proj) {
        bool indec = is_directly_indecomposable(a);
        if (indec)
            for (int i = 0; i < a.atom_count() && witness.first < 0; ++i) {
                if (a.is_closed(bit(i))) continue;
                for (int j = i + 1; j < a.atom_count(); ++j) {
                    if (a.is_closed(bit(j))) continue;
                    if ((a.atom_closure[i] & a.atom_closure[j]) == 0) {
                        witness = {i, j};
                        break;
                    }
                }
            }
    }
    if (o.format == "json") {
        json j;
        j["projective"] = proj;
        j["directly_indecomposable"] = is_directly_indecomposable(a);
        if (witness.first >= 0)
            j["witness_pair"] = {a.atoms.point_name(witness.first), a.atoms.point_name(witness.second)};
        out << j.dump(2) << "\n";
    } else {
        out << "projective: " << (proj ? "true" : "false") << "\n";
        if (!is_directly_indecomposable(a)) out << "directly indecomposable: no\n";
        if (witness.first >= 0)
            out << "witness pair: (" << a.atoms.point_name(witness.first) << ", "
                << a.atoms.point_name(witness.second) << ")\n";
    }
    return proj ? 0 : 1;
}

int cmd_algebra_bw(const CommonOpts& o, bool all_pairs, std::ostream& out) {
    ClosureAlgebra a = cm(load_frame(o.input, o.close));
    std::vector<BWWitness> found;
    if (all_pairs) {
        found = find_bw_witnesses(a);
    } else if (auto bw = find_bw_subalgebra(a)) {
        found.push_back(std::move(*bw));
    }
    if (o.format == "json") {
        json j;
        j["found"] = !found.empty();
        json list = json::array();
        for (const BWWitness& bw : found) {
            json e;
            e["atom_pair"] = {a.atoms.point_name(bw.atom_a), a.atoms.point_name(bw.atom_b)};
            e["v"] = a.element_name(bw.v);
            e["d"] = a.element_name(bw.d);
            e["u"] = a.element_name(bw.u);
            e["t"] = a.element_name(bw.t);
            e["u'"] = a.element_name(bw.u_prime);
            e["w"] = a.element_name(bw.w);
            list.push_back(e);
        }
        j["witnesses"] = list;
        out << j.dump(2) << "\n";
    } else if (!found.empty()) {
        for (const BWWitness& bw : found) {
            out << "embedded W algebra from pair (" << a.atoms.point_name(bw.atom_a) << ", "
                << a.atoms.point_name(bw.atom_b) << ")\n";
            out << "v  = " << a.element_name(bw.v) << "\n";
            out << "d  = " << a.element_name(bw.d) << "\n";
            out << "u  = " << a.element_name(bw.u) << "\n";
            out << "t  = " << a.element_name(bw.t) << "\n";
            out << "u' = " << a.element_name(bw.u_prime) << "\n";
            out << "w  = " << a.element_name(bw.w) << "\n";
        }
    } else {
        out << "no embedded W algebra (the algebra is projective)\n";
    }
    return !found.empty() ? 0 : 1;
}

int cmd_algebra_retract(const CommonOpts& o, const std::string& sub_points, bool brute, bool explain,
                        std::ostream& out) {
    Frame w = load_frame(o.input, o.close);
    Bits s = parse_point_set(w, sub_points);
    Subframe sub = subframe(w, s);
    Morphism emb = inclusion_morphism(sub, w);
    if (brute) {
        auto m = brute_force_retraction(w, emb);
        if (!m) {
            out << "no retraction exists\n";
            return 1;
        }
        out << "retraction found:\n";
        for (int x = 0; x < w.n; ++x)
            out << "  " << w.point_name(x) << " -> " << sub.frame.point_name(m->map[x]) << "\n";
        return 0;
    }
    RetractionPlan plan = build_retraction(w, emb);
    if (o.format == "dot") {
        out << dot_retraction(plan);
        return 0;
    }
    if (o.format == "json") {
        json j;
        j["sub"] = set_name(w, s);
        j["w1"] = set_name(w, plan.set_w1);
        j["w2"] = set_name(w, plan.set_w2);
        j["w3"] = set_name(w, plan.set_w3);
        json map = json::array();
        for (const CaseEntry& e : plan.case_log)
            map.push_back({{"point", w.point_name(e.point)},
                           {"case", e.tag},
                           {"image", sub.frame.point_name(e.value)}});
        j["map"] = map;
        out << j.dump(2) << "\n";
        return 0;
    }
    out << "retraction onto " << set_name(w, s) << "\n";
    out << "W1 " << set_name(w, plan.set_w1) << "  W2 " << set_name(w, plan.set_w2) << "  W3 "
        << set_name(w, plan.set_w3) << "\n";
    for (const CaseEntry& e : plan.case_log) {
        out << "  " << w.point_name(e.point) << " -> " << sub.frame.point_name(e.value);
        if (explain) out << "   [case " << e.tag << "]";
        out << "\n";
    }
    return 0;
}

int cmd_unify(const CommonOpts& o, bool brute, int bound, std::ostream& out) {
    ClosureAlgebra a = cm(load_frame(o.input, o.close));
    std::vector<ClosedIdeal> adm = admissible_congruences(a);
    MuReport mu = mu_set(a);
    int effective_bound = bound > 0 ? bound : a.atom_count();
    json j;
    j["atoms"] = a.atom_count();
    j["unifiable"] = is_unifiable(a);
    json admj = json::array();
    for (const ClosedIdeal& k : adm) {
        Unifier u = canonical_unifier(a, k);
        json e;
        e["kernel"] = a.element_name(k.generator);
        e["quotient_atoms"] = u.quotient.atom_count();
        admj.push_back(e);
    }
    j["admissible_congruences"] = admj;
    json muj = json::array();
    for (const Unifier& u : mu.mu) muj.push_back(a.element_name(u.kernel.generator));
    j["mu_set"] = muj;
    j["type"] = unif_type_name(mu.type);
    json certs = json::array();
    for (const MuCertificate& c : mu.certificates) {
        json e;
        e["dominated_kernel"] = a.element_name(c.dominated_kernel);
        e["dominated_by"] = a.element_name(mu.mu[c.dominating].kernel.generator);
        certs.push_back(e);
    }
    j["certificates"] = certs;
    if (brute) {
        BruteMuReport br = brute_force_mu(a, effective_bound);
        j["oracle"] = {{"unifiers", br.unifiers.size()},
                       {"classes", br.class_rep.size()},
                       {"type", unif_type_name(br.type)},
                       {"agrees", mu_matches_brute(a, mu, br)}};
    }
    if (o.format == "json") {
        out << j.dump(2) << "\n";
        return 0;
    }
    out << "unifiable: " << (j["unifiable"].get<bool>() ? "yes" : "no") << "\n";
    out << "admissible congruences (" << adm.size() << "):";
    for (const ClosedIdeal& k : adm) out << " " << a.element_name(k.generator);
    out << "\n";
    out << "mu-set kernels:";
    for (const Unifier& u : mu.mu) out << " " << a.element_name(u.kernel.generator);
    out << "\nunification type: " << unif_type_name(mu.type) << "\n";
    for (const MuCertificate& c : mu.certificates)
        out << "  " << a.element_name(c.dominated_kernel) << " dominated by "
            << a.element_name(mu.mu[c.dominating].kernel.generator) << "\n";
    if (brute)
        out << "oracle: " << j["oracle"]["unifiers"] << " unifiers, "
            << j["oracle"]["classes"] << " classes, type " << unif_type_name(mu.type) << ", "
            << (j["oracle"]["agrees"].get<bool>() ? "agrees" : "DISAGREES") << "\n";
    return 0;
}

int cmd_catalog(int max_points, bool fork, bool poset, bool connected, int max_height,
                int max_local_width, bool labeled, bool count_only, const std::string& out_dir,
                std::ostream& out) {
    CatalogQuery q;
    q.max_points = max_points;
    q.fork = fork;
    q.poset = poset;
    q.connected = connected;
    if (max_height >= 0) q.max_height = max_height;
    if (max_local_width >= 0) q.max_local_width = max_local_width;
    q.up_to_iso = !labeled;
    std::uint64_t n = 0;
    std::ofstream file;
    enumerate(q, [&](const Frame& f) {
        ++n;
        if (count_only) return;
        if (!out_dir.empty()) {
            std::ostringstream name;
            name << out_dir << "/frame_" << std::setfill('0') << std::setw(4) << n << ".frame";
            std::ofstream of(name.str());
            of << write_frame(f);
        } else {
            out << "# frame " << n << "\n" << write_frame(f) << "\n";
        }
    });
    out << "frames: " << n << "\n";
    return 0;
}

int cmd_verify(std::ostream& out) {
    int failed = 0;
    for (const CriterionResult& r : run_paper_verification()) {
        out << (r.pass ? "[PASS] " : "[FAIL] ") << r.id << ". " << r.title;
        if (!r.detail.empty()) out << " -- " << r.detail;
        out << "\n";
        if (!r.pass) ++failed;
    }
    out << (failed == 0 ? "all criteria passed\n"
                        : std::to_string(failed) + " criteria failed\n");
    return failed == 0 ? 0 : 1;
}

} // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"claw - a workbench for finite closure algebras and their dual frames"};
    app.require_subcommand(1);

    CommonOpts stats_o, mu_o, ax_o, proj_o, bw_o, retract_o, unify_o;
    std::vector<std::string> extra_terms;
    std::string sub_points, out_dir;
    bool retract_brute = false, retract_explain = false;
    bool unify_brute = false;
    int unify_bound = -1;
    int cat_points = 0, cat_height = -1, cat_lw = -1;
    bool cat_fork = false, cat_poset = false, cat_connected = false, cat_labeled = false,
         cat_count_only = false;

    CLI::App* frame = app.add_subcommand("frame", "frame-level procedures");
    frame->require_subcommand(1);
    CLI::App* fstats = frame->add_subcommand("stats", "order statistics of a quasiorder");
    add_common(fstats, stats_o, true);
    CLI::App* fmu = frame->add_subcommand("mu", "dense antichains and the frame type");
    add_common(fmu, mu_o, false);

    CLI::App* algebra = app.add_subcommand("algebra", "closure-algebra procedures");
    algebra->require_subcommand(1);
    CLI::App* aax = algebra->add_subcommand("axioms", "validity of the built-in axioms");
    add_common(aax, ax_o, false);
    aax->add_option("--term", extra_terms, "additional term to check (t = 1)");
    CLI::App* aproj = algebra->add_subcommand("projective", "projectivity in the fork variety");
    add_common(aproj, proj_o, false);
    CLI::App* abw = algebra->add_subcommand("bw-witness", "embedded copy of the W algebra");
    add_common(abw, bw_o, false);
    bool bw_all = false;
    abw->add_flag("--all", bw_all, "one witness per qualifying atom pair");
    CLI::App* aret = algebra->add_subcommand("retract", "bounded retraction onto a subframe");
    add_common(aret, retract_o, true);
    aret->add_option("--sub", sub_points, "points of the generated subframe, e.g. {u,v}")->required();
    aret->add_flag("--brute", retract_brute, "exhaustive search instead of the construction");
    aret->add_flag("--explain", retract_explain, "print the proof case per point");

    CLI::App* unify = app.add_subcommand("unify", "unification procedures");
    unify->require_subcommand(1);
    CLI::App* ureport = unify->add_subcommand("report", "admissible congruences, mu-set and type");
    add_common(ureport, unify_o, false);
    ureport->add_flag("--brute", unify_brute, "cross-check against the definition-level oracle");
    ureport->add_option("--bound", unify_bound, "atom bound for the oracle targets");

    CLI::App* catalog = app.add_subcommand("catalog", "small-frame enumeration");
    catalog->require_subcommand(1);
    CLI::App* cdump = catalog->add_subcommand("dump", "write every frame matching the constraints");
    cdump->add_option("--max-points", cat_points, "maximum number of points")->required();
    cdump->add_flag("--fork", cat_fork, "fork frames only");
    cdump->add_flag("--poset", cat_poset, "partial orders only");
    cdump->add_flag("--connected", cat_connected, "connected frames only");
    cdump->add_option("--max-height", cat_height, "height bound");
    cdump->add_option("--max-local-width", cat_lw, "local width bound");
    cdump->add_flag("--labeled", cat_labeled, "labeled enumeration (no isomorphism dedup)");
    cdump->add_flag("--count-only", cat_count_only, "print the count only");
    cdump->add_option("--out", out_dir, "directory for one file per frame");

    CLI::App* verify = app.add_subcommand("verify-paper", "run the built-in verification suite");

    std::vector<const char*> argv;
    argv.push_back("claw");
    for (const std::string& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            out << app.help();
            return 0;
        }
        err << "error: " << e.what() << "\n";
        return 2;
    }

    try {
        if (fstats->parsed()) return cmd_frame_stats(stats_o, out);
        if (fmu->parsed()) return cmd_frame_mu(mu_o, out);
        if (aax->parsed()) return cmd_algebra_axioms(ax_o, extra_terms, out);
        if (aproj->parsed()) return cmd_algebra_projective(proj_o, out);
        if (abw->parsed()) return cmd_algebra_bw(bw_o, bw_all, out);
        if (aret->parsed())
            return cmd_algebra_retract(retract_o, sub_points, retract_brute, retract_explain, out);
        if (ureport->parsed()) return cmd_unify(unify_o, unify_brute, unify_bound, out);
        if (cdump->parsed())
            return cmd_catalog(cat_points, cat_fork, cat_poset, cat_connected, cat_height, cat_lw,
                               cat_labeled, cat_count_only, out_dir, out);
        if (verify->parsed()) return cmd_verify(out);
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
    err << "error: no command\n";
    return 2;
}

} // namespace claw
