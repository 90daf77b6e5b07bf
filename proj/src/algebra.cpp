#include "claw/algebra.hpp"

#include <algorithm>

namespace claw {

Bits ClosureAlgebra::closure(Bits x) const {
    Bits r = 0;
    for (int a : BitRange(x)) r |= atom_closure[a];
    return r;
}

Bits ClosureAlgebra::interior(Bits x) const { return one() & ~closure(one() & ~x); }

std::string ClosureAlgebra::element_name(Bits x) const {
    std::string s = "{";
    bool first = true;
    for (int a : BitRange(x)) {
        if (!first) s += ",";
        s += atoms.point_name(a);
        first = false;
    }
    return s + "}";
}

ClosureAlgebra cm(const Frame& f) {
    if (f.n > 0 && !is_quasiorder(f))
        throw Error(Errc::NotQuasiorder, "cm requires a quasiorder");
    ClosureAlgebra a;
    a.atoms = f;
    a.atom_closure.resize(f.n);
    for (int at = 0; at < f.n; ++at) a.atom_closure[at] = down_set(f, bit(at));
    return a;
}

Frame cf(const ClosureAlgebra& a) {
    Frame f(a.atoms.n);
    f.labels = a.atoms.labels;
    for (int x = 0; x < f.n; ++x)
        for (int y = 0; y < f.n; ++y)
            if (has_bit(a.atom_closure[y], x)) f.add(x, y); // x <= f(y)
    return f;
}

ClosureAlgebra two_element_algebra() {
    Frame f(1);
    f.add(0, 0);
    return cm(f);
}

ClosureAlgebra trivial_algebra() { return cm(Frame(0)); }
ClosureAlgebra fork_algebra() { return cm(fork_frame()); }
ClosureAlgebra w_algebra() { return cm(w_frame()); }

std::vector<Bits> closed_elements(const ClosureAlgebra& a) {
    if (a.atom_count() > 22)
        throw Error(Errc::SearchBudgetExceeded, "element scan too large");
    std::vector<Bits> out;
    for (Bits x = 0; x < a.element_count(); ++x)
        if (a.is_closed(x)) out.push_back(x);
    return out;
}

bool algebras_equal(const ClosureAlgebra& a, const ClosureAlgebra& b) {
    return frames_equal(a.atoms, b.atoms);
}

Bits AlgHom::apply(Bits x) const {
    Bits r = 0;
    for (int t = 0; t < target.atom_count(); ++t)
        if (has_bit(x, dual.map[t])) r |= bit(t);
    return r;
}

bool AlgHom::surjective() const {
    return is_injective(dual) && is_up_closed(source.atoms, dual_image());
}

bool AlgHom::injective() const { return is_surjective(dual); }

bool verify_hom(const AlgHom& h) {
    if (h.dual.source.n != h.target.atoms.n || h.dual.target.n != h.source.atoms.n)
        return false;
    if (!frames_equal(h.dual.source, h.target.atoms) || !frames_equal(h.dual.target, h.source.atoms))
        return false;
    if (!is_bounded_morphism(h.dual)) return false;
    // Boolean structure commutes with preimages; check the modal operator on
    // the atom generators.
    for (int a = 0; a < h.source.atom_count(); ++a)
        if (h.apply(h.source.atom_closure[a]) != h.target.closure(h.apply(bit(a))))
            return false;
    return true;
}

AlgHom identity_hom(const ClosureAlgebra& a) {
    std::vector<int> id(a.atom_count());
    for (int i = 0; i < a.atom_count(); ++i) id[i] = i;
    return AlgHom{a, a, Morphism{a.atoms, a.atoms, id}};
}

AlgHom compose(const AlgHom& g, const AlgHom& f) {
    if (!algebras_equal(g.source, f.target))
        throw Error(Errc::InvalidArgument, "compose: middle algebras differ");
    std::vector<int> d(g.target.atom_count());
    for (int t = 0; t < g.target.atom_count(); ++t) d[t] = f.dual.map[g.dual.map[t]];
    return AlgHom{f.source, g.target, Morphism{g.target.atoms, f.source.atoms, d}};
}

std::vector<AlgHom> hom_search(const ClosureAlgebra& a, const ClosureAlgebra& b, HomKind kind) {
    std::vector<AlgHom> out;
    const Frame& from = b.atoms; // dual maps cf(b) -> cf(a)
    const Frame& to = a.atoms;
    std::vector<int> map(from.n, -1);
    Bits used = 0;

    auto full_check = [&]() {
        Morphism d{from, to, map};
        if (!is_bounded_morphism(d)) return;
        if (kind == HomKind::Surjective && !is_up_closed(to, image_of(d))) return;
        if (kind == HomKind::Injective && !is_surjective(d)) return;
        out.push_back(AlgHom{a, b, std::move(d)});
    };

    auto rec = [&](auto&& self, int t) -> void {
        if (t == from.n) { full_check(); return; }
        for (int v = 0; v < to.n; ++v) {
            if (kind == HomKind::Surjective && has_bit(used, v)) continue;
            bool ok = true;
            for (int s = 0; s < t && ok; ++s) {
                if (from.has(s, t) && !to.has(map[s], v)) ok = false;
                if (from.has(t, s) && !to.has(v, map[s])) ok = false;
            }
            if (from.has(t, t) && !to.has(v, v)) ok = false;
            if (!ok) continue;
            map[t] = v;
            used |= bit(v);
            self(self, t + 1);
            used &= ~bit(v);
            map[t] = -1;
        }
    };
    if (from.n == 0) {
        full_check(); // unique hom into the trivial algebra
        return out;
    }
    rec(rec, 0);
    return out;
}

ProductResult product(const ClosureAlgebra& a, const ClosureAlgebra& b) {
    if (a.atom_count() + b.atom_count() > kMaxPoints)
        throw Error(Errc::CapExceeded, "product too large");
    Frame f(a.atom_count() + b.atom_count());
    bool labeled = !a.atoms.labels.empty() && !b.atoms.labels.empty();
    if (labeled) {
        for (const auto& l : a.atoms.labels) f.labels.push_back(l + ".1");
        for (const auto& l : b.atoms.labels) f.labels.push_back(l + ".2");
    }
    for (int x = 0; x < a.atom_count(); ++x) f.rel[x] = a.atoms.rel[x];
    for (int x = 0; x < b.atom_count(); ++x)
        f.rel[a.atom_count() + x] = b.atoms.rel[x] << a.atom_count();
    ProductResult r{cm(f), full_mask(a.atom_count()),
                    full_mask(b.atom_count()) << a.atom_count()};
    return r;
}

RelativeResult relative_algebra(const ClosureAlgebra& a, Bits b) {
    if (b == 0) throw Error(Errc::ZeroBound, "relative algebra of 0");
    if (!a.is_closed(b))
        throw Error(Errc::NotClosed, "relative algebra requires a closed bound");
    Subframe sub = subframe(a.atoms, b);
    RelativeResult r{cm(sub.frame), sub.points, false};
    // x -> b*x is a Boolean hom onto <=b always; the closure operator
    // commutes with it exactly when b is clopen.
    r.canonical_map_is_modal_hom = a.is_clopen(b);
    if (a.atom_count() <= 16) {
        bool modal = true;
        for (Bits x = 0; x < a.element_count() && modal; ++x)
            modal = (a.closure(x) & b) == a.closure(x & b);
        if (modal != r.canonical_map_is_modal_hom)
            throw Error(Errc::Consistency, "relative map modality mismatch");
    }
    return r;
}

QuotientResult quotient(const ClosureAlgebra& a, ClosedIdeal k) {
    if (!a.is_closed(k.generator))
        throw Error(Errc::NotClosed, "ideal generator is not closed");
    Bits rest = a.one() & ~k.generator;
    Subframe sub = subframe(a.atoms, rest);
    QuotientResult r{cm(sub.frame), {}};
    r.projection = AlgHom{a, r.algebra, inclusion_morphism(sub, a.atoms)};
    if (!r.projection.surjective() || (rest != 0 && !verify_hom(r.projection)))
        throw Error(Errc::Consistency, "quotient projection failed verification");
    return r;
}

bool is_directly_indecomposable(const ClosureAlgebra& a) {
    if (a.is_trivial())
        throw Error(Errc::TrivialAlgebra, "indecomposability of the trivial algebra");
    // Only clopens are 0 and 1 <=> the atom frame is connected.
    return is_connected(a.atoms);
}

std::optional<AlgHom> find_isomorphism(const ClosureAlgebra& a, const ClosureAlgebra& b) {
    auto perm = find_frame_isomorphism(a.atoms, b.atoms);
    if (!perm) return std::nullopt;
    // dual: cf(b) -> cf(a) is the inverse point map
    std::vector<int> inv(b.atom_count());
    for (int x = 0; x < a.atom_count(); ++x) inv[(*perm)[x]] = x;
    AlgHom h{a, b, Morphism{b.atoms, a.atoms, inv}};
    if (a.atom_count() > 0 && !verify_hom(h))
        throw Error(Errc::Consistency, "isomorphism failed verification");
    return h;
}

} // namespace claw
