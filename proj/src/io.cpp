#include "claw/io.hpp"

#include <fstream>
#include <sstream>

namespace claw {

namespace {

[[noreturn]] void parse_fail(int line, const std::string& what) {
    throw Error(Errc::ParseError, "line " + std::to_string(line) + ": " + what);
}

int resolve_point(const Frame& f, const std::string& tok, int line) {
    if (!f.labels.empty())
        for (int i = 0; i < f.n; ++i)
            if (f.labels[i] == tok) return i;
    try {
        std::size_t used = 0;
        int idx = std::stoi(tok, &used);
        if (used == tok.size() && idx >= 0 && idx < f.n) return idx;
    } catch (const std::exception&) {
    }
    parse_fail(line, "unknown point '" + tok + "'");
}

} // namespace

Frame parse_frame(std::istream& in, bool close) {
    std::string line;
    int lineno = 0;
    Frame f;
    bool have_points = false;
    while (std::getline(in, line)) {
        ++lineno;
        std::istringstream ls(line);
        std::string head;
        if (!(ls >> head) || head[0] == '#') continue;
        if (head == "points:") {
            if (have_points) parse_fail(lineno, "duplicate points: line");
            std::vector<std::string> toks;
            for (std::string t; ls >> t;) toks.push_back(t);
            if (toks.empty()) parse_fail(lineno, "points: needs a count or names");
            int count = -1;
            if (toks.size() == 1) {
                try {
                    std::size_t used = 0;
                    int n = std::stoi(toks[0], &used);
                    if (used == toks[0].size()) count = n;
                } catch (const std::exception&) {
                }
            }
            if (count >= 0) {
                if (count < 1 || count > kMaxPoints)
                    parse_fail(lineno, "point count out of range");
                f = Frame(count);
            } else {
                f = Frame(static_cast<int>(toks.size()));
                f.labels = toks;
            }
            have_points = true;
        } else if (head == "rel:") {
            if (!have_points) parse_fail(lineno, "rel: before points:");
            std::string a, b, extra;
            if (!(ls >> a >> b)) parse_fail(lineno, "rel: needs two points");
            if (ls >> extra) parse_fail(lineno, "rel: takes exactly two points");
            f.add(resolve_point(f, a, lineno), resolve_point(f, b, lineno));
        } else {
            parse_fail(lineno, "unknown directive '" + head + "'");
        }
    }
    if (!have_points) parse_fail(lineno, "missing points: line");
    return close ? reflexive_transitive_closure(f) : f;
}

Frame parse_frame_text(const std::string& text, bool close) {
    std::istringstream in(text);
    return parse_frame(in, close);
}

std::string write_frame(const Frame& f) {
    std::ostringstream out;
    out << "points:";
    if (f.labels.empty()) out << " " << f.n;
    else
        for (const auto& l : f.labels) out << " " << l;
    out << "\n";
    for (int x = 0; x < f.n; ++x)
        for (int y : BitRange(f.rel[x]))
            out << "rel: " << f.point_name(x) << " " << f.point_name(y) << "\n";
    return out.str();
}

Frame load_frame(const std::string& source, bool close) {
    if (source == "@fork") return fork_frame();
    if (source == "@w") return w_frame();
    std::ifstream in(source);
    if (!in) throw Error(Errc::InvalidArgument, "cannot open '" + source + "'");
    return parse_frame(in, close);
}

Bits parse_point_set(const Frame& f, const std::string& text) {
    std::string body = text;
    if (!body.empty() && body.front() == '{') {
        if (body.back() != '}') throw Error(Errc::ParseError, "unterminated set literal");
        body = body.substr(1, body.size() - 2);
    }
    for (char& c : body)
        if (c == ',') c = ' ';
    std::istringstream ls(body);
    Bits s = 0;
    for (std::string tok; ls >> tok;) s |= bit(resolve_point(f, tok, 1));
    return s;
}

Bits parse_element(const ClosureAlgebra& a, const std::string& text) {
    return parse_point_set(a.atoms, text);
}

std::string format_element(const ClosureAlgebra& a, Bits x) { return a.element_name(x); }

namespace {

std::string quoted(const std::string& s) { return "\"" + s + "\""; }

} // namespace

std::string dot_frame(const Frame& f) {
    std::ostringstream out;
    out << "digraph frame {\n  rankdir=BT;\n  node [shape=circle];\n";
    bool quasi = is_quasiorder(f);
    for (int x = 0; x < f.n; ++x) {
        bool closed_atom = quasi && (down_set(f, bit(x)) & ~bit(x)) == 0;
        out << "  " << quoted(f.point_name(x));
        if (closed_atom) out << " [style=filled, fillcolor=black, fontcolor=white]";
        out << ";\n";
    }
    for (int x = 0; x < f.n; ++x)
        for (int y : BitRange(f.rel[x]))
            if (x != y) out << "  " << quoted(f.point_name(x)) << " -> " << quoted(f.point_name(y)) << ";\n";
    out << "}\n";
    return out.str();
}

std::string dot_retraction(const RetractionPlan& plan) {
    std::ostringstream out;
    out << "digraph retraction {\n  rankdir=BT;\n  node [shape=circle];\n";
    Bits img = 0;
    for (int p : plan.sub.points) img |= bit(p);
    for (int x = 0; x < plan.sup.n; ++x) {
        const char* color = "white";
        if (has_bit(img, x)) color = "palegreen";
        else if (has_bit(plan.set_w1, x)) color = "lightblue";
        else if (has_bit(plan.set_w2, x)) color = "khaki";
        else if (has_bit(plan.set_w3, x)) color = "salmon";
        out << "  " << quoted(plan.sup.point_name(x)) << " [style=filled, fillcolor=" << color
            << "];\n";
    }
    for (int x = 0; x < plan.sup.n; ++x)
        for (int y : BitRange(plan.sup.rel[x]))
            if (x != y)
                out << "  " << quoted(plan.sup.point_name(x)) << " -> "
                    << quoted(plan.sup.point_name(y)) << ";\n";
    for (int x = 0; x < plan.sup.n; ++x) {
        int image_sup = plan.sub.points[plan.map.map[x]];
        if (image_sup == x) continue;
        out << "  " << quoted(plan.sup.point_name(x)) << " -> "
            << quoted(plan.sup.point_name(image_sup)) << " [style=dashed, color=gray, constraint=false];\n";
    }
    out << "}\n";
    return out.str();
}

} // namespace claw
