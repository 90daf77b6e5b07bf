#ifndef CLAW_IO_HPP
#define CLAW_IO_HPP

#include <iosfwd>
#include <string>

#include "claw/algebra.hpp"
#include "claw/projective.hpp"

namespace claw {

/// Frame file grammar:
///   line 1:  points: <count>        or   points: name1 name2 ...
///   then:    rel: a b               one ordered pair per line
///   '#' starts a comment line; blank lines are ignored.
/// Point tokens are labels when declared, indices otherwise.
Frame parse_frame(std::istream& in, bool close = false); // ParseError
Frame parse_frame_text(const std::string& text, bool close = false);
std::string write_frame(const Frame& f); // round-trips exactly

/// "@fork" and "@w" resolve to the built-in frames; anything else is a path.
Frame load_frame(const std::string& source, bool close = false);

/// Atom-set literal "{u,v}"; names resolve as in frame files.
Bits parse_element(const ClosureAlgebra& a, const std::string& text); // ParseError
std::string format_element(const ClosureAlgebra& a, Bits x);
Bits parse_point_set(const Frame& f, const std::string& text);

/// DOT renderings; closed atoms (minimal points) are drawn filled.
std::string dot_frame(const Frame& f);
std::string dot_retraction(const RetractionPlan& plan);

} // namespace claw

#endif
