#ifndef CLAW_ERROR_HPP
#define CLAW_ERROR_HPP

#include <stdexcept>
#include <string>

namespace claw {

enum class Errc {
    NotQuasiorder,
    NotForkFrame,
    NotForkAlgebra,
    NotClosed,
    ZeroBound,
    TrivialAlgebra,
    NotIndecomposable,
    NotProjectiveSubalgebra,
    NotGenerated,
    NotUnifiable,
    WrongVariety,
    UnboundVariable,
    SearchBudgetExceeded,
    CapExceeded,
    ProofGap,
    Consistency,
    ParseError,
    InvalidArgument,
};

const char* errc_name(Errc c);

// Single exception type carrying a typed code; CLI maps any Error to exit 2.
struct Error : std::runtime_error {
    Errc code;
    Error(Errc c, const std::string& msg)
        : std::runtime_error(std::string(errc_name(c)) + ": " + msg), code(c) {}
};

} // namespace claw

#endif
