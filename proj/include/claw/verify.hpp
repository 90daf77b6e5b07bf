#ifndef CLAW_VERIFY_HPP
#define CLAW_VERIFY_HPP

#include <string>
#include <vector>

namespace claw {

/// One theorem-level check of the built-in verification suite.
struct CriterionResult {
    int id = 0;
    std::string title;
    bool pass = false;
    std::string detail;
};

/// Runs the whole suite (deterministic, fixed seeds); every entry must pass.
std::vector<CriterionResult> run_paper_verification();

} // namespace claw

#endif
