#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "pappus/report.hpp"
#include "pappus/scene.hpp"

namespace pappus::cli {

enum ExitCode : int { kPass = 0, kVerificationFailed = 1, kInputError = 2 };

/// Entry point of the `pappus` tool; args exclude the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Theorem selectors understood by `verify --theorem`.
const std::vector<std::string>& theorem_names();

/// Runs one theorem suite on a canonical scene.
TheoremEntry verify_theorem(const std::string& name, const PappusScene& scene);

}  // namespace pappus::cli
