#pragma once

#include <iosfwd>

#include "coxkit/parallel.hpp"
#include "coxkit/scenarios.hpp"

namespace coxkit {

// Exact-input literal parsers behind the CLI flags, exposed for testing.
// All three throw std::invalid_argument with a human-readable reason.

// One root literal: a sum of terms, each an optional sign, an optional
// rational coefficient (7, 3/2), an optional r2 or r3 factor (the field
// values 2cos(pi/4) and 2cos(pi/6); rejected when the system's field lacks
// them), and a generator name, with '*' optionally between the factors.
// Examples: "a + b", "a + r2 b", "1/2*a - r3*c".
RootVector parse_root_literal(const SystemPtr& sys, const std::string& text);

// ';'-separated root literals.
std::vector<RootVector> parse_root_list(const SystemPtr& sys, const std::string& text);

// Element literal: generator names separated by whitespace or '*'; an empty
// string or "e" is the identity.
Element parse_element_literal(const SystemPtr& sys, const std::string& text);

// Generator subset: names separated by commas or whitespace; indices are
// returned sorted without duplicates.
std::vector<int> parse_generator_subset(const SystemPtr& sys, const std::string& text);

// Command-line entry point (args excludes the program name). Writes reports
// to out and problems to err. Exit code 0 for success (including passing
// verifications), 1 when a verification fails or a computation cannot be
// completed, 2 for usage, flag, and input parse errors.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace coxkit
