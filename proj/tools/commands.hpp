// commands.hpp — implementations of the CLI subcommands.

#pragma once

#include "spinbath/config.hpp"

namespace spinbath::cli {

// Exit codes: 0 success, 1 validation error, 2 numerical failure,
// 3 acceptance failure.
int run_coefficients(const RunConfig& config);
int run_decoherence_map(const RunConfig& config);
int run_theorem(const RunConfig& config);
int run_pointer(const RunConfig& config);
int run_verify(const RunConfig& config);

}  // namespace spinbath::cli
