#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "bers/config.hpp"
#include "bers/report.hpp"

namespace bers::checks {

// Verification suites behind the CLI subcommands. Each returns one row per
// check and drops its diagnostic artifacts (CSV or JSON samples) into out_dir,
// which must already exist. All randomness is drawn from generators seeded by
// derive_seed, so a fixed config and seed reproduce the output byte for byte.

std::vector<CheckRow> run_algebra_selftest(const RunConfig& cfg, const std::string& out_dir);
std::vector<CheckRow> run_formal_powers(const RunConfig& cfg, const std::string& out_dir);
std::vector<CheckRow> run_maxwell_verify(const RunConfig& cfg, const std::string& out_dir);
std::vector<CheckRow> run_forcefree_verify(const RunConfig& cfg, const std::string& out_dir);
std::vector<CheckRow> run_dirac_verify(const RunConfig& cfg, const std::string& out_dir);

// Per-check generator seed: FNV-1a of the check name mixed into the base seed,
// so adding a check never shifts the draws of its neighbours.
std::uint64_t derive_seed(std::uint64_t base, std::string_view check_name);

}  // namespace bers::checks
