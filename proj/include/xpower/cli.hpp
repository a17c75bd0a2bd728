#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace xpower {

// Entry point of the eigbench command line (args exclude the program name).
// Subcommands:
//   run    — solve one problem with the selected method(s), print one summary
//            line per method, optionally write per-method trace CSVs.
//   bench  — average iteration counts over seeded random starts; emits
//            `method,mean_iters,n_nonconverged,n_trials` CSV.
// Returns the process exit code: 0 success (run: all methods converged),
// 2 when a run left a method unconverged, 1 on usage or I/O errors.
int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

} // namespace xpower
