#ifndef STOKESCLUSTER_CHECKS_HPP
#define STOKESCLUSTER_CHECKS_HPP

#include <string>

#include "json.hpp"

#include "stokescluster/report.hpp"

namespace sc {

// Runs one named verification with JSON parameters and returns its report.
// Check names match the CLI subcommands: monodromy, form, flip, fn-check,
// ideal-check, mutation-walk, sln-triple, ugaglia, triangulation.
// Throws UsageError on an unknown name or invalid parameters; computational
// failures become failing report items instead. STOKES_MAX_K caps the
// symbolic regime (larger K switch equality checks to 50 seeded sample
// points); STOKES_TIMING=1 fills elapsed_ms, otherwise it stays 0 so that
// fixed inputs give byte-identical reports.
Report run_check(const std::string& check, const nlohmann::ordered_json& params);

} // namespace sc

#endif
