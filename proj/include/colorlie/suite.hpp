#pragma once

#include "colorlie/report.hpp"

namespace colorlie {

/// Seeded randomized property battery over the module invariants. The seed is
/// echoed in the report and fully determines the run.
Report run_suite(uint64_t seed, size_t max_dim);

} // namespace colorlie
