#pragma once

#include <vector>

#include "symalg/young.hpp"

namespace symalg {

/// Bundled reference lists of the (2,1^{r-1}) tableaux whose idempotents
/// reproduce resp. annihilate h_a, for r = 2, 3, 4. These are the ground
/// truth the classify scans are checked against (sizes 2/2, 6/12, 24/72).
struct ReferenceTables {
  std::vector<Tableau> reproducing;
  std::vector<Tableau> annihilating;
};

/// Throws std::invalid_argument for r outside {2, 3, 4}.
const ReferenceTables& reference_tables(int r);

}  // namespace symalg
