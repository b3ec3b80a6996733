#pragma once

// Umbrella header: the whole library except the CLI front end.

#include "foldlift/qring.hpp"      // IWYU pragma: export
#include "foldlift/matrix.hpp"     // IWYU pragma: export
#include "foldlift/catalog.hpp"    // IWYU pragma: export
#include "foldlift/rootsys.hpp"    // IWYU pragma: export
#include "foldlift/coxeter.hpp"    // IWYU pragma: export
#include "foldlift/poly.hpp"       // IWYU pragma: export
#include "foldlift/moment_graph.hpp"  // IWYU pragma: export
#include "foldlift/schubert.hpp"   // IWYU pragma: export
#include "foldlift/folding.hpp"    // IWYU pragma: export
#include "foldlift/lifting.hpp"    // IWYU pragma: export
#include "foldlift/tables.hpp"     // IWYU pragma: export
