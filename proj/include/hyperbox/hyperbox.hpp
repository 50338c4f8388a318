#pragma once

// Umbrella header.

#include "core.hpp"          // IWYU pragma: export
#include "dot.hpp"           // IWYU pragma: export
#include "exponentials.hpp"  // IWYU pragma: export
#include "functors.hpp"      // IWYU pragma: export
#include "homsearch.hpp"     // IWYU pragma: export
#include "json_io.hpp"       // IWYU pragma: export
#include "products.hpp"      // IWYU pragma: export
#include "random_gen.hpp"    // IWYU pragma: export
#include "spectral.hpp"      // IWYU pragma: export
#include "verify.hpp"        // IWYU pragma: export
