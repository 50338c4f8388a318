#pragma once

// Shared fixture objects. The diamond (a four-cycle with one chord, all
// incidences simple) and the doubled-incidence object (a 3-edge plus an
// edge carrying a parallel incidence pair) exercise most of the matrix
// and exponential machinery.

#include "hyperbox/core.hpp"

namespace fixtures {

inline hyperbox::IncidenceHypergraph diamond_r() {
    return hyperbox::IncidenceHypergraph::make(
        {"v0", "v1", "v2", "v3"}, {"e0", "e1", "e2", "e3", "e4"},
        {"i0", "i1", "i2", "i3", "i4", "i5", "i6", "i7", "i8", "i9"},
        {{"i0", "v0"},
         {"i1", "v1"},
         {"i2", "v1"},
         {"i3", "v2"},
         {"i4", "v2"},
         {"i5", "v3"},
         {"i6", "v0"},
         {"i7", "v3"},
         {"i8", "v0"},
         {"i9", "v2"}},
        {{"i0", "e0"},
         {"i1", "e0"},
         {"i2", "e1"},
         {"i3", "e1"},
         {"i4", "e2"},
         {"i5", "e2"},
         {"i6", "e3"},
         {"i7", "e3"},
         {"i8", "e4"},
         {"i9", "e4"}});
}

inline hyperbox::IncidenceHypergraph doubled_r() {
    return hyperbox::IncidenceHypergraph::make(
        {"v0", "v1", "v2"}, {"e0", "e1"}, {"i0", "i1", "i2", "i3", "i4", "i5"},
        {{"i0", "v0"}, {"i1", "v0"}, {"i2", "v0"}, {"i3", "v1"}, {"i4", "v1"}, {"i5", "v2"}},
        {{"i0", "e0"}, {"i1", "e1"}, {"i2", "e1"}, {"i3", "e0"}, {"i4", "e1"}, {"i5", "e0"}});
}

}  // namespace fixtures
