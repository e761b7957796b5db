#pragma once

#include "hpcc/graph.hpp"

namespace hpcc::fixtures {

// left=[a], right=[b], boundary only: a single face with one vertex per side.
OuterplanarStDigraph weak_rhombus();
// weak_rhombus plus the median (s,t).
OuterplanarStDigraph strong_rhombus();
// Two strong rhombi stacked on the shared vertex m: left=[a,m,c], right=[b,d],
// chords (b,m), (m,d) and medians (s,m), (m,t).
OuterplanarStDigraph two_strong_rhombi();
// left=[l1,l2], right=[r1], median (s,t) and chord (l1,t).
OuterplanarStDigraph sp1();
// left=[a], right=[], edges (s,a), (a,t), (s,t).
OuterplanarStDigraph single_path();

}  // namespace hpcc::fixtures
