#include "hpcc/fixtures.hpp"

namespace hpcc::fixtures {

OuterplanarStDigraph weak_rhombus() {
  return build_graph({"a"}, {"b"}, {{"s", "a"}, {"a", "t"}, {"s", "b"}, {"b", "t"}});
}

OuterplanarStDigraph strong_rhombus() {
  return build_graph({"a"}, {"b"},
                     {{"s", "a"}, {"a", "t"}, {"s", "b"}, {"b", "t"}, {"s", "t"}});
}

OuterplanarStDigraph two_strong_rhombi() {
  return build_graph({"a", "m", "c"}, {"b", "d"},
                     {{"s", "a"}, {"a", "m"}, {"m", "c"}, {"c", "t"}, {"s", "b"}, {"b", "d"},
                      {"d", "t"}, {"b", "m"}, {"m", "d"}, {"s", "m"}, {"m", "t"}});
}

OuterplanarStDigraph sp1() {
  return build_graph({"l1", "l2"}, {"r1"},
                     {{"s", "l1"}, {"l1", "l2"}, {"l2", "t"}, {"s", "r1"}, {"r1", "t"},
                      {"s", "t"}, {"l1", "t"}});
}

OuterplanarStDigraph single_path() {
  return build_graph({"a"}, {}, {{"s", "a"}, {"a", "t"}, {"s", "t"}});
}

}  // namespace hpcc::fixtures
