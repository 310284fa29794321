#pragma once

#include <cstddef>
#include <string>
#include <string_view>

namespace cts {

// Size limits shared by the exponential parts of the library. The CLI reads
// overrides from CTS_CAPS, e.g. CTS_CAPS="brute_vertices=30,dp_states=1000000".
struct Caps {
  std::size_t shuffle_length = 14;       // total length for materialized shuffles
  std::size_t monoid_states = 12;        // |Q| for transition monoids
  std::size_t monoid_elements = 100000;  // closure size
  std::size_t topo_sorts_vertices = 12;  // explicit topological sort enumeration
  std::size_t brute_vertices = 24;       // down-set search on general DAGs
  std::size_t dp_states = 20000000;      // memo entries of any frontier search
  std::size_t dispatch_chains = 4;       // shuffle instances routed to the width DP
  std::size_t enumeration = 2000000;     // explicit enumeration budget (district solver)
  std::size_t group_order = 64;          // |H| for group machinery

  // Parses "key=value,key=value". Unknown keys or bad numbers raise ParseError.
  static Caps parse(std::string_view text);
  static Caps parse(std::string_view text, Caps base);
  // Defaults overridden by the CTS_CAPS environment variable when set.
  static Caps from_env();
};

}  // namespace cts
