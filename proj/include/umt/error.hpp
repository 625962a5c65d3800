#pragma once

#include <stdexcept>
#include <string>

namespace umt {

// Precondition violations and structural errors (unknown node id, brute-force
// cap exceeded, non-tree-shaped digraph, malformed bijection, ...).
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace umt
