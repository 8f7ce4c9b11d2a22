#pragma once

#include <stdexcept>
#include <string>

namespace bicanon {

// Malformed or out-of-contract input: bad moduli, lattice mismatch,
// branch data that fails a numeric validity condition.
class InvalidInput : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Inputs were individually valid but a cross-check between two independent
// computations disagreed (e.g. an eigentable that does not sum to K^2 + chi).
class InconsistentData : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace bicanon
