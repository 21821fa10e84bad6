#pragma once

#include <stdexcept>
#include <string>

namespace fqt {

// Budget / memory guards (enumeration too large, phi over bound, ...).
class resource_error : public std::runtime_error {
 public:
  explicit resource_error(const std::string& what) : std::runtime_error(what) {}
};

// A structural invariant failed (sieve/Moebius mismatch, GRH band violation,
// dual-path disagreement).  These indicate an implementation bug, not bad input.
class internal_error : public std::logic_error {
 public:
  explicit internal_error(const std::string& what) : std::logic_error(what) {}
};

}  // namespace fqt
