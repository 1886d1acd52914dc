#pragma once

#include <stdexcept>
#include <string>

namespace scwf {

/// Thrown on violated preconditions (domain mismatches, bad indices,
/// inconsistent input data). Verification *failures* are never exceptions;
/// they are report entries.
struct error : std::runtime_error {
  explicit error(const std::string& what) : std::runtime_error(what) {}
};

inline void require(bool cond, const std::string& msg) {
  if (!cond) throw error(msg);
}

}  // namespace scwf
