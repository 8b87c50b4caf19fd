#pragma once
// Small shared utilities.

#include <cstdint>
#include <stdexcept>
#include <string>

namespace nilhecke {

[[noreturn]] inline void nh_fail(const std::string& msg) {
  throw std::runtime_error(msg);
}

inline void nh_check(bool cond, const std::string& msg) {
  if (!cond) nh_fail(msg);
}

}  // namespace nilhecke
