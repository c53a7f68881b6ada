#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace caydeg {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

// All recoverable failures are structured: a stable machine-readable code plus
// a human message.  The CLI maps codes to exit statuses (validation -> 2,
// cap/budget -> 3).
enum class errc {
  validation,   // bad input, violated precondition
  cap_exceeded, // size/iteration cap hit (e.g. spectral path unavailable)
  internal,     // broken invariant; always a bug
};

class error : public std::runtime_error {
public:
  error(errc code, const std::string& msg) : std::runtime_error(msg), code_(code) {}
  errc code() const { return code_; }

private:
  errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& msg) { throw error(code, msg); }

inline void require(bool ok, const std::string& msg, errc code = errc::validation) {
  if (!ok) fail(code, msg);
}

// Internal consistency checks (cross-path agreement and the like).  These are
// always on: a failure means the build is wrong, not that the input is bad.
inline void check_internal(bool ok, const std::string& msg) {
  if (!ok) fail(errc::internal, "internal check failed: " + msg);
}

} // namespace caydeg
