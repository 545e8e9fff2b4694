#pragma once

#include <stdexcept>
#include <string>

namespace germ {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Malformed input: bad polynomial syntax, bad germ spec, violated preconditions.
struct InputError : Error {
  using Error::Error;
};

// A configured bound was exceeded (pair queue, retry rounds).
struct ResourceLimitError : Error {
  using Error::Error;
};

// The computation detected a degenerate situation: non-isolated singularity,
// not an ICIS, non-integer aggregate total.
struct ComputationError : Error {
  using Error::Error;
};

}  // namespace germ
