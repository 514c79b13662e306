#pragma once

#include <stdexcept>
#include <string>

namespace weakseq {

// Exit-code contract of the CLI: usage/config = 1, data = 2, invariant = 3.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct DataError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct InvariantError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace weakseq
