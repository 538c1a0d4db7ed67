#pragma once

#include <stdexcept>
#include <string>

namespace coalrank {

// Invalid value or operation on otherwise well-formed data.
struct domain_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Input exceeds a hard size cap (universe size for Banzhaf, class count
// for the swap oracle, split enumeration size).
struct resource_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Malformed input text; the message carries a position when one is known.
struct parse_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace coalrank
