#pragma once

#include <stdexcept>
#include <string>

namespace riesz {

// Exit-code contract used by the CLI:
//   config / parse / precondition errors -> 2
//   verification failures                -> 3
//   resource exhaustion                  -> 4
// std::domain_error / std::range_error / std::invalid_argument map to 2.

struct config_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct verification_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct resource_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct pole_error : std::domain_error {
    using std::domain_error::domain_error;
};

}  // namespace riesz
