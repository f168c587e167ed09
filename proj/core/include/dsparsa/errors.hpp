#pragma once

#include <stdexcept>

namespace dsparsa {

// A value outside its documented domain (theta <= 0, beta outside (0.5, 1], ...).
struct ParameterError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// A structurally valid request this build cannot serve, e.g. an unsupported
// loss/constraint/surrogate combination or a metric applied to the wrong
// constraint set.
struct ConfigurationError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Config-file syntax or schema violation; the message carries file/line or
// key context.
struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace dsparsa
