#pragma once

#include <stdexcept>
#include <string>

namespace i2il {

/// Malformed, truncated or otherwise undecodable bitstream.
class DecodeError : public std::runtime_error {
public:
  explicit DecodeError(const std::string& what) : std::runtime_error("decode error: " + what) {}
};

/// Bad user input: unreadable or unsupported image files, out-of-range parameters.
class InputError : public std::runtime_error {
public:
  explicit InputError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace i2il
