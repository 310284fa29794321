#pragma once

#include <stdexcept>
#include <string>

namespace cts {

// Base for every error raised by the library.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// Malformed textual input: regex, JSON, compact instance text.
class ParseError : public Error {
public:
  ParseError(const std::string& what, std::size_t position = npos)
      : Error(position == npos ? what : what + " (at offset " + std::to_string(position) + ")"),
        position_(position) {}

  static constexpr std::size_t npos = static_cast<std::size_t>(-1);
  std::size_t position() const noexcept { return position_; }

private:
  std::size_t position_;
};

// A documented precondition of an operation does not hold.
class PreconditionError : public Error {
public:
  using Error::Error;
};

// A size cap (see Caps) would be exceeded.
class CapExceeded : public Error {
public:
  CapExceeded(const std::string& cap, std::size_t limit, const std::string& detail = {})
      : Error("cap '" + cap + "' exceeded (limit " + std::to_string(limit) + ")" +
              (detail.empty() ? std::string() : ": " + detail)),
        cap_(cap) {}

  const std::string& cap() const noexcept { return cap_; }

private:
  std::string cap_;
};

}  // namespace cts
