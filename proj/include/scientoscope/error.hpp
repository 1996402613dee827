#pragma once

#include <stdexcept>
#include <string>

namespace scientoscope {

// Domain error: an indicator or table is undefined for the given input.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Input could not be decoded. `location` is a 1-based line (CSV) or
// element index (JSON); 0 when the failure is not tied to a row.
class ParseError : public Error {
public:
    ParseError(std::size_t location, const std::string& message)
        : Error(location == 0 ? message
                              : "line " + std::to_string(location) + ": " + message),
          location_(location) {}

    [[nodiscard]] std::size_t location() const noexcept { return location_; }

private:
    std::size_t location_;
};

}  // namespace scientoscope
