#pragma once

#include <stdexcept>
#include <string>

namespace texcoh {

// File and format problems: unreadable input, unsupported encoding,
// payload shorter than the declared dimensions.
class IoError : public std::runtime_error {
public:
    explicit IoError(const std::string& what) : std::runtime_error(what) {}
};

// The frame cannot support the requested search radius: the interior
// rectangle left after removing the margin would be empty.
class FrameTooSmallError : public std::invalid_argument {
public:
    explicit FrameTooSmallError(const std::string& what) : std::invalid_argument(what) {}
};

}  // namespace texcoh
