#pragma once

#include <stdexcept>
#include <string>

namespace invstat {

// I/O and input-format failures (missing file, malformed CSV/JSON row).
// Argument and feasibility failures use std::invalid_argument.
class io_error : public std::runtime_error {
public:
    explicit io_error(const std::string& what) : std::runtime_error(what) {}
};

} // namespace invstat
