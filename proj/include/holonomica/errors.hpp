#ifndef HOLONOMICA_ERRORS_HPP
#define HOLONOMICA_ERRORS_HPP

#include <stdexcept>
#include <string>
#include <utility>

namespace holonomica {

// Unparsable user input: bad JSON, bad rational syntax, unknown keys.
class input_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// A documented precondition failed. The code is a stable machine-readable
// tag (NOT_DIVISIBLE, UNDETERMINED, INCONSISTENT, ...).
class precondition_error : public std::runtime_error {
public:
    precondition_error(std::string code, const std::string& detail)
        : std::runtime_error(code + ": " + detail), code_(std::move(code)) {}

    const std::string& code() const noexcept { return code_; }

private:
    std::string code_;
};

} // namespace holonomica

#endif
