#pragma once

#include <stdexcept>
#include <string>

namespace udc {

enum class errc {
    parse,
    range,
    duplicate,
    guard_exceeded,
    empty_constituent,
    balanced_seed,
    invalid_argument,
    unknown_name,
    certification_failure,
    unsupported,
};

// Single exception type; the category survives the C API boundary as a status code.
class Error : public std::runtime_error {
  public:
    Error(errc code, std::string message) : std::runtime_error(std::move(message)), code_(code) {}
    errc code() const { return code_; }

  private:
    errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& message) {
    throw Error(code, message);
}

} // namespace udc
