#pragma once

#include <stdexcept>
#include <string>

namespace vecdil {

// Failure categories. The CLI maps these onto process exit codes, so every
// error thrown by the library carries one.
enum class errc {
    invalid_argument,
    singular_matrix,
    degenerate_row,
    rank_deficient,
    dimension_mismatch,
    index_range,
    chamber_violation,
    insufficient_samples,
    fit_failure,
    parse_error,
    missing_dependency,
    internal,
};

class Error : public std::runtime_error {
  public:
    Error(errc kind, const std::string& message)
        : std::runtime_error(message), kind_(kind) {}

    errc kind() const noexcept { return kind_; }

  private:
    errc kind_;
};

[[noreturn]] inline void fail(errc kind, const std::string& message) {
    throw Error(kind, message);
}

} // namespace vecdil
