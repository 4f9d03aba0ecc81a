#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace cbp {

enum class Status {
    Ok = 0,
    ParseError,
    InvalidArgument,
    WrongMode,
    Infeasible,
    LimitExceeded,
    ValidationFailed,
    EmptyInstance,
    IoError,
};

// Single exception type used across the library. The C layer maps Status
// onto cbp_status codes; nothing else should throw across that boundary.
class Error : public std::runtime_error {
  public:
    Error(Status status, std::string message)
        : std::runtime_error(std::move(message)), status_(status) {}

    Status status() const noexcept { return status_; }

  private:
    Status status_;
};

}  // namespace cbp
