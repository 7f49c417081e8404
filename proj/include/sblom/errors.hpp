#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace sblom {

// Domain failure carrying a stable machine-readable name. The CLI and the
// wire protocol surface name() verbatim as the "error" field, so the set of
// names is part of the external interface:
//   NotInvertible, Timeout, DuplicateUser, RegistryFull, SelfChannel,
//   ConsistencyCheckFailed, ServerNotInitialized, UnknownUser, AuthFailed,
//   PolicyDenied, TagMismatch, ReplayDetected, DirectionMismatch,
//   ModulusTooLarge, InvalidArgument, BadRequest, IoError
class Error : public std::runtime_error {
public:
    Error(std::string name, const std::string& detail)
        : std::runtime_error(detail.empty() ? name : name + ": " + detail),
          name_(std::move(name)) {}

    explicit Error(std::string name) : Error(std::move(name), "") {}

    const std::string& name() const noexcept { return name_; }

private:
    std::string name_;
};

[[noreturn]] inline void fail(std::string name, const std::string& detail = "") {
    throw Error(std::move(name), detail);
}

} // namespace sblom
