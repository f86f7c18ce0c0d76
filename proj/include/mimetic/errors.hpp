#pragma once

#include <stdexcept>
#include <string>

namespace mimetic {

/// Thrown when a time step produces a non-finite value.  Carries the step
/// index at which the scheme blew up.
class instability_error : public std::runtime_error {
public:
    instability_error(const std::string& what, long step)
        : std::runtime_error(what + " (step " + std::to_string(step) + ")"), step_(step) {}

    long step() const noexcept { return step_; }

private:
    long step_;
};

}  // namespace mimetic
