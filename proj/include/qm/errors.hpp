#pragma once

#include <stdexcept>
#include <string>

namespace qm {

/// Thrown when a request exceeds a configured size cap (distribution order,
/// brute-force enumeration range). Distinct from std::invalid_argument so
/// callers can map it to a dedicated exit code.
class resource_limit_error : public std::runtime_error {
public:
    explicit resource_limit_error(const std::string& what) : std::runtime_error(what) {}
};

} // namespace qm
