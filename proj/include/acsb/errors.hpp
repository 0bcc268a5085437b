#ifndef ACSB_ERRORS_HPP
#define ACSB_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace acsb {

// Thrown when a request exceeds a documented resource cap (e.g. the
// partition-enumeration weight limit) rather than being mathematically
// invalid.
struct resource_limit_error : std::runtime_error {
    explicit resource_limit_error(const std::string& what) : std::runtime_error(what) {}
};

} // namespace acsb

#endif
