#ifndef FIBREACH_ERRORS_HPP
#define FIBREACH_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace fibreach {

// Violation of a mathematical precondition (q below the golden mean,
// negative expansion target, zero scaling ratio, ...).
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

// Request exceeds a hard enumeration cap (2^depth blowup guards).
class ResourceError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace fibreach

#endif
