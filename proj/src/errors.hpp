#ifndef OSCBASIS_ERRORS_HPP
#define OSCBASIS_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace osc {

// Problems with the input data (syntax, gluing consistency, orientability).
class InputError : public std::runtime_error {
public:
    explicit InputError(const std::string& what) : std::runtime_error(what) {}
};

// Violations of invariants the construction guarantees; reaching one of these
// on validated input is a bug.
class InternalError : public std::logic_error {
public:
    explicit InternalError(const std::string& what) : std::logic_error(what) {}
};

} // namespace osc

#endif
