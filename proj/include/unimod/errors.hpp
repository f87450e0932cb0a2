#ifndef UNIMOD_ERRORS_HPP
#define UNIMOD_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace unimod {

// Bad user input (malformed graphs, out-of-range parameters, ...): CLI exit 2.
struct InvalidInput : std::invalid_argument {
    explicit InvalidInput(const std::string& what) : std::invalid_argument(what) {}
};

// Canonicalization exceeded its search-node budget.
struct ResourceLimit : std::runtime_error {
    explicit ResourceLimit(const std::string& what) : std::runtime_error(what) {}
};

// Restriction of a measure to a component carrying zero mass.
struct NullComponent : std::runtime_error {
    explicit NullComponent(const std::string& what) : std::runtime_error(what) {}
};

// A "cannot happen" condition (e.g. inconsistent linear system for a finite graph).
struct InternalError : std::logic_error {
    explicit InternalError(const std::string& what) : std::logic_error(what) {}
};

}  // namespace unimod

#endif
