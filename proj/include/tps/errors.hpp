#ifndef TPS_ERRORS_HPP
#define TPS_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace tps {

// Bad user input: malformed files, invalid specs, out-of-range queries.
class input_error : public std::runtime_error {
public:
    explicit input_error(const std::string& what) : std::runtime_error(what) {}
};

// A structural claim of the theory failed at runtime. This is never a
// user error: it means the implementation (or the input pipeline that
// was supposed to validate) is broken.
class structural_violation : public std::logic_error {
public:
    explicit structural_violation(const std::string& what) : std::logic_error(what) {}
};

// Configured resource cap exceeded (subset-sum width, stratification size).
class resource_limit : public std::runtime_error {
public:
    explicit resource_limit(const std::string& what) : std::runtime_error(what) {}
};

} // namespace tps

#endif
