#pragma once

#include <stdexcept>
#include <string>

namespace zfc {

// Malformed input or a violated precondition (bad vertex id, wrong rule for a
// graph, shape mismatch). The CLI maps this to exit code 2.
class InputError : public std::invalid_argument {
public:
    explicit InputError(const std::string& what) : std::invalid_argument(what) {}
};

// Two independent computations of the same quantity disagreed. The CLI maps
// this to exit code 3.
class ConsistencyError : public std::logic_error {
public:
    explicit ConsistencyError(const std::string& what) : std::logic_error(what) {}
};

}  // namespace zfc
