#pragma once

#include <stdexcept>
#include <string>

namespace growth {

struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A local rule, bijection or constructor was handed input outside its domain.
struct precondition_error : error {
    using error::error;
};

struct class_mismatch : error {
    using error::error;
};

// Exhaustive search or enumeration would exceed the configured budget.
struct budget_exceeded : error {
    using error::error;
};

struct parse_error : error {
    using error::error;
};

namespace detail {
    inline void require(bool cond, const char* what) {
        if (!cond)
            throw precondition_error(what);
    }
    inline void require(bool cond, const std::string& what) {
        if (!cond)
            throw precondition_error(what);
    }
}

} // namespace growth
