#pragma once

#include <stdexcept>

namespace nestsum {

// A computation would exceed a configured size cap (triangle rows, polynomial degree).
class cap_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// An evaluation ran past its wall-clock budget.
class budget_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace nestsum
