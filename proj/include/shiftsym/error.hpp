#pragma once

#include <stdexcept>
#include <string>

namespace shiftsym {

// Raised for precondition violations and refused inputs.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace shiftsym
