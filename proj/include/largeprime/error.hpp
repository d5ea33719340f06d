#pragma once

#include <stdexcept>
#include <string>

namespace largeprime {

// Precondition violated by the caller (bad modulus, even candidate, d < 2, ...).
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

// The request is well formed but outside what an exact routine will attempt
// (oracle bound, enumeration caps). Never a wrong answer.
class RefusalError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace largeprime
