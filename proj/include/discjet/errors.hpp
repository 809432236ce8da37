#ifndef DISCJET_ERRORS_HPP
#define DISCJET_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace discjet
{

// Base class for everything the library throws on purpose.
class error : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

// A mathematical precondition does not hold (non-unit, non-nilpotent, ...).
// The message names the violated invariant.
class precondition_error : public error
{
public:
    using error::error;
};

// Operands live in different rings, dimensions or truncation orders.
class shape_mismatch : public precondition_error
{
public:
    using precondition_error::precondition_error;
};

// Malformed serialized input.
class schema_error : public error
{
public:
    using error::error;
};

} // namespace discjet

#endif
