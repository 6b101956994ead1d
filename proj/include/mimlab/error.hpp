#pragma once

#include <stdexcept>
#include <string>

namespace mimlab
{
    class Error : public std::runtime_error
    {
    public:
        using std::runtime_error::runtime_error;
    };

    class InvalidParameter : public Error
    {
    public:
        using Error::Error;
    };

    /// A solver was asked for an instance above its configured size bound.
    class LimitExceeded : public Error
    {
    public:
        using Error::Error;
    };

    class IoFailure : public Error
    {
    public:
        using Error::Error;
    };

    class ParseError : public IoFailure
    {
    public:
        using IoFailure::IoFailure;
    };

    class NotAPermutation : public InvalidParameter
    {
    public:
        using InvalidParameter::InvalidParameter;
    };

    class InvalidDecomposition : public Error
    {
    public:
        using Error::Error;
    };

    class DegreeViolation : public InvalidParameter
    {
    public:
        using InvalidParameter::InvalidParameter;
    };
}
