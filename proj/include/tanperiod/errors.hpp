#ifndef TANPERIOD_ERRORS_HPP
#define TANPERIOD_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace tanperiod
{

class Error : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

// Malformed field document or rational literal.
class ParseError : public Error
{
public:
    using Error::Error;
};

// Violated algebraic precondition (non-invertible series, bad composition, bad Bell arguments).
class SeriesError : public Error
{
public:
    using Error::Error;
};

// A coefficient was requested beyond the order through which it is trustworthy.
class TruncationError : public Error
{
public:
    using Error::Error;
};

// The field fails one of the monodromy conditions at the origin.
class ClassificationError : public Error
{
public:
    using Error::Error;
};

// Divisibility or denominator failure inside the half-return recursions.
class RecursionError : public Error
{
public:
    using Error::Error;
};

class NotCenterError : public Error
{
public:
    NotCenterError(const std::string &what, int first_mismatch_index)
        : Error(what), m_first_mismatch_index(first_mismatch_index)
    {
    }

    int first_mismatch_index() const noexcept
    {
        return m_first_mismatch_index;
    }

private:
    int m_first_mismatch_index;
};

// Input file could not be opened or read.
class IoError : public Error
{
public:
    using Error::Error;
};

class OracleError : public Error
{
public:
    using Error::Error;
};

} // namespace tanperiod

#endif
