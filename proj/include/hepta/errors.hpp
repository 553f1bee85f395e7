#ifndef HEPTA_ERRORS_HPP_
#define HEPTA_ERRORS_HPP_

#include <cstddef>
#include <stdexcept>
#include <string>

namespace hepta {

// Base class for every error raised by this library.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

class DivisionByZero : public Error {
public:
    explicit DivisionByZero(const std::string& what = "division by zero") : Error(what) {}
};

// Evaluation of a rational function whose denominator vanishes at 0.
class PoleAtZero : public Error {
public:
    explicit PoleAtZero(const std::string& what = "denominator vanishes at 0") : Error(what) {}
};

class DimensionTooSmall : public Error {
public:
    explicit DimensionTooSmall(const std::string& what) : Error(what) {}
};

class DimensionMismatch : public Error {
public:
    explicit DimensionMismatch(const std::string& what) : Error(what) {}
};

class LengthMismatch : public Error {
public:
    explicit LengthMismatch(const std::string& what) : Error(what) {}
};

class ReservedSlotNonzero : public Error {
public:
    explicit ReservedSlotNonzero(const std::string& what) : Error(what) {}
};

class NotHeptaStructured : public Error {
public:
    explicit NotHeptaStructured(const std::string& what) : Error(what) {}
};

class SingularMatrix : public Error {
public:
    explicit SingularMatrix(const std::string& what = "matrix is singular") : Error(what) {}
};

// Raised by float-mode factorization; exact mode never breaks down.
class PivotBreakdown : public Error {
public:
    PivotBreakdown(std::size_t index, const std::string& what)
        : Error(what), index_(index) {}
    std::size_t index() const { return index_; }

private:
    std::size_t index_;
};

class ParseError : public Error {
public:
    explicit ParseError(const std::string& what) : Error(what) {}
};

class InvalidArgument : public Error {
public:
    explicit InvalidArgument(const std::string& what) : Error(what) {}
};

class GenerationFailed : public Error {
public:
    GenerationFailed(std::size_t achieved, const std::string& what)
        : Error(what), achieved_(achieved) {}
    std::size_t achieved() const { return achieved_; }

private:
    std::size_t achieved_;
};

}  // namespace hepta

#endif  // HEPTA_ERRORS_HPP_
