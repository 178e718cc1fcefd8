#pragma once

#include <stdexcept>
#include <string>

namespace modq {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// qseries
class ZeroSeries : public Error { using Error::Error; };
class OutOfWindow : public Error { using Error::Error; };
class InfinitePrecision : public Error { using Error::Error; };

// forms
class NormalizationNotExact : public Error { using Error::Error; };

// ringstruct
class NotModular : public Error { using Error::Error; };
class NotQuasiModular : public Error { using Error::Error; };
class InsufficientOrder : public Error { using Error::Error; };
class DepthZero : public Error { using Error::Error; };
class SingularMatrix : public Error { using Error::Error; };

// lattice
class NotPositiveDefinite : public Error { using Error::Error; };
class UnknownLattice : public Error { using Error::Error; };

// enumgeo
class BudgetExceeded : public Error {
public:
    BudgetExceeded(const std::string& what, double estimated_steps)
        : Error(what), estimated_steps_(estimated_steps) {}
    double estimated_steps() const noexcept { return estimated_steps_; }

private:
    double estimated_steps_;
};

// cli
class ParseError : public Error {
public:
    ParseError(const std::string& what, std::size_t position)
        : Error(what), position_(position) {}
    std::size_t position() const noexcept { return position_; }

private:
    std::size_t position_;
};
class UnknownName : public Error { using Error::Error; };

} // namespace modq
