#pragma once

#include <stdexcept>
#include <string>

namespace sqdist {

class NotSquareError : public std::invalid_argument {
public:
    explicit NotSquareError(const std::string& what = "matrix is not square")
        : std::invalid_argument(what) {}
};

class NotSymmetricError : public std::invalid_argument {
public:
    explicit NotSymmetricError(const std::string& what = "matrix is not symmetric")
        : std::invalid_argument(what) {}
};

class OrderTooSmallError : public std::invalid_argument {
public:
    explicit OrderTooSmallError(const std::string& what = "matrix order too small")
        : std::invalid_argument(what) {}
};

class SingularError : public std::domain_error {
public:
    explicit SingularError(const std::string& what = "matrix is singular")
        : std::domain_error(what) {}
};

class NotDivisibleError : public std::domain_error {
public:
    explicit NotDivisibleError(const std::string& what = "polynomial division leaves a remainder")
        : std::domain_error(what) {}
};

class DivisionByZeroPolyError : public std::domain_error {
public:
    explicit DivisionByZeroPolyError(const std::string& what = "division by zero polynomial")
        : std::domain_error(what) {}
};

class DisconnectedGraphError : public std::domain_error {
public:
    explicit DisconnectedGraphError(const std::string& what = "graph is disconnected")
        : std::domain_error(what) {}
};

class ShapeParseError : public std::invalid_argument {
public:
    explicit ShapeParseError(const std::string& what) : std::invalid_argument(what) {}
};

class CofactorZeroError : public std::domain_error {
public:
    explicit CofactorZeroError(const std::string& what = "cofactor sum is zero (shape S(1,1))")
        : std::domain_error(what) {}
};

class BlockCountTooSmallError : public std::domain_error {
public:
    explicit BlockCountTooSmallError(const std::string& what = "operation requires at least 2 blocks")
        : std::domain_error(what) {}
};

class MovePreconditionError : public std::invalid_argument {
public:
    explicit MovePreconditionError(const std::string& what = "balancing move requires n_p - n_q >= 2")
        : std::invalid_argument(what) {}
};

class NonPositiveSampleError : public std::invalid_argument {
public:
    explicit NonPositiveSampleError(const std::string& what = "sample point must be positive")
        : std::invalid_argument(what) {}
};

class WidthNotPositiveError : public std::invalid_argument {
public:
    explicit WidthNotPositiveError(const std::string& what = "bracket width limit must be positive")
        : std::invalid_argument(what) {}
};

class InvalidParametersError : public std::invalid_argument {
public:
    explicit InvalidParametersError(const std::string& what) : std::invalid_argument(what) {}
};

}  // namespace sqdist
