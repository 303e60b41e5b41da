#ifndef RAMAPI_ERRORS_HPP
#define RAMAPI_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace ramapi {

// Base of every error thrown by the library.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

class DivisionByZero : public Error {
public:
    explicit DivisionByZero(const std::string& msg = "division by zero") : Error(msg) {}
};

// Rationalization requested over more independent radicals than supported.
class UnsupportedRadicalDepth : public Error {
public:
    explicit UnsupportedRadicalDepth(const std::string& msg) : Error(msg) {}
};

class ParseError : public Error {
public:
    ParseError(const std::string& msg, int line = 0, int column = 0)
        : Error(format(msg, line, column)), line_(line), column_(column) {}
    int line() const { return line_; }
    int column() const { return column_; }

private:
    static std::string format(const std::string& msg, int line, int column) {
        if (line <= 0) return msg;
        return msg + " at line " + std::to_string(line) + ", column " + std::to_string(column);
    }
    int line_;
    int column_;
};

class ValidationError : public Error {
public:
    explicit ValidationError(const std::string& msg) : Error(msg) {}
};

class SingularArgument : public Error {
public:
    explicit SingularArgument(const std::string& msg = "argument at a singular point") : Error(msg) {}
};

class PrecisionLoss : public Error {
public:
    explicit PrecisionLoss(const std::string& msg = "requested accuracy unattainable; raise guard digits")
        : Error(msg) {}
};

class DivergentSeries : public Error {
public:
    explicit DivergentSeries(const std::string& msg = "series diverges for this argument") : Error(msg) {}
};

class PoleAtPoint : public Error {
public:
    explicit PoleAtPoint(const std::string& msg = "rational function has a pole at the point") : Error(msg) {}
};

class NoSolutions : public Error {
public:
    explicit NoSolutions(const std::string& msg = "no solution points found") : Error(msg) {}
};

class OutOfRange : public Error {
public:
    explicit OutOfRange(const std::string& msg) : Error(msg) {}
};

class NonRealCoefficient : public Error {
public:
    explicit NonRealCoefficient(const std::string& msg) : Error(msg) {}
};

class IdentificationFailed : public Error {
public:
    explicit IdentificationFailed(const std::string& msg) : Error(msg) {}
};

class MissingDegree : public Error {
public:
    explicit MissingDegree(const std::string& msg = "series carries no degree and none was detected")
        : Error(msg) {}
};

class IoError : public Error {
public:
    explicit IoError(const std::string& msg) : Error(msg) {}
};

} // namespace ramapi

#endif
