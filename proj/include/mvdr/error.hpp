#pragma once

#include <stdexcept>
#include <string>

namespace mvdr {

// Process exit codes: 0 success, 1 usage, 2 data, 3 numerical.
enum class ErrorClass { Usage = 1, Data = 2, Numerical = 3 };

class Error : public std::runtime_error {
public:
    Error(ErrorClass cls, std::string msg)
        : std::runtime_error(std::move(msg)), cls_(cls) {}

    ErrorClass error_class() const { return cls_; }
    int exit_code() const { return static_cast<int>(cls_); }

private:
    ErrorClass cls_;
};

class UsageError : public Error {
public:
    explicit UsageError(std::string msg) : Error(ErrorClass::Usage, std::move(msg)) {}
};

class DataError : public Error {
public:
    explicit DataError(std::string msg) : Error(ErrorClass::Data, std::move(msg)) {}
};

// Iterative method failed to converge, or the input is numerically degenerate.
class NumericalError : public Error {
public:
    explicit NumericalError(std::string msg) : Error(ErrorClass::Numerical, std::move(msg)) {}
};

class DecodeError : public DataError {
public:
    using DataError::DataError;
};

class UnsupportedFormatError : public DecodeError {
public:
    using DecodeError::DecodeError;
};

class ShapeError : public DataError {
public:
    using DataError::DataError;
};

class ArgumentError : public DataError {
public:
    using DataError::DataError;
};

class DatasetError : public DataError {
public:
    using DataError::DataError;
};

class FusionError : public DataError {
public:
    using DataError::DataError;
};

class TrainingError : public DataError {
public:
    using DataError::DataError;
};

class ConfigError : public DataError {
public:
    using DataError::DataError;
};

// Model file problems: bad magic, wrong version, CRC/length mismatch.
class ModelFormatError : public DataError {
public:
    using DataError::DataError;
};

class IoError : public DataError {
public:
    using DataError::DataError;
};

} // namespace mvdr
