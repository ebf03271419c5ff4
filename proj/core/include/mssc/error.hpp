#ifndef MSSC_ERROR_HPP
#define MSSC_ERROR_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace mssc {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;

    /// Short machine-readable category, e.g. "invalid_input".
    virtual const char* kind() const noexcept { return "error"; }
};

class InvalidInput : public Error {
public:
    using Error::Error;
    const char* kind() const noexcept override { return "invalid_input"; }
};

class EmptyClusterError : public Error {
public:
    explicit EmptyClusterError(std::size_t cluster)
        : Error("cluster " + std::to_string(cluster) + " is empty"), cluster_(cluster) {}

    std::size_t cluster() const noexcept { return cluster_; }
    const char* kind() const noexcept override { return "empty_cluster"; }

private:
    std::size_t cluster_;
};

class ParseError : public Error {
public:
    ParseError(const std::string& path, std::size_t line, const std::string& what)
        : Error(path + ":" + std::to_string(line) + ": " + what), line_(line) {}

    /// 1-based line number; 0 when the error is not tied to a line.
    std::size_t line() const noexcept { return line_; }
    const char* kind() const noexcept override { return "parse_error"; }

private:
    std::size_t line_;
};

class IoError : public Error {
public:
    using Error::Error;
    const char* kind() const noexcept override { return "io_error"; }
};

/// Raised by the exhaustive oracle when the partition count exceeds its guard.
class TooLargeError : public Error {
public:
    TooLargeError(const std::string& what, double count) : Error(what), count_(count) {}

    double partition_count() const noexcept { return count_; }
    const char* kind() const noexcept override { return "too_large"; }

private:
    double count_;
};

/// Raised when a descent exceeds its move guard; indicates a numerical cycle.
class NonTermination : public Error {
public:
    using Error::Error;
    const char* kind() const noexcept override { return "non_termination"; }
};

}

#endif
