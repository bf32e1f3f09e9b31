#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>

namespace squareprod {

using VertexId = std::int64_t;

enum class ErrorKind {
    Parse,
    AsymmetricAdjacency,
    NotPlanar,
    DanglingOuter,
    UnknownVertex,
    InvalidArgument,
    Disconnected,
    NotSquaregraph,
    RootNotOuter,
    OrderCrossing,
    UpDegreeViolation,
    DownDegreeZero,
    MatchingClash,
    SizeGate,
    Invariant,
};

const char* to_string(ErrorKind kind);

// Every failure raised by the library. `vertex` names the offending vertex when
// there is one (UpDegreeViolation, MatchingClash, DownDegreeZero, ...).
class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& message, std::optional<VertexId> vertex = std::nullopt);

    ErrorKind kind() const noexcept { return kind_; }
    std::optional<VertexId> vertex() const noexcept { return vertex_; }

private:
    ErrorKind kind_;
    std::optional<VertexId> vertex_;
};

class ParseError : public Error {
public:
    ParseError(const std::string& message, int line, int column);

    int line() const noexcept { return line_; }
    int column() const noexcept { return column_; }

private:
    int line_;
    int column_;
};

}  // namespace squareprod
