#include "squareprod/error.hpp"

namespace squareprod {

const char* to_string(ErrorKind kind)
{
    switch (kind) {
    case ErrorKind::Parse: return "Parse";
    case ErrorKind::AsymmetricAdjacency: return "AsymmetricAdjacency";
    case ErrorKind::NotPlanar: return "NotPlanar";
    case ErrorKind::DanglingOuter: return "DanglingOuter";
    case ErrorKind::UnknownVertex: return "UnknownVertex";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::Disconnected: return "Disconnected";
    case ErrorKind::NotSquaregraph: return "NotSquaregraph";
    case ErrorKind::RootNotOuter: return "RootNotOuter";
    case ErrorKind::OrderCrossing: return "OrderCrossing";
    case ErrorKind::UpDegreeViolation: return "UpDegreeViolation";
    case ErrorKind::DownDegreeZero: return "DownDegreeZero";
    case ErrorKind::MatchingClash: return "MatchingClash";
    case ErrorKind::SizeGate: return "SizeGate";
    case ErrorKind::Invariant: return "Invariant";
    }
    return "Unknown";
}

Error::Error(ErrorKind kind, const std::string& message, std::optional<VertexId> vertex)
    : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind), vertex_(vertex)
{
}

ParseError::ParseError(const std::string& message, int line, int column)
    : Error(ErrorKind::Parse,
            "line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + message),
      line_(line), column_(column)
{
}

}  // namespace squareprod
