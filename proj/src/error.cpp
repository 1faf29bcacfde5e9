#include "brickforge/error.hpp"

namespace brickforge {

namespace {

std::string decorate(const std::string& message, const SourcePos& pos) {
    return std::to_string(pos.line) + ":" + std::to_string(pos.column) + ": " + message;
}

}  // namespace

Error::Error(ErrorKind kind, std::string message)
    : std::runtime_error(message), kind_(kind), message_(std::move(message)) {}

Error::Error(ErrorKind kind, std::string message, SourcePos pos)
    : std::runtime_error(decorate(message, pos)),
      kind_(kind),
      message_(std::move(message)),
      pos_(pos) {}

Error::Error(ErrorKind kind, std::string message, std::size_t progress)
    : std::runtime_error(message), kind_(kind), message_(std::move(message)), progress_(progress) {}

const char* errorKindName(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::Dimension: return "dimension";
        case ErrorKind::Palette: return "palette";
        case ErrorKind::Region: return "region";
        case ErrorKind::Range: return "range";
        case ErrorKind::Spec: return "spec";
        case ErrorKind::Capacity: return "capacity";
        case ErrorKind::Format: return "format";
        case ErrorKind::Lex: return "lex";
        case ErrorKind::Parse: return "parse";
        case ErrorKind::Eval: return "eval";
        case ErrorKind::Export: return "export";
        case ErrorKind::Io: return "io";
        case ErrorKind::Connection: return "connection";
        case ErrorKind::PartialSend: return "partial-send";
    }
    return "unknown";
}

}  // namespace brickforge
