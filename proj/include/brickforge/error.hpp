#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>

namespace brickforge {

enum class ErrorKind {
    Dimension,    // non-positive size or dimensions
    Palette,      // unknown brick name
    Region,       // region does not fit the space
    Range,        // numeric argument out of range (levels, radii, bboxes)
    Spec,         // invalid generator spec
    Capacity,     // exporter capacity exceeded
    Format,       // malformed external data (palette file, binvox, .mcmd)
    Lex,
    Parse,
    Eval,
    Export,
    Io,
    Connection,
    PartialSend,  // progress() holds the number of lines already sent
};

struct SourcePos {
    int line = 0;
    int column = 0;
};

// Single exception type for the whole library. DSL errors carry a source
// position; partial network sends carry how far they got.
class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, std::string message);
    Error(ErrorKind kind, std::string message, SourcePos pos);
    Error(ErrorKind kind, std::string message, std::size_t progress);

    ErrorKind kind() const noexcept { return kind_; }
    const std::string& message() const noexcept { return message_; }  // undecorated
    const std::optional<SourcePos>& pos() const noexcept { return pos_; }
    std::size_t progress() const noexcept { return progress_; }

private:
    ErrorKind kind_;
    std::string message_;
    std::optional<SourcePos> pos_;
    std::size_t progress_ = 0;
};

const char* errorKindName(ErrorKind kind);

}  // namespace brickforge
