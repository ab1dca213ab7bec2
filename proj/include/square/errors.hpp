#ifndef SQUARE_ERRORS_HPP
#define SQUARE_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace square {

enum class ErrorKind {
    EmptySentence,
    UnsupportedSyntax,
    MalformedTree,
    FrameFileError,
    UnknownPrimitive,
    NoVerb,
    InstantiationError,
    EmptyStory,
    EmptyPhrase,
    RuleFileError,
    UnknownRuleSet,
    DepthExceeded,
    Floundering,
    UnsupportedQuestion,
    NoAnswer,
    FormatError,
};

const char* error_kind_name(ErrorKind kind);

/// Single exception type for all pipeline errors; `kind` identifies the
/// failure class, `where` carries a line number or byte offset when known.
class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, std::string message, long where = -1)
        : std::runtime_error(format(kind, message, where)),
          kind_(kind),
          message_(std::move(message)),
          where_(where) {}

    ErrorKind kind() const { return kind_; }
    /// The bare message, without the kind prefix that what() carries.
    const std::string& message() const { return message_; }
    long where() const { return where_; }

private:
    static std::string format(ErrorKind kind, const std::string& message, long where);

    ErrorKind kind_;
    std::string message_;
    long where_;
};

} // namespace square

#endif
