#include "square/errors.hpp"

namespace square {

const char* error_kind_name(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::EmptySentence: return "EmptySentence";
        case ErrorKind::UnsupportedSyntax: return "UnsupportedSyntax";
        case ErrorKind::MalformedTree: return "MalformedTree";
        case ErrorKind::FrameFileError: return "FrameFileError";
        case ErrorKind::UnknownPrimitive: return "UnknownPrimitive";
        case ErrorKind::NoVerb: return "NoVerb";
        case ErrorKind::InstantiationError: return "InstantiationError";
        case ErrorKind::EmptyStory: return "EmptyStory";
        case ErrorKind::EmptyPhrase: return "EmptyPhrase";
        case ErrorKind::RuleFileError: return "RuleFileError";
        case ErrorKind::UnknownRuleSet: return "UnknownRuleSet";
        case ErrorKind::DepthExceeded: return "DepthExceeded";
        case ErrorKind::Floundering: return "Floundering";
        case ErrorKind::UnsupportedQuestion: return "UnsupportedQuestion";
        case ErrorKind::NoAnswer: return "NoAnswer";
        case ErrorKind::FormatError: return "FormatError";
    }
    return "Unknown";
}

std::string Error::format(ErrorKind kind, const std::string& message, long where) {
    std::string out = error_kind_name(kind);
    out += ": ";
    out += message;
    if (where >= 0) {
        out += " (at ";
        out += std::to_string(where);
        out += ")";
    }
    return out;
}

} // namespace square
