#ifndef SQUARE_FRAMES_HPP
#define SQUARE_FRAMES_HPP

#include <map>
#include <set>
#include <string>
#include <vector>

namespace square {

/// One element of a frame's syntax pattern.
struct SyntaxElement {
    enum class Kind { RoleSlot, Verb, Prep };
    Kind kind = Kind::RoleSlot;
    std::string role;                 // RoleSlot: thematic role name
    std::string phrase_tag;           // RoleSlot: constituent tag (NP)
    std::vector<std::string> preps;   // Prep: admissible preposition lemmas
};

/// Argument of a semantic predicate template.
struct TemplateArg {
    enum class Kind { Phase, Role, Event, Const };
    Kind kind = Kind::Const;
    std::string text;    // phase name start/during/end, role name, or constant
    int event = 0;       // sub-event index for Phase and Event
};

struct SemanticTemplate {
    bool negated = false;
    std::string pred;
    std::vector<TemplateArg> args;
};

struct VerbFrame {
    std::vector<SyntaxElement> pattern;
    std::vector<SemanticTemplate> semantics;
    int sub_event_count = 0;   // distinct E symbols used by this frame
};

struct VerbClass {
    std::string id;                     // e.g. "discard-10.1"
    std::vector<std::string> members;   // verb lemmas
    std::vector<VerbFrame> frames;
};

/// Verb-class/frame table loaded from the frame file format:
///   primitives: exert_force contact ...
///   class discard-10.1
///   members: discard toss throw
///   frame
///   pattern: NP:Agent V NP:Theme PREP{to,in,into,on} NP:Destination
///   sem: exert_force(during(E0), Agent, Theme)
///   sem: -contact(during(E1), Agent, Theme)      (leading '-' negates)
/// Semantic predicates must be declared in the primitives header; roles in
/// semantics must occur in the pattern unless they are locative roles that
/// may stay unbound (Initial_Location, Source, Destination, Location).
class FrameLexicon {
public:
    static FrameLexicon from_text(const std::string& text);
    static FrameLexicon from_file(const std::string& path);

    /// Class ids containing the lemma, in file order; empty when absent.
    std::vector<std::string> get_vn_classes(const std::string& lemma) const;

    /// Frames of a class in file order; empty vector for unknown ids.
    const std::vector<VerbFrame>& get_vn_frames(const std::string& class_id) const;

    const std::vector<VerbClass>& classes() const { return classes_; }
    const std::set<std::string>& primitives() const { return primitives_; }

private:
    std::vector<VerbClass> classes_;
    std::map<std::string, size_t> class_index_;
    std::set<std::string> primitives_;
};

} // namespace square

#endif
