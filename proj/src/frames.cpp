#include "square/frames.hpp"

#include "square/errors.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

namespace square {

namespace {

std::string trim(const std::string& s) {
    size_t b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) return "";
    size_t e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

std::vector<std::string> split_ws(const std::string& s) {
    std::vector<std::string> out;
    std::istringstream in(s);
    std::string w;
    while (in >> w) out.push_back(w);
    return out;
}

[[noreturn]] void fail(const std::string& msg, long line) {
    throw Error(ErrorKind::FrameFileError, msg, line);
}

bool is_role_name(const std::string& s) {
    if (s.empty() || s[0] < 'A' || s[0] > 'Z') return false;
    return std::all_of(s.begin(), s.end(), [](char c) {
        return (c >= 'A' && c <= 'Z') || (c >= 'a' && c <= 'z') || c == '_';
    });
}

// Roles that may remain unfilled by the matched constituents.
const std::set<std::string> kOptionalRoles = {
    "Initial_Location", "Source", "Destination", "Location",
};

// Splits "a, b(c), d" on top-level commas.
std::vector<std::string> split_args(const std::string& s, long line) {
    std::vector<std::string> out;
    int depth = 0;
    std::string cur;
    for (char c : s) {
        if (c == '(') { depth++; cur += c; }
        else if (c == ')') {
            depth--;
            if (depth < 0) fail("unbalanced ')' in semantic template", line);
            cur += c;
        } else if (c == ',' && depth == 0) {
            out.push_back(trim(cur));
            cur.clear();
        } else {
            cur += c;
        }
    }
    if (depth != 0) fail("unbalanced '(' in semantic template", line);
    if (!trim(cur).empty()) out.push_back(trim(cur));
    return out;
}

bool parse_event_sym(const std::string& s, int& idx) {
    if (s.size() < 2 || s[0] != 'E') return false;
    for (size_t i = 1; i < s.size(); ++i)
        if (s[i] < '0' || s[i] > '9') return false;
    idx = std::stoi(s.substr(1));
    return true;
}

TemplateArg parse_template_arg(const std::string& raw, long line) {
    TemplateArg arg;
    size_t open = raw.find('(');
    if (open != std::string::npos) {
        std::string head = trim(raw.substr(0, open));
        if (raw.back() != ')') fail("malformed argument '" + raw + "'", line);
        std::string inner = trim(raw.substr(open + 1, raw.size() - open - 2));
        if (head != "start" && head != "during" && head != "end")
            fail("unknown phase '" + head + "'", line);
        int idx = 0;
        if (!parse_event_sym(inner, idx))
            fail("phase argument must name a sub-event, got '" + inner + "'", line);
        arg.kind = TemplateArg::Kind::Phase;
        arg.text = head;
        arg.event = idx;
        return arg;
    }
    int idx = 0;
    if (parse_event_sym(raw, idx)) {
        arg.kind = TemplateArg::Kind::Event;
        arg.event = idx;
        return arg;
    }
    if (is_role_name(raw)) {
        arg.kind = TemplateArg::Kind::Role;
        arg.text = raw;
        return arg;
    }
    if (!raw.empty() && raw[0] >= 'a' && raw[0] <= 'z') {
        arg.kind = TemplateArg::Kind::Const;
        arg.text = raw;
        return arg;
    }
    fail("cannot read argument '" + raw + "'", line);
}

SyntaxElement parse_pattern_token(const std::string& tok, long line) {
    SyntaxElement el;
    if (tok == "V") {
        el.kind = SyntaxElement::Kind::Verb;
        return el;
    }
    if (tok.rfind("PREP{", 0) == 0) {
        if (tok.back() != '}') fail("malformed PREP element '" + tok + "'", line);
        el.kind = SyntaxElement::Kind::Prep;
        std::string inner = tok.substr(5, tok.size() - 6);
        std::string cur;
        for (char c : inner) {
            if (c == ',') {
                if (!trim(cur).empty()) el.preps.push_back(trim(cur));
                cur.clear();
            } else {
                cur += c;
            }
        }
        if (!trim(cur).empty()) el.preps.push_back(trim(cur));
        if (el.preps.empty()) fail("PREP element lists no prepositions", line);
        return el;
    }
    size_t colon = tok.find(':');
    if (colon == std::string::npos || colon == 0 || colon + 1 >= tok.size())
        fail("pattern element must be V, PREP{..}, or TAG:Role, got '" + tok + "'",
             line);
    el.kind = SyntaxElement::Kind::RoleSlot;
    el.phrase_tag = tok.substr(0, colon);
    el.role = tok.substr(colon + 1);
    if (!is_role_name(el.role))
        fail("bad thematic role '" + el.role + "'", line);
    return el;
}

struct FrameBuilder {
    VerbFrame frame;
    bool has_pattern = false;
    long start_line = 0;
};

void finalize_frame(VerbClass& cls, FrameBuilder& fb,
                    const std::set<std::string>& primitives) {
    if (!fb.has_pattern)
        fail("frame has no pattern line", fb.start_line);
    if (fb.frame.semantics.empty())
        fail("frame has no semantic templates", fb.start_line);
    size_t verbs = 0;
    std::set<std::string> pattern_roles;
    for (const auto& el : fb.frame.pattern) {
        if (el.kind == SyntaxElement::Kind::Verb) verbs++;
        if (el.kind == SyntaxElement::Kind::RoleSlot) pattern_roles.insert(el.role);
    }
    if (verbs != 1)
        fail("frame pattern must contain exactly one V element", fb.start_line);
    int max_event = -1;
    for (const auto& sem : fb.frame.semantics) {
        if (!primitives.count(sem.pred))
            throw Error(ErrorKind::UnknownPrimitive,
                        "semantic predicate '" + sem.pred +
                            "' is not a declared primitive",
                        fb.start_line);
        for (const auto& arg : sem.args) {
            if (arg.kind == TemplateArg::Kind::Role && !pattern_roles.count(arg.text)
                && !kOptionalRoles.count(arg.text))
                fail("role '" + arg.text + "' is not licensed by the pattern",
                     fb.start_line);
            if (arg.kind == TemplateArg::Kind::Phase
                || arg.kind == TemplateArg::Kind::Event)
                max_event = std::max(max_event, arg.event);
        }
    }
    fb.frame.sub_event_count = max_event + 1;
    cls.frames.push_back(std::move(fb.frame));
}

} // namespace

FrameLexicon FrameLexicon::from_text(const std::string& text) {
    FrameLexicon lex;
    std::istringstream in(text);
    std::string raw;
    long line_no = 0;
    bool saw_primitives = false;
    VerbClass* cur_class = nullptr;
    FrameBuilder fb;
    bool frame_open = false;

    auto close_frame = [&]() {
        if (frame_open) {
            finalize_frame(*cur_class, fb, lex.primitives_);
            fb = FrameBuilder{};
            frame_open = false;
        }
    };
    auto close_class = [&]() {
        close_frame();
        if (cur_class) {
            if (cur_class->members.empty())
                fail("class '" + cur_class->id + "' lists no members", line_no);
            if (cur_class->frames.empty())
                fail("class '" + cur_class->id + "' has no frames", line_no);
            cur_class = nullptr;
        }
    };

    while (std::getline(in, raw)) {
        line_no++;
        size_t hash = raw.find('#');
        if (hash != std::string::npos) raw = raw.substr(0, hash);
        std::string line = trim(raw);
        if (line.empty()) continue;

        if (line.rfind("primitives:", 0) == 0) {
            if (saw_primitives) fail("duplicate primitives header", line_no);
            saw_primitives = true;
            for (const auto& p : split_ws(line.substr(11))) lex.primitives_.insert(p);
            if (lex.primitives_.empty())
                fail("primitives header declares nothing", line_no);
            continue;
        }
        if (!saw_primitives)
            fail("frame file must start with a primitives header", line_no);

        if (line.rfind("class ", 0) == 0) {
            close_class();
            std::string id = trim(line.substr(6));
            if (id.empty()) fail("class line without an id", line_no);
            if (lex.class_index_.count(id)) fail("duplicate class '" + id + "'", line_no);
            lex.class_index_[id] = lex.classes_.size();
            lex.classes_.push_back(VerbClass{id, {}, {}});
            cur_class = &lex.classes_.back();
            continue;
        }
        if (!cur_class) fail("'" + line + "' appears outside any class", line_no);

        if (line.rfind("members:", 0) == 0) {
            auto words = split_ws(line.substr(8));
            if (words.empty()) fail("members line lists no verbs", line_no);
            for (const auto& w : words) cur_class->members.push_back(w);
            continue;
        }
        if (line == "frame") {
            close_frame();
            frame_open = true;
            fb.start_line = line_no;
            continue;
        }
        if (line.rfind("pattern:", 0) == 0) {
            if (!frame_open) fail("pattern line outside a frame", line_no);
            if (fb.has_pattern) fail("frame has two pattern lines", line_no);
            for (const auto& tok : split_ws(line.substr(8)))
                fb.frame.pattern.push_back(parse_pattern_token(tok, line_no));
            if (fb.frame.pattern.empty()) fail("pattern line is empty", line_no);
            fb.has_pattern = true;
            continue;
        }
        if (line.rfind("sem:", 0) == 0) {
            if (!frame_open) fail("sem line outside a frame", line_no);
            std::string body = trim(line.substr(4));
            SemanticTemplate sem;
            if (!body.empty() && body[0] == '-') {
                sem.negated = true;
                body = trim(body.substr(1));
            }
            size_t open = body.find('(');
            if (open == std::string::npos || body.back() != ')')
                fail("semantic template must look like pred(args)", line_no);
            sem.pred = trim(body.substr(0, open));
            if (sem.pred.empty()) fail("semantic template without predicate", line_no);
            std::string argstr = body.substr(open + 1, body.size() - open - 2);
            for (const auto& a : split_args(argstr, line_no))
                sem.args.push_back(parse_template_arg(a, line_no));
            fb.frame.semantics.push_back(std::move(sem));
            continue;
        }
        fail("unrecognized line '" + line + "'", line_no);
    }
    close_class();
    // A file with no classes (even a fully empty one) is a valid empty
    // lexicon; every lookup on it returns an empty list.
    return lex;
}

FrameLexicon FrameLexicon::from_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw Error(ErrorKind::FrameFileError, "cannot open frame file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return from_text(ss.str());
}

std::vector<std::string> FrameLexicon::get_vn_classes(const std::string& lemma) const {
    std::vector<std::string> out;
    for (const auto& cls : classes_)
        if (std::find(cls.members.begin(), cls.members.end(), lemma)
            != cls.members.end())
            out.push_back(cls.id);
    return out;
}

const std::vector<VerbFrame>&
FrameLexicon::get_vn_frames(const std::string& class_id) const {
    static const std::vector<VerbFrame> kEmpty;
    auto it = class_index_.find(class_id);
    if (it == class_index_.end()) return kEmpty;
    return classes_[it->second].frames;
}

} // namespace square
