#include "square/token.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>

#include "square/errors.hpp"

namespace square {

namespace {

std::string lowercase(const std::string& s) {
    std::string out = s;
    std::transform(out.begin(), out.end(), out.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    return out;
}

std::vector<std::string> split_words(const std::string& s) {
    std::vector<std::string> words;
    std::istringstream in(s);
    std::string w;
    while (in >> w) words.push_back(w);
    return words;
}

std::string join(const std::vector<std::string>& words, char sep) {
    std::string out;
    for (size_t i = 0; i < words.size(); ++i) {
        if (i) out += sep;
        out += words[i];
    }
    return out;
}

} // namespace

WordLexicon WordLexicon::from_text(const std::string& text) {
    WordLexicon lex;
    std::istringstream in(text);
    std::string line;
    long lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        size_t hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        bool blank = line.find_first_not_of(" \t") == std::string::npos;
        if (blank) continue;
        std::vector<std::string> fields;
        size_t start = 0;
        while (true) {
            size_t tab = line.find('\t', start);
            fields.push_back(line.substr(start, tab == std::string::npos ? tab : tab - start));
            if (tab == std::string::npos) break;
            start = tab + 1;
        }
        if (fields.size() != 3) {
            throw Error(ErrorKind::FormatError, "lexicon line needs word<TAB>lemma<TAB>POS", lineno);
        }
        lex.add(fields[0], fields[1], fields[2]);
    }
    return lex;
}

WordLexicon WordLexicon::from_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error(ErrorKind::FormatError, "cannot open lexicon file " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return from_text(buf.str());
}

void WordLexicon::add(const std::string& word, const std::string& lemma, const std::string& pos) {
    std::vector<std::string> words = split_words(word);
    if (words.empty()) throw Error(ErrorKind::FormatError, "empty lexicon word");
    std::string key = join(words, ' ');
    entries_[key] = {lemma, pos};
    if (words.size() > 1) {
        multiwords_.push_back(words);
        std::stable_sort(multiwords_.begin(), multiwords_.end(),
                         [](const auto& a, const auto& b) { return a.size() > b.size(); });
    }
}

const std::pair<std::string, std::string>* WordLexicon::lookup(const std::string& word) const {
    auto it = entries_.find(word);
    return it == entries_.end() ? nullptr : &it->second;
}

std::vector<Token> tokenize(const std::string& sentence, const WordLexicon& lexicon) {
    // Peel terminal punctuation off words so "bedroom." yields two tokens.
    std::vector<std::string> raw;
    for (const std::string& chunk : split_words(sentence)) {
        std::string word = chunk;
        std::string punct;
        while (!word.empty() && (word.back() == '.' || word.back() == '?' || word.back() == '!' ||
                                 word.back() == ',')) {
            punct.insert(punct.begin(), word.back());
            word.pop_back();
        }
        if (!word.empty()) raw.push_back(word);
        for (char c : punct) raw.push_back(std::string(1, c));
    }
    if (raw.empty()) throw Error(ErrorKind::EmptySentence, "no tokens in sentence");

    std::vector<Token> tokens;
    size_t i = 0;
    while (i < raw.size()) {
        // Longest-first multiword merge, matched on lowercase forms.
        bool merged = false;
        for (const auto& unit : lexicon.multiwords()) {
            if (i + unit.size() > raw.size()) continue;
            bool match = true;
            for (size_t k = 0; k < unit.size(); ++k) {
                if (lowercase(raw[i + k]) != unit[k]) {
                    match = false;
                    break;
                }
            }
            if (!match) continue;
            std::vector<std::string> surface(raw.begin() + i, raw.begin() + i + unit.size());
            const auto* entry = lexicon.lookup(join(unit, ' '));
            tokens.push_back(Token{join(surface, '_'), entry->first, entry->second});
            i += unit.size();
            merged = true;
            break;
        }
        if (merged) continue;

        const std::string& word = raw[i];
        if (word == "." || word == "?" || word == "!" || word == ",") {
            tokens.push_back(Token{word, word, "."});
        } else if (const auto* entry = lexicon.lookup(lowercase(word))) {
            tokens.push_back(Token{word, entry->first, entry->second});
        } else if (std::isupper(static_cast<unsigned char>(word[0]))) {
            tokens.push_back(Token{word, lowercase(word), "NNP"});
        } else {
            tokens.push_back(Token{word, lowercase(word), "NN"});
        }
        ++i;
    }
    return tokens;
}

} // namespace square
