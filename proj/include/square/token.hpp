#ifndef SQUARE_TOKEN_HPP
#define SQUARE_TOKEN_HPP

#include <map>
#include <string>
#include <vector>

namespace square {

struct Token {
    std::string text;   // surface form; multiword units are underscore-joined
    std::string lemma;  // lowercase lemma
    std::string pos;    // Penn Treebank tag
    bool operator==(const Token& other) const {
        return text == other.text && lemma == other.lemma && pos == other.pos;
    }
};

/// Closed-class word table driving tokenization. Entries come from a TSV of
/// `word<TAB>lemma<TAB>POS`; words containing spaces are multiword units that
/// the tokenizer merges into a single token with underscore-joined text.
/// Unknown words default to NNP when capitalized and NN otherwise.
class WordLexicon {
public:
    static WordLexicon from_text(const std::string& text);
    static WordLexicon from_file(const std::string& path);

    void add(const std::string& word, const std::string& lemma, const std::string& pos);

    bool contains(const std::string& word) const { return entries_.count(word) > 0; }
    const std::pair<std::string, std::string>* lookup(const std::string& word) const;

    /// Multiword units as token sequences, longest first.
    const std::vector<std::vector<std::string>>& multiwords() const { return multiwords_; }

private:
    std::map<std::string, std::pair<std::string, std::string>> entries_; // word -> (lemma, pos)
    std::vector<std::vector<std::string>> multiwords_;
};

/// Split a sentence into tagged tokens. Terminal `.`/`?` becomes its own
/// token with tag ".". Throws Error{EmptySentence} on blank input.
std::vector<Token> tokenize(const std::string& sentence, const WordLexicon& lexicon);

} // namespace square

#endif
