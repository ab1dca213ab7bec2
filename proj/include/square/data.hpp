#ifndef SQUARE_DATA_HPP
#define SQUARE_DATA_HPP

#include <string>
#include <vector>

namespace square::data {

// Bundled text assets, embedded at build time from the data/ directory.
// Each accessor returns the file content byte-for-byte.

const std::string& lexicon_tsv();
const std::string& gazetteer_txt();
const std::string& frames_vn();

const std::string& core_rules();
const std::string& directions_rules();
const std::string& positional_rules();

// Bundled story corpora, keyed by task name ("qa1", "qa2", "qa3", "qa4",
// "qa17").  Unknown names throw std::out_of_range.
const std::string& babi_task(const std::string& name);
std::vector<std::string> babi_task_names();

} // namespace square::data

#endif // SQUARE_DATA_HPP
