#pragma once

#include <cstddef>
#include <random>
#include <string>
#include <vector>

namespace square::gen {

/// Produces a complete task file (numbered stories with embedded questions,
/// gold answers, and supporting line ids) for one of the bundled task names:
/// qa1, qa2, qa3, qa4, qa17. The output is deterministic in the seed.
std::string generate_task(const std::string& task_name, unsigned seed,
                          std::size_t n_stories);

/// Default seed used for the bundled copy of each task.
unsigned default_seed(const std::string& task_name);

/// A small random world: moves, pickups, and drops only, capped at 8
/// sentences, 3 people, 3 objects, and 4 rooms. Used for differential
/// testing; carries no gold answers (a reference simulation provides them).
struct RandomStory {
    std::vector<std::string> sentences;
    std::vector<std::string> persons;  // mentioned person names, as written
    std::vector<std::string> objects;  // mentioned object nouns
};

RandomStory random_story(std::mt19937& rng);

} // namespace square::gen
