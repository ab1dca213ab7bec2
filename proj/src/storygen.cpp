#include "square/storygen.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <set>
#include <sstream>

#include "square/errors.hpp"

namespace square::gen {

namespace {

using std::string;
using std::vector;

// Engine-independent uniform helpers: rng() is consumed directly so the
// output stream is identical on every platform and standard library.
int irand(std::mt19937& rng, int n) {
    return static_cast<int>(rng() % static_cast<unsigned>(n));
}

bool chance(std::mt19937& rng, int percent) { return irand(rng, 100) < percent; }

template <class T>
const T& pick(std::mt19937& rng, const vector<T>& from) {
    return from[static_cast<size_t>(irand(rng, static_cast<int>(from.size())))];
}

template <class T>
vector<T> sample(std::mt19937& rng, vector<T> from, size_t k) {
    for (size_t i = from.size(); i > 1; --i) {
        std::swap(from[i - 1], from[static_cast<size_t>(irand(rng, static_cast<int>(i)))]);
    }
    if (k < from.size()) from.resize(k);
    return from;
}

const vector<string>& person_pool() {
    static const vector<string> pool = {"Mary", "John", "Daniel",
                                        "Sandra", "Steve", "Fred"};
    return pool;
}

const vector<string>& room_pool() {
    static const vector<string> pool = {"kitchen", "hallway", "garden",
                                        "office",  "bedroom", "bathroom"};
    return pool;
}

const vector<string>& object_pool() {
    static const vector<string> pool = {"milk", "football", "apple", "ball"};
    return pool;
}

// --- world bookkeeping for the movement tasks --------------------------------

struct ObjState {
    string holder;          // person currently carrying it, or ""
    string room;            // resting room once dropped, or ""
    int get_line = 0;       // line of the pickup that began the latest possession
    int rest_move_line = 0; // holder's last move line, recorded at drop time
};

struct World {
    std::map<string, string> person_room;
    std::map<string, int> person_move_line;
    std::map<string, std::set<string>> visited;
    std::map<string, ObjState> objects;
};

string move_sentence(std::mt19937& rng, const string& person,
                     const string& room, bool revisit) {
    static const vector<string> verbs = {"moved to",     "went to",
                                         "journeyed to", "travelled to",
                                         "ran to",       "walked to"};
    if (revisit && chance(rng, 35)) {
        return person + " went back to the " + room + ".";
    }
    return person + " " + pick(rng, verbs) + " the " + room + ".";
}

string get_sentence(std::mt19937& rng, const string& person,
                    const string& object) {
    static const vector<string> verbs = {"got", "grabbed", "took", "picked up"};
    string sentence = person + " " + pick(rng, verbs) + " the " + object;
    if (chance(rng, 25)) sentence += " there";
    return sentence + ".";
}

string drop_sentence(std::mt19937& rng, const string& person,
                     const string& object) {
    static const vector<string> verbs = {"dropped", "discarded", "put down",
                                         "left"};
    string sentence = person + " " + pick(rng, verbs) + " the " + object;
    if (chance(rng, 25)) sentence += " there";
    return sentence + ".";
}

void apply_move(World& world, const string& person, const string& room,
                int line_id) {
    world.person_room[person] = room;
    world.person_move_line[person] = line_id;
    world.visited[person].insert(room);
}

string emit_move(std::mt19937& rng, World& world, const string& person,
                 const vector<string>& rooms, int line_id) {
    vector<string> choices;
    for (const string& room : rooms) {
        if (room != world.person_room[person]) choices.push_back(room);
    }
    const string& room = pick(rng, choices);
    bool revisit = world.visited[person].count(room) > 0;
    apply_move(world, person, room, line_id);
    return move_sentence(rng, person, room, revisit);
}

// One random declarative: weighted move/get/drop with legality fallbacks.
// Pickups need a roomed actor and an unheld object resting in the actor's
// room (or still unplaced); drops need a held object.
string emit_action(std::mt19937& rng, World& world,
                   const vector<string>& persons, const vector<string>& objects,
                   const vector<string>& rooms, int line_id) {
    int roll = irand(rng, 10);

    if (roll >= 8) { // drop
        vector<std::pair<string, string>> held;
        for (const string& object : objects) {
            const ObjState& state = world.objects[object];
            if (!state.holder.empty()) held.emplace_back(state.holder, object);
        }
        if (!held.empty()) {
            auto [person, object] = pick(rng, held);
            ObjState& state = world.objects[object];
            state.holder.clear();
            state.room = world.person_room[person];
            state.rest_move_line = world.person_move_line[person];
            return drop_sentence(rng, person, object);
        }
        roll = 5; // fall through to a pickup attempt
    }

    if (roll >= 5) { // get
        vector<std::pair<string, string>> legal;
        for (const string& person : persons) {
            auto room = world.person_room.find(person);
            if (room == world.person_room.end() || room->second.empty()) continue;
            for (const string& object : objects) {
                const ObjState& state = world.objects[object];
                if (!state.holder.empty()) continue;
                if (!state.room.empty() && state.room != room->second) continue;
                legal.emplace_back(person, object);
            }
        }
        if (!legal.empty()) {
            auto [person, object] = pick(rng, legal);
            ObjState& state = world.objects[object];
            state.holder = person;
            state.room.clear();
            state.get_line = line_id;
            return get_sentence(rng, person, object);
        }
    }

    return emit_move(rng, world, pick(rng, persons), rooms, line_id);
}

string cap_first(string text) {
    if (!text.empty()) {
        text[0] = static_cast<char>(std::toupper(static_cast<unsigned char>(text[0])));
    }
    return text;
}

void write_statement(std::ostringstream& out, int id, const string& text) {
    out << id << ' ' << text << '\n';
}

void write_question(std::ostringstream& out, int id, const string& question,
                    const string& answer, const vector<int>& support) {
    out << id << ' ' << question << '\t' << answer << '\t';
    for (size_t i = 0; i < support.size(); ++i) {
        if (i) out << ' ';
        out << support[i];
    }
    out << '\n';
}

// --- task scripts -------------------------------------------------------------

void qa1_story(std::mt19937& rng, std::ostringstream& out) {
    vector<string> persons = sample(rng, person_pool(), 4);
    World world;
    int id = 1;
    for (int round = 0; round < 5; ++round) {
        for (const string& person : sample(rng, persons, 2)) {
            write_statement(out, id, emit_move(rng, world, person,
                                               room_pool(), id));
            ++id;
        }
        vector<string> moved;
        for (const string& person : persons) {
            if (world.person_move_line.count(person)) moved.push_back(person);
        }
        const string& asked = pick(rng, moved);
        write_question(out, id, "Where is " + asked + "?",
                       world.person_room[asked],
                       {world.person_move_line[asked]});
        ++id;
    }
}

void qa2_story(std::mt19937& rng, std::ostringstream& out) {
    vector<string> persons = sample(rng, person_pool(), 3 + irand(rng, 2));
    vector<string> objects = sample(rng, object_pool(), 2 + irand(rng, 2));
    World world;
    int id = 1;
    int questions = 0;
    int since_question = 0;
    while (questions < 3 && id <= 40) {
        vector<string> ready;
        for (const string& object : objects) {
            if (world.objects[object].get_line > 0) ready.push_back(object);
        }
        if (since_question >= 4 && !ready.empty()) {
            const string& object = pick(rng, ready);
            const ObjState& state = world.objects[object];
            string answer;
            vector<int> support;
            if (!state.holder.empty()) {
                answer = world.person_room[state.holder];
                support = {state.get_line, world.person_move_line[state.holder]};
            } else {
                answer = state.room;
                support = {state.get_line, state.rest_move_line};
            }
            write_question(out, id, "Where is the " + object + "?", answer,
                           support);
            ++id;
            ++questions;
            since_question = 0;
            continue;
        }
        write_statement(out, id,
                        emit_action(rng, world, persons, objects, room_pool(), id));
        ++id;
        ++since_question;
    }
}

void qa3_story(std::mt19937& rng, std::ostringstream& out) {
    vector<string> persons = sample(rng, person_pool(), 3);
    const string protagonist = persons[0];
    vector<string> distractors(persons.begin() + 1, persons.end());
    vector<string> walk = sample(rng, room_pool(), 4);
    const string object = pick(rng, object_pool());

    World world;
    int id = 1;
    std::map<int, int> arrival_line; // walk index -> line id
    int get_line = 0;

    auto maybe_distractor = [&]() {
        if (!chance(rng, 40)) return;
        write_statement(out, id, emit_move(rng, world, pick(rng, distractors),
                                           room_pool(), id));
        ++id;
    };
    auto protagonist_move = [&](int walk_index) {
        arrival_line[walk_index] = id;
        const string& room = walk[static_cast<size_t>(walk_index)];
        bool revisit = world.visited[protagonist].count(room) > 0;
        apply_move(world, protagonist, room, id);
        write_statement(out, id, move_sentence(rng, protagonist, room, revisit));
        ++id;
    };
    auto before_question = [&](int walk_index) {
        write_question(out, id,
                       "Where was the " + object + " before the " +
                           walk[static_cast<size_t>(walk_index)] + "?",
                       walk[static_cast<size_t>(walk_index - 1)],
                       {get_line, arrival_line[walk_index - 1],
                        arrival_line[walk_index]});
        ++id;
    };

    protagonist_move(0);
    maybe_distractor();
    get_line = id;
    write_statement(out, id, get_sentence(rng, protagonist, object));
    ++id;
    maybe_distractor();
    protagonist_move(1);
    maybe_distractor();
    protagonist_move(2);
    before_question(1 + irand(rng, 2));
    protagonist_move(3);
    maybe_distractor();
    before_question(2 + irand(rng, 2));
}

struct Direction {
    string name;    // canonical relation name
    string phrase;  // surface phrase used in statements and questions
    int dx, dy;
};

const vector<Direction>& compass_directions() {
    static const vector<Direction> dirs = {
        {"north_of", "north of", 0, 1},
        {"south_of", "south of", 0, -1},
        {"east_of", "east of", 1, 0},
        {"west_of", "west of", -1, 0},
    };
    return dirs;
}

const vector<Direction>& planar_directions() {
    static const vector<Direction> dirs = {
        {"above", "above", 0, 1},
        {"below", "below", 0, -1},
        {"left_of", "to the left of", -1, 0},
        {"right_of", "to the right of", 1, 0},
    };
    return dirs;
}

const Direction& inverse(const Direction& dir, const vector<Direction>& pool) {
    for (const Direction& other : pool) {
        if (other.dx == -dir.dx && other.dy == -dir.dy) return other;
    }
    return dir;
}

void qa4_story(std::mt19937& rng, std::ostringstream& out) {
    vector<string> places = sample(rng, room_pool(), 3);
    const auto& dirs = compass_directions();
    const Direction& d1 = pick(rng, dirs);
    // d2 must not be d1's inverse: A d1 B plus B inv(d1) C would put both A
    // and C in the d1 direction from B, making the questions ambiguous.
    const Direction* second = &pick(rng, dirs);
    while (second->name == inverse(d1, dirs).name) second = &pick(rng, dirs);
    const Direction& d2 = *second;

    // A d1 B, then B d2 C: a chain through the shared middle place.
    struct Edge {
        const Direction* dir;
        string a, b;
        int line;
    };
    vector<Edge> edges = {{&d1, places[0], places[1], 1},
                          {&d2, places[1], places[2], 2}};
    write_statement(out, 1,
                    "The " + edges[0].a + " is " + d1.phrase + " the " +
                        edges[0].b + ".");
    write_statement(out, 2,
                    "The " + edges[1].a + " is " + d2.phrase + " the " +
                        edges[1].b + ".");

    const Edge& asked = pick(rng, edges);
    const Direction& inv = inverse(*asked.dir, dirs);
    string question;
    string answer;
    switch (irand(rng, 4)) {
        case 0: // What sits in this direction from b?  -> a
            question = "What is " + asked.dir->phrase + " the " + asked.b + "?";
            answer = asked.a;
            break;
        case 1: // the same edge read through the inverse -> b
            question = "What is " + inv.phrase + " the " + asked.a + "?";
            answer = asked.b;
            break;
        case 2: // stranded: a is <dir> of what? -> b
            question = "What is the " + asked.a + " " + asked.dir->phrase + "?";
            answer = asked.b;
            break;
        default: // stranded through the inverse -> a
            question = "What is the " + asked.b + " " + inv.phrase + "?";
            answer = asked.a;
            break;
    }
    write_question(out, 3, question, answer, {asked.line});
}

void qa17_story(std::mt19937& rng, std::ostringstream& out) {
    static const vector<string> shape_pool = {
        "the red square",     "the blue square", "the triangle",
        "the pink rectangle", "the red sphere",  "the yellow square"};
    vector<string> shapes = sample(rng, shape_pool, 3);
    const auto& dirs = planar_directions();
    const Direction& d1 = pick(rng, dirs);
    const Direction& d2 = pick(rng, dirs);

    // Statement edges: (d, X, Y) places X at Y + offset(d).
    std::map<string, std::pair<int, int>> at;
    at[shapes[1]] = {0, 0};
    at[shapes[0]] = {d1.dx, d1.dy};
    string line2;
    if (chance(rng, 50)) { // chain: S1 d2 S2
        at[shapes[2]] = {at[shapes[1]].first - d2.dx,
                         at[shapes[1]].second - d2.dy};
        line2 = cap_first(shapes[1]) + " is " + d2.phrase + " " + shapes[2] + ".";
    } else { // fork: S0 d2 S2
        at[shapes[2]] = {at[shapes[0]].first - d2.dx,
                         at[shapes[0]].second - d2.dy};
        line2 = cap_first(shapes[0]) + " is " + d2.phrase + " " + shapes[2] + ".";
    }
    write_statement(out, 1, cap_first(shapes[0]) + " is " + d1.phrase + " " +
                                shapes[1] + ".");
    write_statement(out, 2, line2);

    vector<string> pair = sample(rng, shapes, 2);
    const Direction& asked = pick(rng, dirs);
    auto [ax, ay] = at[pair[0]];
    auto [bx, by] = at[pair[1]];
    long along = asked.dx != 0 ? static_cast<long>(ax - bx) * asked.dx
                               : static_cast<long>(ay - by) * asked.dy;
    string question =
        "Is " + pair[0] + " " + asked.phrase + " " + pair[1] + "?";
    write_question(out, 3, question, along > 0 ? "yes" : "no", {1, 2});
}

} // namespace

std::string generate_task(const std::string& task_name, unsigned seed,
                          std::size_t n_stories) {
    std::mt19937 rng(seed);
    std::ostringstream out;
    for (std::size_t i = 0; i < n_stories; ++i) {
        if (task_name == "qa1") qa1_story(rng, out);
        else if (task_name == "qa2") qa2_story(rng, out);
        else if (task_name == "qa3") qa3_story(rng, out);
        else if (task_name == "qa4") qa4_story(rng, out);
        else if (task_name == "qa17") qa17_story(rng, out);
        else throw Error(ErrorKind::FormatError,
                         "no generator for task " + task_name);
    }
    return out.str();
}

unsigned default_seed(const std::string& task_name) {
    if (task_name == "qa1") return 101;
    if (task_name == "qa2") return 102;
    if (task_name == "qa3") return 103;
    if (task_name == "qa4") return 104;
    if (task_name == "qa17") return 117;
    return 42;
}

RandomStory random_story(std::mt19937& rng) {
    static const vector<string> person_names = {"Mary", "John", "Daniel"};
    static const vector<string> object_names = {"milk", "football", "apple"};
    static const vector<string> room_names = {"kitchen", "hallway", "garden",
                                              "office"};
    RandomStory story;
    story.persons = sample(rng, person_names, 1 + static_cast<size_t>(irand(rng, 3)));
    story.objects = sample(rng, object_names, 1 + static_cast<size_t>(irand(rng, 3)));
    vector<string> rooms = sample(rng, room_names, 2 + static_cast<size_t>(irand(rng, 3)));

    World world;
    int n = 1 + irand(rng, 8);
    for (int i = 0; i < n; ++i) {
        story.sentences.push_back(emit_action(rng, world, story.persons,
                                              story.objects, rooms, i + 1));
    }
    return story;
}

} // namespace square::gen
