#include <algorithm>
#include <charconv>
#include <set>
#include <sstream>

#include "qmsets/scenario.hpp"

namespace qmsets::scenario {

namespace {

enum class Tok { Word, String, Brace, Paren, Equals, Colon, Comma, Bar, Gt };

struct Token {
    Tok kind;
    std::string text;    // Brace/Paren: including the delimiters; String: unescaped
    std::size_t column;  // 1-based
};

bool is_word_char(char c) {
    switch (c) {
        case ' ': case '\t': case '\r': case '=': case ':': case '{': case '}': case '(':
        case ')': case '|': case ',': case '>': case '"': case '#':
            return false;
        default:
            return true;
    }
}

std::vector<Token> tokenize(const std::string& line, std::size_t line_no) {
    std::vector<Token> out;
    std::size_t i = 0;
    while (i < line.size()) {
        const char c = line[i];
        const std::size_t col = i + 1;
        if (c == ' ' || c == '\t' || c == '\r') {
            ++i;
        } else if (c == '#') {
            break;
        } else if (c == '{' || c == '(') {
            const char close = c == '{' ? '}' : ')';
            auto end = line.find(close, i);
            auto nested = line.find(c, i + 1);
            if (end == std::string::npos) {
                throw ParseError(std::string("unterminated '") + c + "'", line_no, col);
            }
            if (nested != std::string::npos && nested < end) {
                throw ParseError(std::string("nested '") + c + "' is not allowed", line_no,
                                 nested + 1);
            }
            out.push_back({c == '{' ? Tok::Brace : Tok::Paren, line.substr(i, end - i + 1), col});
            i = end + 1;
        } else if (c == '"') {
            std::string s;
            ++i;
            bool closed = false;
            while (i < line.size()) {
                if (line[i] == '\\' && i + 1 < line.size()) {
                    s += line[i + 1];
                    i += 2;
                } else if (line[i] == '"') {
                    ++i;
                    closed = true;
                    break;
                } else {
                    s += line[i++];
                }
            }
            if (!closed) throw ParseError("unterminated string", line_no, col);
            out.push_back({Tok::String, s, col});
        } else if (c == '}' || c == ')') {
            throw ParseError(std::string("unbalanced '") + c + "'", line_no, col);
        } else if (c == '=' || c == ':' || c == ',' || c == '|' || c == '>') {
            const Tok k = c == '=' ? Tok::Equals
                        : c == ':' ? Tok::Colon
                        : c == ',' ? Tok::Comma
                        : c == '|' ? Tok::Bar
                                   : Tok::Gt;
            out.push_back({k, std::string(1, c), col});
            ++i;
        } else {
            std::size_t start = i;
            while (i < line.size() && is_word_char(line[i])) ++i;
            out.push_back({Tok::Word, line.substr(start, i - start), col});
        }
    }
    return out;
}

/// Cursor over one line's tokens with error reporting.
class Cursor {
public:
    Cursor(std::vector<Token> tokens, std::size_t line, std::size_t line_length)
        : toks_(std::move(tokens)), line_(line), eol_column_(line_length + 1) {}

    bool done() const { return pos_ >= toks_.size(); }
    const Token* peek() const { return done() ? nullptr : &toks_[pos_]; }
    bool peek_is(Tok k) const { return !done() && toks_[pos_].kind == k; }

    [[noreturn]] void fail(const std::string& message) const {
        throw ParseError(message, line_, done() ? eol_column_ : toks_[pos_].column);
    }

    const Token& expect(Tok k, const char* what) {
        if (!peek_is(k)) fail(std::string("expected ") + what);
        return toks_[pos_++];
    }

    std::string word(const char* what) { return expect(Tok::Word, what).text; }

    void keyword(const char* kw) {
        if (!peek_is(Tok::Word) || toks_[pos_].text != kw) fail(std::string("expected '") + kw + "'");
        ++pos_;
    }

    void end() {
        if (!done()) fail("unexpected '" + toks_[pos_].text + "'");
    }

    std::vector<std::string> brace(const char* what) {
        const Token& t = expect(Tok::Brace, what);
        try {
            return parse_brace_list(t.text);
        } catch (const InvalidArgument& e) {
            throw ParseError(e.what(), line_, t.column);
        }
    }

    std::string paren_run() {
        std::string s;
        while (peek_is(Tok::Paren)) s += normalize_cycle(toks_[pos_++].text);
        return s;
    }

private:
    static std::string normalize_cycle(const std::string& raw) {
        std::istringstream is(raw.substr(1, raw.size() - 2));
        std::string w;
        std::string out = "(";
        bool first = true;
        while (is >> w) {
            if (!first) out += ' ';
            out += w;
            first = false;
        }
        return out + ")";
    }

    std::vector<Token> toks_;
    std::size_t pos_ = 0;
    std::size_t line_;
    std::size_t eol_column_;
};

const std::set<std::string>& command_verbs() {
    static const std::set<std::string> verbs{
        "ket-table", "distribution", "measure", "born",    "norm",       "bracket",
        "entropy",   "join",         "orbits",  "evolve",  "cascade",    "lattice",
        "pythagoras", "measurement-join"};
    return verbs;
}

Statement parse_statement(Cursor& c, const std::string& keyword) {
    if (keyword == "universe") {
        UniverseDecl d;
        d.name = c.word("a universe name");
        c.expect(Tok::Equals, "'='");
        while (!c.done()) d.labels.push_back(c.word("an element label"));
        if (d.labels.empty()) c.fail("a universe needs at least one element");
        return d;
    }
    if (keyword == "basis") {
        BasisDecl d;
        d.name = c.word("a basis name");
        c.keyword("on");
        d.universe = c.word("a universe name");
        c.expect(Tok::Equals, "'='");
        const bool labelled = c.peek_is(Tok::Word);
        while (!c.done()) {
            if (labelled) {
                d.labels.push_back(c.word("a vector label"));
                c.expect(Tok::Colon, "':'");
            }
            d.vectors.push_back(c.brace("a subset such as {a,b}"));
        }
        if (d.vectors.empty()) c.fail("a basis needs vectors");
        return d;
    }
    if (keyword == "attribute") {
        AttributeDecl d;
        d.name = c.word("an attribute name");
        c.keyword("on");
        d.universe = c.word("a universe name");
        c.expect(Tok::Equals, "'='");
        while (!c.done()) {
            std::string element = c.word("an element label");
            c.expect(Tok::Colon, "':'");
            if (c.peek_is(Tok::String)) {
                d.values.emplace_back(element, c.expect(Tok::String, "a value").text);
            } else {
                d.values.emplace_back(element, c.word("a value"));
            }
        }
        return d;
    }
    if (keyword == "partition") {
        PartitionDecl d;
        d.name = c.word("a partition name");
        c.keyword("on");
        d.universe = c.word("a universe name");
        c.expect(Tok::Equals, "'='");
        d.blocks.push_back(c.brace("a block such as {a,b}"));
        while (!c.done()) {
            c.expect(Tok::Bar, "'|'");
            d.blocks.push_back(c.brace("a block such as {a,b}"));
        }
        return d;
    }
    if (keyword == "group") {
        GroupDecl d;
        d.name = c.word("a group name");
        c.keyword("on");
        d.universe = c.word("a universe name");
        c.expect(Tok::Equals, "'='");
        while (!c.done()) {
            std::string gen = c.paren_run();
            if (gen.empty()) c.fail("expected a permutation in cycle notation");
            d.generators.push_back(gen);
            if (!c.done()) c.expect(Tok::Comma, "',' between generators");
        }
        return d;
    }
    if (keyword == "state") {
        StateDecl d;
        d.name = c.word("a state name");
        c.keyword("in");
        d.basis = c.word("a basis or universe name");
        c.expect(Tok::Equals, "'='");
        d.labels = c.brace("a subset such as {a,b}");
        return d;
    }
    if (keyword == "map") {
        MapDecl d;
        d.name = c.word("a map name");
        c.keyword("on");
        d.basis = c.word("a basis or universe name");
        c.expect(Tok::Equals, "'='");
        const std::string form = c.word("'perm' or 'columns'");
        if (form == "perm") {
            d.is_permutation = true;
            d.permutation = c.paren_run();
            if (d.permutation.empty()) c.fail("expected a permutation in cycle notation");
        } else if (form == "columns") {
            while (!c.done()) d.columns.push_back(c.brace("a column such as {a,b}"));
        } else {
            c.fail("expected 'perm' or 'columns'");
        }
        return d;
    }
    if (command_verbs().count(keyword)) {
        Command cmd;
        cmd.verb = keyword;
        while (!c.done() && !c.peek_is(Tok::Gt)) cmd.args.push_back(c.word("a name"));
        if (c.peek_is(Tok::Gt)) {
            c.expect(Tok::Gt, "'>'");
            cmd.output = c.peek_is(Tok::String) ? c.expect(Tok::String, "a path").text
                                                : c.word("an output path");
        }
        return cmd;
    }
    c.fail("unknown statement '" + keyword + "'");
}

// ---------------------------------------------------------------------------
// Semantic checks: builds the environment statement by statement.

class Checker {
public:
    Checker(Environment& env, const Bounds& bounds) : env_(env), bounds_(bounds) {}

    void declare(const Statement& st, std::size_t line) {
        line_ = line;
        try {
            std::visit([this](const auto& d) { this->handle(d); }, st);
        } catch (const SemanticError&) {
            throw;
        } catch (const Error& e) {
            fail(e.what());
        }
    }

    bool sampling_seen() const { return sampling_; }

private:
    [[noreturn]] void fail(const std::string& message) const {
        throw SemanticError("line " + std::to_string(line_) + ": " + message);
    }

    template <class Map>
    void fresh(const Map& m, const std::string& name, const char* kind) const {
        if (m.count(name)) fail("duplicate " + std::string(kind) + " name '" + name + "'");
    }

    const Universe& universe(const std::string& name) const {
        auto it = env_.universes.find(name);
        if (it == env_.universes.end()) fail("undeclared universe '" + name + "'");
        return it->second;
    }

    Basis basis(const std::string& name) const {
        if (auto it = env_.bases.find(name); it != env_.bases.end()) return it->second;
        if (auto it = env_.universes.find(name); it != env_.universes.end()) {
            return Basis::standard(it->second);
        }
        fail("undeclared basis '" + name + "'");
    }

    void handle(const UniverseDecl& d) {
        fresh(env_.universes, d.name, "universe");
        if (env_.bases.count(d.name)) fail("'" + d.name + "' is already a basis name");
        env_.universes.emplace(d.name, Universe(d.name, d.labels));
    }

    void handle(const BasisDecl& d) {
        fresh(env_.bases, d.name, "basis");
        if (env_.universes.count(d.name)) {
            fail("basis '" + d.name + "' would shadow the standard basis of universe '" + d.name + "'");
        }
        const Universe& u = universe(d.universe);
        std::vector<Mask> vectors;
        for (const auto& v : d.vectors) vectors.push_back(u.mask_of(v));
        env_.bases.emplace(d.name, check_basis(u, d.name, std::move(vectors), d.labels));
    }

    void handle(const AttributeDecl& d) {
        fresh(env_.attributes, d.name, "attribute");
        std::vector<std::pair<std::string, Value>> pairs;
        for (const auto& [e, v] : d.values) pairs.emplace_back(e, Value(v));
        env_.attributes.emplace(d.name, Attribute::from_pairs(d.name, universe(d.universe), pairs));
    }

    void handle(const PartitionDecl& d) {
        fresh(env_.partitions, d.name, "partition");
        const Universe& u = universe(d.universe);
        std::vector<Mask> blocks;
        for (const auto& b : d.blocks) blocks.push_back(u.mask_of(b));
        env_.partitions.emplace(d.name, SetPartition(u, std::move(blocks)));
    }

    void handle(const GroupDecl& d) {
        fresh(env_.groups, d.name, "group");
        const Universe& u = universe(d.universe);
        std::vector<Permutation> gens;
        for (const auto& g : d.generators) gens.push_back(parse_cycles(u, g));
        env_.groups.emplace(d.name, generate_group(u, gens, bounds_.group));
    }

    void handle(const StateDecl& d) {
        fresh(env_.states, d.name, "state");
        Basis b = basis(d.basis);
        const Mask coords = b.coords_of_labels(d.labels);
        env_.states.emplace(d.name, SetKet(b, coords));
    }

    void handle(const MapDecl& d) {
        fresh(env_.maps, d.name, "map");
        Basis b = basis(d.basis);
        if (d.is_permutation) {
            if (!b.is_standard()) fail("'perm' maps are defined on a universe's standard basis");
            const Permutation p = parse_cycles(b.universe(), d.permutation);
            env_.maps.emplace(d.name, LinearMap::permutation(b.universe(), p.image()));
        } else {
            std::vector<Mask> cols;
            for (const auto& col : d.columns) cols.push_back(b.coords_of_labels(col));
            env_.maps.emplace(d.name, LinearMap(b, b, std::move(cols)));
        }
    }

    void need_state(const std::string& name) const {
        if (!env_.states.count(name) && !env_.universes.count(name)) {
            fail("undeclared state '" + name + "'");
        }
    }
    void need_attribute(const std::string& name) const {
        if (!env_.attributes.count(name)) fail("undeclared attribute '" + name + "'");
    }
    void need_partition_ref(const std::string& name) const {
        const int kinds = static_cast<int>(env_.partitions.count(name)) +
                          static_cast<int>(env_.attributes.count(name)) +
                          static_cast<int>(env_.groups.count(name));
        if (kinds == 0) fail("undeclared partition, attribute or group '" + name + "'");
        if (kinds > 1) fail("'" + name + "' is ambiguous: it names more than one of partition, attribute, group");
    }
    void arity(const Command& c, std::size_t lo, std::size_t hi) const {
        if (c.args.size() < lo || c.args.size() > hi) {
            fail("'" + c.verb + "' takes " +
                 (lo == hi ? std::to_string(lo) : std::to_string(lo) + " or more") + " arguments");
        }
    }

    void handle(const Command& c) {
        constexpr std::size_t many = static_cast<std::size_t>(-1);
        const auto& v = c.verb;
        if (v == "ket-table") {
            arity(c, 1, many);
            for (const auto& a : c.args) basis(a);
        } else if (v == "distribution" || v == "measure" || v == "measurement-join") {
            arity(c, 2, 2);
            need_attribute(c.args[0]);
            need_state(c.args[1]);
            sampling_ = sampling_ || v == "measure";
        } else if (v == "born" || v == "norm") {
            arity(c, 1, 1);
            need_state(c.args[0]);
        } else if (v == "bracket") {
            arity(c, 2, 2);
            need_state(c.args[0]);
            need_state(c.args[1]);
        } else if (v == "entropy") {
            arity(c, 1, 1);
            need_partition_ref(c.args[0]);
        } else if (v == "join") {
            arity(c, 1, many);
            for (const auto& a : c.args) need_partition_ref(a);
        } else if (v == "orbits") {
            arity(c, 1, 1);
            if (!env_.groups.count(c.args[0])) fail("undeclared group '" + c.args[0] + "'");
        } else if (v == "evolve") {
            arity(c, 2, 2);
            if (!env_.maps.count(c.args[0])) fail("undeclared map '" + c.args[0] + "'");
            need_state(c.args[1]);
        } else if (v == "cascade") {
            auto from = std::find(c.args.begin(), c.args.end(), "from");
            if (from == c.args.begin() || from == c.args.end() || from + 2 != c.args.end()) {
                fail("usage: cascade f g ... from S");
            }
            for (auto it = c.args.begin(); it != from; ++it) need_attribute(*it);
            need_state(c.args.back());
            sampling_ = true;
        } else if (v == "lattice") {
            arity(c, 1, 1);
            universe(c.args[0]);
        } else if (v == "pythagoras") {
            arity(c, 2, 2);
            need_partition_ref(c.args[0]);
            need_state(c.args[1]);
        }
    }

    Environment& env_;
    const Bounds& bounds_;
    std::size_t line_ = 0;
    bool sampling_ = false;
};

}  // namespace

Scenario parse_scenario(const std::string& text, const Bounds& bounds, bool seed_supplied) {
    Scenario s;
    Checker checker(s.env, bounds);
    std::istringstream in(text);
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        auto tokens = tokenize(line, line_no);
        if (tokens.empty()) continue;
        Cursor c(std::move(tokens), line_no, line.size());
        const std::string keyword = c.word("a statement keyword");
        if (keyword == "seed") {
            const Token* t = c.peek();
            const std::string digits = c.word("a seed");
            std::uint64_t seed = 0;
            auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), seed);
            if (ec != std::errc() || ptr != digits.data() + digits.size()) {
                throw ParseError("seed must be an unsigned 64-bit integer", line_no, t->column);
            }
            c.end();
            if (s.seed) throw SemanticError("line " + std::to_string(line_no) + ": duplicate seed");
            s.seed = seed;
            continue;
        }
        Statement st = parse_statement(c, keyword);
        c.end();
        checker.declare(st, line_no);
        s.statements.push_back(std::move(st));
        s.lines.push_back(line_no);
    }
    if (checker.sampling_seen() && !s.seed && !seed_supplied) {
        throw SemanticError("scenario samples measurements but declares no seed");
    }
    return s;
}

// ---------------------------------------------------------------------------

namespace {

bool is_bare_word(const std::string& s) {
    return !s.empty() && std::all_of(s.begin(), s.end(), is_word_char);
}

std::string quote_if_needed(const std::string& s) {
    if (is_bare_word(s)) return s;
    std::string q = "\"";
    for (char c : s) {
        if (c == '"' || c == '\\') q += '\\';
        q += c;
    }
    return q + "\"";
}

struct Writer {
    std::ostringstream& os;

    void operator()(const UniverseDecl& d) const {
        os << "universe " << d.name << " =";
        for (const auto& l : d.labels) os << ' ' << l;
    }
    void operator()(const BasisDecl& d) const {
        os << "basis " << d.name << " on " << d.universe << " =";
        for (std::size_t i = 0; i < d.vectors.size(); ++i) {
            os << ' ';
            if (!d.labels.empty()) os << d.labels[i] << ':';
            os << brace_list(d.vectors[i]);
        }
    }
    void operator()(const AttributeDecl& d) const {
        os << "attribute " << d.name << " on " << d.universe << " =";
        for (const auto& [e, v] : d.values) os << ' ' << e << ':' << quote_if_needed(v);
    }
    void operator()(const PartitionDecl& d) const {
        os << "partition " << d.name << " on " << d.universe << " = ";
        for (std::size_t i = 0; i < d.blocks.size(); ++i) os << (i ? "|" : "") << brace_list(d.blocks[i]);
    }
    void operator()(const GroupDecl& d) const {
        os << "group " << d.name << " on " << d.universe << " =";
        for (std::size_t i = 0; i < d.generators.size(); ++i) os << (i ? ", " : " ") << d.generators[i];
    }
    void operator()(const StateDecl& d) const {
        os << "state " << d.name << " in " << d.basis << " = " << brace_list(d.labels);
    }
    void operator()(const MapDecl& d) const {
        os << "map " << d.name << " on " << d.basis << " = ";
        if (d.is_permutation) {
            os << "perm " << d.permutation;
        } else {
            os << "columns";
            for (const auto& col : d.columns) os << ' ' << brace_list(col);
        }
    }
    void operator()(const Command& c) const {
        os << c.verb;
        for (const auto& a : c.args) os << ' ' << a;
        if (!c.output.empty()) os << " > " << quote_if_needed(c.output);
    }
};

}  // namespace

std::string serialize(const Scenario& s) {
    std::ostringstream os;
    if (s.seed) os << "seed " << *s.seed << '\n';
    for (const auto& st : s.statements) {
        std::visit(Writer{os}, st);
        os << '\n';
    }
    return os.str();
}

}  // namespace qmsets::scenario
