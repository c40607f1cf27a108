#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <ostream>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include <nlohmann/json.hpp>

#include "qmsets/attribute.hpp"
#include "qmsets/error.hpp"
#include "qmsets/gf2.hpp"
#include "qmsets/group.hpp"
#include "qmsets/lattice.hpp"
#include "qmsets/partition.hpp"

namespace qmsets::scenario {

// Scenario files are line oriented. '#' starts a comment. Declarations:
//
//   seed 42
//   universe U = a b c
//   basis Up on U = a':{a,b} b':{b,c} c':{a,b,c}
//   attribute f on U = a:1 b:1 c:2          (values: bare tokens or "quoted")
//   partition P on U = {a}|{b,c}
//   group G on U = (a b c), (a b)           (generators; empty for the trivial group)
//   state S in Up = {a',b'}                 (a universe name means its standard basis)
//   map M on U = perm (a b)                 (or: columns {..} {..} ..., images of basis vectors)
//
// Commands (each may end in "> path" to write its output to a file):
//
//   ket-table B1 B2 ...        distribution f S      measure f S
//   born S                     norm S                bracket T S
//   entropy P                  join P Q ...          orbits G
//   evolve M S                 cascade f g ... from S
//   lattice U                  pythagoras P S        measurement-join f S
//
// Partition arguments (P, Q) accept a partition, an attribute (its inverse-image
// partition) or a group (its orbit partition).

struct UniverseDecl {
    std::string name;
    std::vector<std::string> labels;
    bool operator==(const UniverseDecl&) const = default;
};

struct BasisDecl {
    std::string name;
    std::string universe;
    std::vector<std::string> labels;  // empty when the file gives none
    std::vector<std::vector<std::string>> vectors;
    bool operator==(const BasisDecl&) const = default;
};

struct AttributeDecl {
    std::string name;
    std::string universe;
    std::vector<std::pair<std::string, std::string>> values;
    bool operator==(const AttributeDecl&) const = default;
};

struct PartitionDecl {
    std::string name;
    std::string universe;
    std::vector<std::vector<std::string>> blocks;
    bool operator==(const PartitionDecl&) const = default;
};

struct GroupDecl {
    std::string name;
    std::string universe;
    std::vector<std::string> generators;  // cycle notation, whitespace-normalized
    bool operator==(const GroupDecl&) const = default;
};

struct StateDecl {
    std::string name;
    std::string basis;
    std::vector<std::string> labels;
    bool operator==(const StateDecl&) const = default;
};

struct MapDecl {
    std::string name;
    std::string basis;
    std::string permutation;                          // set for "perm"
    std::vector<std::vector<std::string>> columns;    // set for "columns"
    bool is_permutation = false;
    bool operator==(const MapDecl&) const = default;
};

struct Command {
    std::string verb;
    std::vector<std::string> args;  // "from" is kept as an argument for cascade
    std::string output;             // empty: standard output
    bool operator==(const Command&) const = default;
};

using Statement = std::variant<UniverseDecl, BasisDecl, AttributeDecl, PartitionDecl, GroupDecl,
                               StateDecl, MapDecl, Command>;

struct Bounds {
    std::size_t partitions = kDefaultPartitionBound;
    std::size_t group = kDefaultGroupBound;
    std::size_t kets = kDefaultKetTableBound;
};

/// The objects a validated scenario declares, by name and kind.
struct Environment {
    std::map<std::string, Universe> universes;
    std::map<std::string, Basis> bases;
    std::map<std::string, Attribute> attributes;
    std::map<std::string, SetPartition> partitions;
    std::map<std::string, TransformationGroup> groups;
    std::map<std::string, SetKet> states;
    std::map<std::string, LinearMap> maps;
};

struct Scenario {
    std::optional<std::uint64_t> seed;
    std::vector<Statement> statements;
    std::vector<std::size_t> lines;  // source line of each statement (not compared)
    Environment env;                 // built by parse_scenario (not compared)

    bool operator==(const Scenario& other) const {
        return seed == other.seed && statements == other.statements;
    }
};

/// Parses and type-checks scenario text. Throws ParseError (with line and column)
/// for syntax problems and SemanticError for undeclared or ill-typed names.
/// A sampling command without a seed line is an error unless seed_supplied is set
/// (the caller then provides the seed at run time).
Scenario parse_scenario(const std::string& text, const Bounds& bounds = {},
                        bool seed_supplied = false);

/// Canonical text form; parse_scenario(serialize(s)) == s.
std::string serialize(const Scenario& s);

enum class Format { Text, Csv, Json };

struct RunOptions {
    Format format = Format::Text;
    std::optional<std::uint64_t> seed;  // overrides the scenario seed
    bool cyclic_order = false;
    bool decimals = true;
    Bounds bounds;
};

/// A failing command, with its position in the scenario.
class RuntimeFailure : public Error {
public:
    using Error::Error;
};

/// Executes the commands in order, writing to `out` (or to each command's file).
/// Returns the structured records of every command. Throws RuntimeFailure when
/// an operation fails.
nlohmann::json run_scenario(const Scenario& s, const RunOptions& options, std::ostream& out);

}  // namespace qmsets::scenario
