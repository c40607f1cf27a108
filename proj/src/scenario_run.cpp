#include <fstream>
#include <sstream>

#include "qmsets/calculus.hpp"
#include "qmsets/scenario.hpp"
#include "qmsets/table.hpp"

namespace qmsets::scenario {

namespace {

using nlohmann::json;

std::string basis_header(const Basis& b) {
    return b.name() + "=" + brace_list(b.labels());
}

json ket_json(const SetKet& k) {
    return {{"basis", k.basis().name()},
            {"ket", k.format()},
            {"subset", k.universe().format(k.subset())}};
}

json rational_json(const Rational& r) { return {{"exact", to_string(r)}, {"decimal", to_decimal(r)}}; }

/// One command's output: a table for text/CSV plus a structured record.
struct Output {
    Table table;
    json record;
    std::string text_override;  // replaces the table in text format (lattice diagram)
    std::vector<std::string> notes;  // extra text-format lines after the table
};

class Runner {
public:
    Runner(const Scenario& s, const RunOptions& o) : s_(s), env_(s.env), opt_(o) {}

    Output run(const Command& c, std::size_t index) {
        const auto& v = c.verb;
        if (v == "ket-table") return ket_table_cmd(c);
        if (v == "distribution") return distribution_cmd(measure_distribution(attribute(c.args[0]), state(c.args[1])));
        if (v == "born") return distribution_cmd(born_distribution(standard_state(c.args[0])));
        if (v == "measure") return measure_cmd(c, index);
        if (v == "norm") return norm_cmd(c);
        if (v == "bracket") return bracket_cmd(c);
        if (v == "entropy") return entropy_cmd(c);
        if (v == "join") return join_cmd(c);
        if (v == "orbits") return orbits_cmd(c);
        if (v == "evolve") return evolve_cmd(c);
        if (v == "cascade") return cascade_cmd(c);
        if (v == "lattice") return lattice_cmd(c);
        if (v == "pythagoras") return pythagoras_cmd(c);
        if (v == "measurement-join") return measurement_join_cmd(c);
        throw Error("unknown command '" + v + "'");
    }

private:
    const Attribute& attribute(const std::string& n) const { return env_.attributes.at(n); }

    SetKet state(const std::string& n) const {
        if (auto it = env_.states.find(n); it != env_.states.end()) return it->second;
        const Universe& u = env_.universes.at(n);
        return SetKet::from_subset(u, u.all());
    }

    /// The named state re-expressed in the standard basis of its universe.
    SetKet standard_state(const std::string& n) const {
        const SetKet k = state(n);
        return to_basis(k, Basis::standard(k.universe()));
    }

    Basis basis(const std::string& n) const {
        if (auto it = env_.bases.find(n); it != env_.bases.end()) return it->second;
        return Basis::standard(env_.universes.at(n));
    }

    SetPartition partition(const std::string& n) const {
        if (auto it = env_.partitions.find(n); it != env_.partitions.end()) return it->second;
        if (auto it = env_.attributes.find(n); it != env_.attributes.end()) {
            return inverse_image_partition(it->second);
        }
        return orbit_partition(env_.groups.at(n));
    }

    std::uint64_t seed() const {
        if (opt_.seed) return *opt_.seed;
        if (s_.seed) return *s_.seed;
        throw Error("no seed: declare one in the scenario or pass --seed");
    }

    std::vector<std::string> prob_cells(const Rational& p) const {
        if (opt_.decimals) return {to_string(p), to_decimal(p)};
        return {to_string(p)};
    }
    std::vector<std::string> prob_header(const char* name) const {
        if (opt_.decimals) return {name, "decimal"};
        return {name};
    }

    Output ket_table_cmd(const Command& c) {
        std::vector<Basis> bases;
        for (const auto& a : c.args) bases.push_back(basis(a));
        const KetTable kt = ket_table(bases, opt_.cyclic_order ? KetOrder::Cyclic : KetOrder::Binary,
                                      opt_.bounds.kets);
        Output o;
        json rows = json::array();
        for (const auto& b : kt.bases) o.table.header.push_back(basis_header(b));
        for (const auto& row : kt.rows) {
            std::vector<std::string> cells;
            json jr = json::object();
            for (const auto& k : row) {
                cells.push_back(k.format());
                jr[k.basis().name()] = k.format();
            }
            o.table.rows.push_back(std::move(cells));
            rows.push_back(std::move(jr));
        }
        json bases_json = json::array();
        for (const auto& b : kt.bases) {
            json vecs = json::array();
            for (std::size_t j = 0; j < b.dimension(); ++j) {
                vecs.push_back({{"label", b.labels()[j]}, {"subset", b.universe().format(b.vectors()[j])}});
            }
            bases_json.push_back({{"name", b.name()}, {"vectors", vecs}});
        }
        o.record = {{"order", opt_.cyclic_order ? "cyclic" : "binary"},
                    {"bases", bases_json},
                    {"rows", rows}};
        return o;
    }

    Output distribution_cmd(const OutcomeDistribution& d) {
        Output o;
        o.table.header = {"value"};
        for (auto& h : prob_header("probability")) o.table.header.push_back(h);
        o.table.header.push_back("collapsed");
        json outcomes = json::array();
        for (const auto& oc : d.outcomes) {
            std::vector<std::string> row{oc.value.text()};
            for (auto& p : prob_cells(oc.probability)) row.push_back(p);
            row.push_back(oc.collapsed.format());
            o.table.rows.push_back(std::move(row));
            outcomes.push_back({{"value", oc.value.text()},
                                {"probability", rational_json(oc.probability)},
                                {"collapsed", ket_json(oc.collapsed)}});
        }
        o.record = {{"state", ket_json(d.state)},
                    {"outcomes", outcomes},
                    {"total", to_string(d.total())}};
        return o;
    }

    json step_json(const MeasurementStep& st, std::uint64_t step_index) const {
        return {{"attribute", st.attribute},
                {"step", step_index},
                {"value", st.value.text()},
                {"probability", rational_json(st.probability)},
                {"pre", ket_json(st.pre)},
                {"post", ket_json(st.post)}};
    }

    Output measure_cmd(const Command& c, std::size_t index) {
        const std::uint64_t sd = seed();
        const auto st = measure_sample(attribute(c.args[0]), state(c.args[1]), sd, index);
        Output o;
        o.table.header = {"attribute", "value"};
        for (auto& h : prob_header("probability")) o.table.header.push_back(h);
        o.table.header.insert(o.table.header.end(), {"pre", "post"});
        std::vector<std::string> row{st.attribute, st.value.text()};
        for (auto& p : prob_cells(st.probability)) row.push_back(p);
        row.insert(row.end(), {st.pre.format(), st.post.format()});
        o.table.rows.push_back(std::move(row));
        o.record = {{"seed", sd}, {"steps", json::array({step_json(st, index)})}};
        return o;
    }

    Output norm_cmd(const Command& c) {
        const SetKet given = state(c.args[0]);
        const SetKet k = to_basis(given, Basis::standard(given.universe()));
        const Norm n = norm(k);
        Output o;
        std::ostringstream value;
        value.setf(std::ios::fixed);
        value.precision(6);
        value << n.value;
        o.table.header = {"state", "ket", "subset", "norm^2", "norm"};
        o.table.rows.push_back({c.args[0], given.format(), k.format(), std::to_string(n.squared), value.str()});
        o.record = {{"state", ket_json(given)}, {"squared", n.squared}, {"norm", value.str()}};
        return o;
    }

    Output bracket_cmd(const Command& c) {
        const SetKet t = standard_state(c.args[0]);
        const SetKet s = standard_state(c.args[1]);
        const Bracket b = bracket(t, s);
        Output o;
        o.table.header = {"bra", "ket", "bracket"};
        o.table.rows.push_back({t.format(), s.format(), std::to_string(b.value)});
        o.record = {{"bra", ket_json(t)}, {"ket", ket_json(s)}, {"bracket", b.value}};
        return o;
    }

    Output entropy_cmd(const Command& c) {
        const SetPartition p = partition(c.args[0]);
        const Rational h = logical_entropy(p);
        Output o;
        o.table.header = {"partition", "dits"};
        for (auto& x : prob_header("logical entropy")) o.table.header.push_back(x);
        std::vector<std::string> row{to_string(p), std::to_string(dit(p).size())};
        for (auto& x : prob_cells(h)) row.push_back(x);
        o.table.rows.push_back(std::move(row));
        o.record = {{"partition", to_string(p)},
                    {"dits", dit(p).size()},
                    {"logical_entropy", rational_json(h)}};
        return o;
    }

    Output blocks_output(const SetPartition& p, const std::vector<std::vector<Value>>* tuples) {
        Output o;
        o.table.header = {"block", "size"};
        if (tuples) o.table.header.push_back("values");
        json blocks = json::array();
        for (std::size_t k = 0; k < p.block_count(); ++k) {
            const Mask b = p.blocks()[k];
            std::vector<std::string> row{p.universe().format(b), std::to_string(cardinality(b))};
            json jb = {{"block", p.universe().format(b)}, {"size", cardinality(b)}};
            if (tuples) {
                row.push_back(to_string((*tuples)[k]));
                json vals = json::array();
                for (const auto& v : (*tuples)[k]) vals.push_back(v.text());
                jb["values"] = vals;
            }
            o.table.rows.push_back(std::move(row));
            blocks.push_back(std::move(jb));
        }
        json sizes = json::array();
        for (auto n : block_sizes(p)) sizes.push_back(n);
        o.record = {{"partition", to_string(p)}, {"blocks", blocks}, {"block_sizes", sizes}};
        return o;
    }

    Output join_cmd(const Command& c) {
        const bool all_attributes = std::all_of(c.args.begin(), c.args.end(), [this](const std::string& a) {
            return env_.attributes.count(a) > 0;
        });
        if (all_attributes) {
            std::vector<Attribute> fs;
            for (const auto& a : c.args) fs.push_back(attribute(a));
            const AttributeSet set(std::move(fs));
            const AttributeJoin j = join_attributes(set);
            Output o = blocks_output(j.partition, &j.tuples);
            o.record["csca"] = is_csca(set);
            o.notes.push_back(std::string("complete set of compatible attributes: ") +
                              (is_csca(set) ? "yes" : "no"));
            return o;
        }
        SetPartition p = partition(c.args.front());
        for (std::size_t i = 1; i < c.args.size(); ++i) p = join(p, partition(c.args[i]));
        return blocks_output(p, nullptr);
    }

    Output orbits_cmd(const Command& c) {
        const auto& g = env_.groups.at(c.args[0]);
        Output o = blocks_output(orbit_partition(g), nullptr);
        o.record["order"] = g.order();
        o.notes.push_back("group order: " + std::to_string(g.order()));
        return o;
    }

    Output evolve_cmd(const Command& c) {
        const LinearMap& m = env_.maps.at(c.args[0]);
        const SetKet in = to_basis(state(c.args[1]), m.domain());
        const SetKet out = evolve(m, in);
        Output o;
        o.table.header = {"map", "input", "output", "output subset"};
        o.table.rows.push_back({c.args[0], in.format(), out.format(), out.universe().format(out.subset())});
        o.record = {{"map", c.args[0]}, {"input", ket_json(in)}, {"output", ket_json(out)}};
        return o;
    }

    Output cascade_cmd(const Command& c) {
        std::vector<Attribute> fs;
        for (const auto& a : c.args) {
            if (a == "from") break;
            fs.push_back(attribute(a));
        }
        const std::uint64_t sd = seed();
        const MeasurementRecord rec = csca_measure(AttributeSet(std::move(fs)), state(c.args.back()), sd);
        Output o;
        o.table.header = {"step", "attribute", "value"};
        for (auto& h : prob_header("probability")) o.table.header.push_back(h);
        o.table.header.insert(o.table.header.end(), {"pre", "post"});
        json steps = json::array();
        for (std::size_t k = 0; k < rec.steps.size(); ++k) {
            const auto& st = rec.steps[k];
            std::vector<std::string> row{std::to_string(k), st.attribute, st.value.text()};
            for (auto& p : prob_cells(st.probability)) row.push_back(p);
            row.insert(row.end(), {st.pre.format(), st.post.format()});
            o.table.rows.push_back(std::move(row));
            steps.push_back(step_json(st, k));
        }
        json tuple = json::array();
        for (const auto& v : rec.tuple()) tuple.push_back(v.text());
        const SetKet& final_state = rec.steps.back().post;
        o.record = {{"seed", sd},
                    {"steps", steps},
                    {"tuple", tuple},
                    {"final", ket_json(final_state)},
                    {"probability", rational_json(rec.probability())}};
        o.notes.push_back("final state " + final_state.format() + " identified by " +
                          to_string(rec.tuple()) + ", probability " + to_string(rec.probability()));
        return o;
    }

    Output lattice_cmd(const Command& c) {
        const PartitionLattice lat = build_lattice(env_.universes.at(c.args[0]), opt_.bounds.partitions);
        Output o;
        o.text_override = render_lattice(lat);
        o.table.header = {"lower", "upper"};
        json nodes = json::array();
        for (const auto& p : lat.nodes) nodes.push_back({{"partition", to_string(p)}, {"rank", p.block_count()}});
        json edges = json::array();
        for (const auto& [lo, hi] : lat.covers) {
            o.table.rows.push_back({to_string(lat.nodes[lo]), to_string(lat.nodes[hi])});
            edges.push_back({{"lower", to_string(lat.nodes[lo])}, {"upper", to_string(lat.nodes[hi])}});
        }
        o.record = {{"nodes", nodes}, {"covers", edges}};
        return o;
    }

    Output pythagoras_cmd(const Command& c) {
        const SetPartition p = partition(c.args[0]);
        const SetKet s = to_basis(state(c.args[1]), Basis::standard(p.universe()));
        const auto [left, right] = pythagoras_check(p, s);
        Output o;
        o.table.header = {"block", "block & S", "norm^2"};
        json terms = json::array();
        for (Mask b : p.blocks()) {
            const Mask part = b & s.subset();
            o.table.rows.push_back({p.universe().format(b), p.universe().format(part), std::to_string(cardinality(part))});
            terms.push_back({{"block", p.universe().format(b)}, {"intersection", p.universe().format(part)},
                             {"squared", cardinality(part)}});
        }
        o.notes.push_back("||S||^2 = " + std::to_string(left) + ", sum over blocks = " + std::to_string(right) +
                          (left == right ? " (equal)" : " (MISMATCH)"));
        o.record = {{"state", ket_json(s)}, {"terms", terms}, {"left", left}, {"right", right}};
        return o;
    }

    Output measurement_join_cmd(const Command& c) {
        const MeasurementJoin mj = measurement_join(attribute(c.args[0]), state(c.args[1]));
        Output o;
        o.table.header = {"block", "potential"};
        json blocks = json::array();
        for (std::size_t k = 0; k < mj.partition.block_count(); ++k) {
            const std::string b = mj.partition.universe().format(mj.partition.blocks()[k]);
            o.table.rows.push_back({b, mj.potential[k] ? "yes" : "no"});
            blocks.push_back({{"block", b}, {"potential", static_cast<bool>(mj.potential[k])}});
        }
        o.record = {{"partition", to_string(mj.partition)}, {"blocks", blocks}};
        return o;
    }

    const Scenario& s_;
    const Environment& env_;
    const RunOptions& opt_;
};

std::string command_line(const Command& c) {
    std::string s = c.verb;
    for (const auto& a : c.args) s += ' ' + a;
    return s;
}

}  // namespace

nlohmann::json run_scenario(const Scenario& s, const RunOptions& options, std::ostream& out) {
    Runner runner(s, options);
    json results = json::array();
    bool first_stdout = true;
    for (std::size_t i = 0; i < s.statements.size(); ++i) {
        const auto* cmd = std::get_if<Command>(&s.statements[i]);
        if (!cmd) continue;
        Output o;
        try {
            o = runner.run(*cmd, i);
        } catch (const std::exception& e) {
            throw RuntimeFailure("line " + std::to_string(s.lines.at(i)) + ": " + command_line(*cmd) +
                                 ": " + e.what());
        }
        json record = {{"command", command_line(*cmd)}, {"result", o.record}};

        std::string rendered;
        switch (options.format) {
            case Format::Text:
                rendered = "# " + command_line(*cmd) + "\n" +
                           (o.text_override.empty() ? to_text(o.table) : o.text_override);
                for (const auto& n : o.notes) rendered += n + "\n";
                break;
            case Format::Csv:
                rendered = "# " + command_line(*cmd) + "\n" + to_csv(o.table);
                break;
            case Format::Json:
                rendered = record.dump(2) + "\n";
                break;
        }
        if (!cmd->output.empty()) {
            std::ofstream f(cmd->output, std::ios::binary);
            if (!f) {
                throw RuntimeFailure("line " + std::to_string(s.lines.at(i)) + ": cannot write '" +
                                     cmd->output + "'");
            }
            f << rendered;
        } else if (options.format != Format::Json) {
            if (!first_stdout) out << '\n';
            out << rendered;
            first_stdout = false;
        }
        results.push_back(std::move(record));
    }
    json doc = {{"seed", options.seed ? json(*options.seed) : (s.seed ? json(*s.seed) : json(nullptr))},
                {"results", results}};
    if (options.format == Format::Json) out << doc.dump(2) << '\n';
    return doc;
}

}  // namespace qmsets::scenario
