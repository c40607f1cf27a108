// qmsets: runs a scenario file and prints tables or structured records.

#include <fstream>
#include <iostream>
#include <iterator>
#include <charconv>

#include "CLI11.hpp"
#include "qmsets/scenario.hpp"

namespace {

namespace sc = qmsets::scenario;

constexpr int kUsage = 1;
constexpr int kParse = 2;
constexpr int kRuntime = 3;

bool read_input(const std::string& path, std::string& text) {
    if (path == "-") {
        text.assign(std::istreambuf_iterator<char>(std::cin), {});
        return true;
    }
    std::ifstream in(path, std::ios::binary);
    if (!in) return false;
    text.assign(std::istreambuf_iterator<char>(in), {});
    return true;
}

bool apply_bound(const std::string& spec, sc::Bounds& bounds, std::string& why) {
    const auto eq = spec.find('=');
    if (eq == std::string::npos) {
        why = "expected key=N";
        return false;
    }
    const std::string key = spec.substr(0, eq);
    std::size_t value = 0;
    const char* first = spec.data() + eq + 1;
    const char* last = spec.data() + spec.size();
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc{} || ptr != last || first == last || value == 0) {
        why = "bound must be a positive integer";
        return false;
    }
    if (key == "partitions") bounds.partitions = value;
    else if (key == "group") bounds.group = value;
    else if (key == "kets") bounds.kets = value;
    else {
        why = "unknown bound '" + key + "' (partitions, group, kets)";
        return false;
    }
    return true;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Run a QM/sets scenario: ket tables, measurements, partitions and orbits."};
    app.set_version_flag("--version", "qmsets 0.1.0");

    std::string input;
    std::string format = "text";
    std::optional<std::uint64_t> seed;
    bool cyclic_order = false;
    bool no_decimals = false;
    bool canonical = false;
    std::vector<std::string> bound_specs;
    std::string records_path;

    app.add_option("input", input, "Scenario file ('-' reads standard input)")->required();
    app.add_option("--format", format, "Output format")
        ->check(CLI::IsMember({"text", "csv", "json"}));
    app.add_option("--seed", seed, "Seed for sampling commands (overrides the scenario seed)");
    app.add_flag("--cyclic-order", cyclic_order,
                 "Ket-table rows by descending size, cyclic runs first, empty set last");
    app.add_option("--bound", bound_specs, "Enumeration limit: partitions=N, group=N or kets=N")
        ->take_all();
    app.add_flag("--no-decimals", no_decimals, "Print probabilities as exact fractions only");
    app.add_option("--records", records_path, "Also write the structured records (JSON) to this file");
    app.add_flag("--canonical", canonical, "Print the scenario in canonical form and exit");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e, std::cout, std::cerr);
        return rc == 0 ? 0 : kUsage;
    }

    sc::RunOptions options;
    options.format = format == "csv" ? sc::Format::Csv : format == "json" ? sc::Format::Json : sc::Format::Text;
    options.seed = seed;
    options.cyclic_order = cyclic_order;
    options.decimals = !no_decimals;
    for (const auto& b : bound_specs) {
        std::string why;
        if (!apply_bound(b, options.bounds, why)) {
            std::cerr << "qmsets: --bound " << b << ": " << why << '\n';
            return kUsage;
        }
    }

    std::string text;
    if (!read_input(input, text)) {
        std::cerr << "qmsets: cannot read '" << input << "'\n";
        return kUsage;
    }

    sc::Scenario scenario;
    try {
        scenario = sc::parse_scenario(text, options.bounds, seed.has_value());
    } catch (const qmsets::Error& e) {
        std::cerr << input << ": " << e.what() << '\n';
        return kParse;
    }

    if (canonical) {
        std::cout << sc::serialize(scenario);
        return 0;
    }

    nlohmann::json records;
    try {
        records = sc::run_scenario(scenario, options, std::cout);
    } catch (const qmsets::Error& e) {
        std::cout.flush();
        std::cerr << input << ": " << e.what() << '\n';
        return kRuntime;
    }

    if (!records_path.empty()) {
        std::ofstream f(records_path, std::ios::binary);
        if (!f) {
            std::cerr << "qmsets: cannot write '" << records_path << "'\n";
            return kRuntime;
        }
        f << records.dump(2) << '\n';
    }
    return 0;
}
