#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "defk/catalog.hpp"
#include "defk/configuration.hpp"
#include "defk/enumerate.hpp"
#include "defk/errors.hpp"
#include "defk/io.hpp"
#include "defk/report.hpp"
#include "defk/sieve.hpp"

namespace {

using defk::Json;

struct InputSpec {
    std::string path;     // file path or "-" for stdin
    std::string catalog;  // catalog entry name
};

void add_input_options(CLI::App* cmd, InputSpec& input) {
    cmd->add_option("input", input.path, "configuration file (\"-\" for stdin)");
    cmd->add_option("--catalog", input.catalog, "catalog entry instead of a file");
}

defk::Configuration load_input(const InputSpec& input, std::string& label) {
    const bool have_path = !input.path.empty();
    const bool have_catalog = !input.catalog.empty();
    if (have_path == have_catalog) {
        throw std::invalid_argument("give either an input file or --catalog NAME");
    }
    if (have_catalog) {
        label = input.catalog;
        return defk::catalog_get(input.catalog).config;
    }
    if (input.path == "-") {
        label = "<stdin>";
        std::stringstream buffer;
        buffer << std::cin.rdbuf();
        std::string text = buffer.str();
        const size_t first = text.find_first_not_of(" \t\r\n");
        std::istringstream stream(text);
        if (first != std::string::npos && text[first] == '{') {
            return defk::read_json(stream, label);
        }
        return defk::read_text(stream, label);
    }
    label = input.path;
    return defk::read_configuration_file(input.path);
}

std::string scalar_to_text(const Json& value) {
    if (value.is_string()) return value.get<std::string>();
    return value.dump();
}

// Key/value listing of a report; nested arrays and objects rendered inline.
void print_generic_table(const Json& report, std::ostream& out) {
    for (const auto& [key, value] : report.items()) {
        out << key << ": " << scalar_to_text(value) << "\n";
    }
}

void print_sieve_table(const Json& report, bool csv, std::ostream& out) {
    const auto& rows = report["rows"];
    if (csv) {
        out << "n,k,params,rule,verdict,witnesses\n";
        for (const auto& row : rows) {
            std::string witnesses;
            for (const auto& [key, value] : row["witnesses"].items()) {
                if (!witnesses.empty()) witnesses += "; ";
                witnesses += key + "=" + scalar_to_text(value);
            }
            out << row["n"] << ',' << row["k"] << ','
                << row["params"].get<std::string>() << ','
                << row["rule"].get<std::string>() << ','
                << row["verdict"].get<std::string>() << ",\"" << witnesses << "\"\n";
        }
        return;
    }
    out << "  n   k  params       rule         verdict       witnesses\n";
    for (const auto& row : rows) {
        std::string witnesses;
        for (const auto& [key, value] : row["witnesses"].items()) {
            if (!witnesses.empty()) witnesses += "; ";
            witnesses += key + "=" + scalar_to_text(value);
        }
        std::ostringstream n_col, k_col;
        n_col << row["n"];
        k_col << row["k"];
        out << "  " << n_col.str();
        for (size_t i = n_col.str().size(); i < 4; ++i) out << ' ';
        out << k_col.str();
        for (size_t i = k_col.str().size(); i < 4; ++i) out << ' ';
        std::string params = row["params"].get<std::string>();
        out << params;
        for (size_t i = params.size(); i < 13; ++i) out << ' ';
        std::string rule = row["rule"].get<std::string>();
        out << rule;
        for (size_t i = rule.size(); i < 13; ++i) out << ' ';
        std::string verdict = row["verdict"].get<std::string>();
        out << verdict;
        for (size_t i = verdict.size(); i < 14; ++i) out << ' ';
        out << witnesses << "\n";
    }
}

int run_report_command(const InputSpec& input, const std::string& format,
                       Json (*builder)(const std::string&, const defk::Configuration&)) {
    std::string label;
    const defk::Configuration config = load_input(input, label);
    const Json report = builder(label, config);
    if (format == "json") {
        std::cout << report.dump(2) << "\n";
    } else {
        print_generic_table(report, std::cout);
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"analysis toolkit for combinatorial configurations"};
    app.require_subcommand(1);

    std::string format = "table";

    InputSpec check_input;
    auto* check_cmd = app.add_subcommand("check", "validate and profile a configuration");
    add_input_options(check_cmd, check_input);
    check_cmd->add_option("--format", format)->check(CLI::IsMember({"json", "table"}));

    InputSpec det_input;
    auto* det_cmd = app.add_subcommand("det", "exact determinants and formula agreement");
    add_input_options(det_cmd, det_input);
    det_cmd->add_option("--format", format)->check(CLI::IsMember({"json", "table"}));

    InputSpec decompose_input;
    auto* decompose_cmd =
        app.add_subcommand("decompose", "parallel classes and cycle structure");
    add_input_options(decompose_cmd, decompose_input);
    decompose_cmd->add_option("--format", format)->check(CLI::IsMember({"json", "table"}));

    InputSpec dual_input;
    auto* dual_cmd = app.add_subcommand("dual", "emit the dual configuration");
    add_input_options(dual_cmd, dual_input);
    dual_cmd->add_option("--format", format)->check(CLI::IsMember({"json", "table"}));

    int n_min = 1;
    int n_end = 0;
    std::vector<int> ks;
    std::string rule_filter = "all";
    auto* sieve_cmd = app.add_subcommand("sieve", "nonexistence rules over a range of orders");
    sieve_cmd->add_option("--n-min", n_min, "first order, inclusive");
    sieve_cmd->add_option("--n-max", n_end, "end of the order range, exclusive")->required();
    sieve_cmd->add_option("--k", ks, "deficiencies to test")->required()->delimiter(',');
    sieve_cmd->add_option("--rule", rule_filter, "restrict to one rule family")
        ->check(CLI::IsMember({"all", "k2", "tops", "bruck-ryser"}));
    sieve_cmd->add_option("--format", format)->check(CLI::IsMember({"json", "table", "csv"}));

    int enum_v = 0;
    int enum_r = 0;
    std::string emit_dir;
    std::optional<long long> node_limit;
    long long node_limit_raw = 0;
    auto* enum_cmd =
        app.add_subcommand("enumerate", "isomorph-free list of symmetric configurations");
    enum_cmd->add_option("--v", enum_v, "point count")->required();
    enum_cmd->add_option("--r", enum_r, "points per line")->required();
    enum_cmd->add_option("--emit", emit_dir, "directory for class representatives");
    enum_cmd->add_option("--node-limit", node_limit_raw, "abort after this many search nodes");
    enum_cmd->add_option("--format", format)->check(CLI::IsMember({"json", "table"}));

    auto* catalog_cmd = app.add_subcommand("catalog", "named reference configurations");
    catalog_cmd->require_subcommand(1);
    auto* catalog_list = catalog_cmd->add_subcommand("list", "all entries");
    catalog_list->add_option("--format", format)->check(CLI::IsMember({"json", "table"}));
    std::string show_name;
    auto* catalog_show = catalog_cmd->add_subcommand("show", "emit one entry");
    catalog_show->add_option("name", show_name)->required();
    catalog_show->add_option("--format", format)->check(CLI::IsMember({"json", "table"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (*check_cmd) return run_report_command(check_input, format, defk::check_report);
        if (*det_cmd) return run_report_command(det_input, format, defk::det_report);
        if (*decompose_cmd) {
            return run_report_command(decompose_input, format, defk::decompose_report);
        }

        if (*dual_cmd) {
            std::string label;
            const defk::Configuration config = load_input(dual_input, label);
            const defk::Configuration d = defk::dual(config);
            if (format == "json") {
                std::cout << defk::to_json_text(d);
            } else {
                std::cout << defk::to_text(d);
            }
            return 0;
        }

        if (*sieve_cmd) {
            if (n_end <= n_min || n_min < 1) {
                throw std::invalid_argument(
                    "--n-min must be >= 1 and below --n-max (end is exclusive)");
            }
            std::vector<defk::ParameterVerdict> rows;
            if (rule_filter == "all") {
                rows = defk::scan(n_min, n_end, ks);
            } else {
                std::sort(ks.begin(), ks.end());
                ks.erase(std::unique(ks.begin(), ks.end()), ks.end());
                for (int n = n_min; n < n_end; ++n) {
                    if (rule_filter == "bruck-ryser") {
                        rows.push_back(defk::sieve_bruck_ryser(n));
                    } else if (rule_filter == "k2") {
                        rows.push_back(defk::sieve_k2(n));
                    } else {
                        for (int k : ks) {
                            if (k >= 2) rows.push_back(defk::sieve_tops(n, k));
                        }
                    }
                }
            }
            const Json report = defk::sieve_report(rows);
            if (format == "json") {
                std::cout << report.dump(2) << "\n";
            } else {
                print_sieve_table(report, format == "csv", std::cout);
            }
            return 0;
        }

        if (*enum_cmd) {
            if (enum_cmd->count("--node-limit")) node_limit = node_limit_raw;
            defk::SearchBudget budget;
            budget.node_limit = node_limit;
            const auto classes = defk::enumerate_configurations(enum_v, enum_r, budget);
            const Json report = defk::enumerate_report(enum_v, enum_r, classes);
            if (!emit_dir.empty()) {
                std::filesystem::create_directories(emit_dir);
                for (size_t i = 0; i < classes.size(); ++i) {
                    std::ostringstream name;
                    name << enum_v << "_" << enum_r << "_class" << i << ".txt";
                    std::ofstream file(std::filesystem::path(emit_dir) / name.str());
                    file << defk::to_text(classes[i]);
                }
                std::ofstream summary(std::filesystem::path(emit_dir) / "summary.json");
                summary << report.dump(2) << "\n";
            }
            if (format == "json") {
                std::cout << report.dump(2) << "\n";
            } else {
                std::cout << "count: " << classes.size() << "\n";
                for (const auto& entry : report["classes"]) {
                    std::cout << "class " << entry["index"] << ": n=" << entry["n"]
                              << " k=" << entry["k"]
                              << " tops=" << scalar_to_text(entry["tops"]);
                    if (entry.contains("m")) std::cout << " m=" << entry["m"];
                    std::cout << "\n";
                }
            }
            return 0;
        }

        if (*catalog_list) {
            if (format == "json") {
                Json out;
                out["report"] = "catalog";
                Json entries = Json::array();
                for (const auto& entry : defk::catalog_entries()) {
                    Json item;
                    item["name"] = entry.name;
                    item["points"] = entry.config.points();
                    item["lines"] = entry.config.line_count();
                    item["points_per_line"] = entry.config.points_per_line();
                    item["notes"] = entry.notes;
                    entries.push_back(item);
                }
                out["entries"] = entries;
                std::cout << out.dump(2) << "\n";
            } else {
                for (const auto& entry : defk::catalog_entries()) {
                    std::cout << entry.name << "  (" << entry.config.points() << "_"
                              << entry.config.points_per_line() << ")  " << entry.notes
                              << "\n";
                }
            }
            return 0;
        }

        if (*catalog_show) {
            const defk::CatalogEntry& entry = defk::catalog_get(show_name);
            if (format == "json") {
                std::cout << defk::to_json_text(entry.config);
            } else {
                std::cout << defk::to_text(entry.config);
            }
            return 0;
        }
    } catch (const defk::Error& e) {
        if (format == "json") std::cout << defk::error_json(e).dump(2) << "\n";
        std::cerr << defk::fault_name(e.fault()) << ": " << e.what() << "\n";
        switch (e.fault()) {
            case defk::Fault::unknown_name:
            case defk::Fault::file_not_found:
            case defk::Fault::budget_exceeded:
                return 2;
            default:
                return 1;
        }
    } catch (const std::invalid_argument& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
