#include "defk/io.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace defk {

namespace {

[[noreturn]] void parse_fail(const std::string& source, int line, const std::string& what) {
    std::ostringstream msg;
    msg << source << ':' << line << ": " << what;
    throw Error(Fault::parse_error, msg.str());
}

}  // namespace

Configuration read_text(std::istream& in, const std::string& source) {
    std::vector<std::vector<int>> lines;
    std::string raw;
    int line_no = 0;
    int max_index = -1;
    while (std::getline(in, raw)) {
        ++line_no;
        const size_t hash = raw.find('#');
        if (hash != std::string::npos) raw.erase(hash);
        std::istringstream tokens(raw);
        std::vector<int> indices;
        std::string token;
        while (tokens >> token) {
            size_t parsed = 0;
            int value = 0;
            try {
                value = std::stoi(token, &parsed);
            } catch (const std::exception&) {
                parse_fail(source, line_no, "expected a point index, got \"" + token + "\"");
            }
            if (parsed != token.size()) {
                parse_fail(source, line_no, "expected a point index, got \"" + token + "\"");
            }
            if (value < 0) {
                parse_fail(source, line_no, "point indices must be nonnegative");
            }
            indices.push_back(value);
            max_index = std::max(max_index, value);
        }
        if (!indices.empty()) lines.push_back(std::move(indices));
    }
    if (lines.empty()) {
        parse_fail(source, line_no, "no configuration lines found");
    }
    return Configuration::validate(max_index + 1, std::move(lines));
}

Configuration read_json(std::istream& in, const std::string& source) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(in);
    } catch (const nlohmann::json::parse_error& e) {
        parse_fail(source, 1, e.what());
    }
    if (!doc.is_object() || !doc.contains("points") || !doc.contains("lines")) {
        parse_fail(source, 1, "expected an object with \"points\" and \"lines\"");
    }
    if (!doc["points"].is_number_integer()) {
        parse_fail(source, 1, "\"points\" must be an integer");
    }
    if (!doc["lines"].is_array()) {
        parse_fail(source, 1, "\"lines\" must be an array of index arrays");
    }
    std::vector<std::vector<int>> lines;
    for (const auto& entry : doc["lines"]) {
        if (!entry.is_array()) {
            parse_fail(source, 1, "\"lines\" must be an array of index arrays");
        }
        std::vector<int> indices;
        for (const auto& value : entry) {
            if (!value.is_number_integer()) {
                parse_fail(source, 1, "line entries must be integers");
            }
            indices.push_back(value.get<int>());
        }
        lines.push_back(std::move(indices));
    }
    return Configuration::validate(doc["points"].get<int>(), std::move(lines));
}

Configuration read_configuration_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw Error(Fault::file_not_found, "cannot open " + path);
    }
    char first = 0;
    while (in.get(first) && std::isspace(static_cast<unsigned char>(first))) {
    }
    in.unget();
    if (first == '{') return read_json(in, path);
    return read_text(in, path);
}

std::string to_text(const Configuration& config) {
    std::ostringstream out;
    out << "# " << config.points() << " points, " << config.line_count()
        << " lines of " << config.points_per_line() << "\n";
    for (const auto& line : config.lines()) {
        for (size_t i = 0; i < line.size(); ++i) {
            if (i) out << ' ';
            out << line[i];
        }
        out << '\n';
    }
    return out.str();
}

std::string to_json_text(const Configuration& config) {
    nlohmann::ordered_json doc;
    doc["points"] = config.points();
    doc["lines"] = config.lines();
    return doc.dump(2) + "\n";
}

}  // namespace defk
