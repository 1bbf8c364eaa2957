#include "signalling/io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "signalling/errors.hpp"

namespace signalling {

namespace {

using nlohmann::json;

std::string where(std::string_view source) { return std::string(source) + ": "; }

std::pair<std::size_t, std::size_t> line_and_column(std::string_view text, std::size_t offset) {
    std::size_t line = 1;
    std::size_t column = 1;
    for (std::size_t i = 0; i < offset && i < text.size(); ++i) {
        if (text[i] == '\n') {
            ++line;
            column = 1;
        } else {
            ++column;
        }
    }
    return {line, column};
}

std::string entry_literal(const json& e, std::string_view source, std::size_t i, std::size_t j) {
    const std::string at = "entry (" + std::to_string(i) + ", " + std::to_string(j) + ")";
    if (e.is_string()) return e.get<std::string>();
    if (e.is_number_integer()) return e.dump();
    if (e.is_number_float())
        throw ParseError(where(source) + at + " is a floating-point number; write it as a string such as \"1/3\" or \"0.25\"");
    throw ParseError(where(source) + at + " must be a rational string or an integer");
}

std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
    return s;
}

}  // namespace

UtilityMatrix parse_matrix_json(std::string_view text, std::string_view source) {
    json doc;
    try {
        doc = json::parse(text.begin(), text.end());
    } catch (const json::parse_error& e) {
        auto [line, column] = line_and_column(text, e.byte == 0 ? 0 : e.byte - 1);
        throw ParseError(where(source) + "line " + std::to_string(line) + ", column " + std::to_string(column) +
                         ": invalid JSON");
    }
    if (!doc.is_object()) throw ParseError(where(source) + "expected a JSON object with keys \"q\" and \"U\"");
    if (!doc.contains("U") || !doc["U"].is_array()) throw ParseError(where(source) + "missing array \"U\"");

    std::vector<std::vector<std::string>> rows;
    const auto& u = doc["U"];
    for (std::size_t i = 0; i < u.size(); ++i) {
        if (!u[i].is_array()) throw ParseError(where(source) + "row " + std::to_string(i) + " of \"U\" is not an array");
        auto& row = rows.emplace_back();
        for (std::size_t j = 0; j < u[i].size(); ++j) row.push_back(entry_literal(u[i][j], source, i, j));
    }
    if (rows.empty()) throw ParseError(where(source) + "\"U\" is empty");

    UtilityMatrix matrix = [&] {
        try {
            return parse_utility(rows);
        } catch (const ParseError& e) {
            throw ParseError(where(source) + e.what());
        } catch (const DimensionError& e) {
            throw DimensionError(where(source) + e.what());
        }
    }();
    if (doc.contains("q")) {
        if (!doc["q"].is_number_integer()) throw ParseError(where(source) + "\"q\" must be an integer");
        if (doc["q"].get<long long>() != matrix.q())
            throw DimensionError(where(source) + "\"q\" is " + doc["q"].dump() + " but \"U\" has side " +
                                 std::to_string(matrix.q()));
    }
    return matrix;
}

UtilityMatrix parse_matrix_csv(std::string_view text, std::string_view source) {
    std::vector<std::vector<Rational>> rows;
    std::vector<std::size_t> line_of_row;
    std::size_t line = 0;
    std::size_t start = 0;
    while (start <= text.size()) {
        auto end = text.find('\n', start);
        if (end == std::string_view::npos) end = text.size();
        ++line;
        auto content = trim(text.substr(start, end - start));
        start = end + 1;
        if (content.empty() || content.front() == '#') continue;
        auto& row = rows.emplace_back();
        line_of_row.push_back(line);
        std::size_t field_start = 0;
        std::size_t column = 0;
        while (true) {
            auto comma = content.find(',', field_start);
            auto field = content.substr(field_start, comma == std::string_view::npos ? comma : comma - field_start);
            ++column;
            try {
                row.push_back(Rational::parse(field));
            } catch (const ParseError& e) {
                throw ParseError(where(source) + "line " + std::to_string(line) + ", column " +
                                 std::to_string(column) + ": " + e.what());
            }
            if (comma == std::string_view::npos) break;
            field_start = comma + 1;
        }
    }
    if (rows.empty()) throw ParseError(where(source) + "no matrix rows found");
    for (std::size_t i = 0; i < rows.size(); ++i)
        if (rows[i].size() != rows.size())
            throw DimensionError(where(source) + "line " + std::to_string(line_of_row[i]) + ": row has " +
                                 std::to_string(rows[i].size()) + " entries, expected " + std::to_string(rows.size()));
    return UtilityMatrix::from_rows(rows);
}

UtilityMatrix parse_matrix(std::string_view text, std::string_view source) {
    auto first = text.find_first_not_of(" \t\r\n");
    if (first == std::string_view::npos) throw ParseError(where(source) + "empty input");
    return text[first] == '{' ? parse_matrix_json(text, source) : parse_matrix_csv(text, source);
}

std::string read_text_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError(path + ": cannot open file");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    if (in.bad()) throw IoError(path + ": read failed");
    return buffer.str();
}

UtilityMatrix read_matrix_file(const std::string& path) { return parse_matrix(read_text_file(path), path); }

std::string format_matrix_json(const UtilityMatrix& u) {
    json rows = json::array();
    for (const auto& r : u.rows()) {
        json row = json::array();
        for (const auto& e : r) row.push_back(e.to_string());
        rows.push_back(row);
    }
    json doc = {{"q", u.q()}, {"U", rows}};
    return doc.dump(2) + "\n";
}

std::string format_matrix_csv(const UtilityMatrix& u) {
    std::string out;
    for (const auto& r : u.rows()) {
        for (std::size_t j = 0; j < r.size(); ++j) {
            if (j) out += ',';
            out += r[j].to_string();
        }
        out += '\n';
    }
    return out;
}

}  // namespace signalling
