#include "maghom/io.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"
#include "maghom/errors.hpp"

namespace maghom {

namespace {

std::string trim(const std::string& s) {
    std::size_t a = s.find_first_not_of(" \t\r\n");
    if (a == std::string::npos) return "";
    std::size_t b = s.find_last_not_of(" \t\r\n");
    return s.substr(a, b - a + 1);
}

bool is_infinite_literal(const std::string& s) {
    return s == "inf" || s == "+inf" || s == "-inf" || s == "Infinity" || s == "infinity" ||
           s == "oo";
}

// Exact rational from a distance literal; accepts "p/q", integers, plain
// decimals, and scientific notation (from shortest-round-trip float output).
rat parse_distance(const std::string& raw) {
    std::string s = trim(raw);
    if (s.empty()) throw input_error("empty distance entry");
    if (is_infinite_literal(s)) throw infinite_distance();
    std::size_t e = s.find_first_of("eE");
    if (e == std::string::npos || s.find('/') != std::string::npos) return rat::parse(s);
    rat mantissa = rat::parse(s.substr(0, e));
    std::string exp_part = s.substr(e + 1);
    if (exp_part.empty()) throw input_error("malformed number: '" + s + "'");
    bool neg = exp_part[0] == '-';
    if (exp_part[0] == '+' || exp_part[0] == '-') exp_part = exp_part.substr(1);
    rat exp10 = rat::parse(exp_part);
    if (!exp10.is_integer()) throw input_error("malformed exponent in '" + s + "'");
    mpz_class pow10;
    mpz_ui_pow_ui(pow10.get_mpz_t(), 10, exp10.numerator().get_ui());
    return neg ? mantissa / rat(mpz_class(pow10), mpz_class(1))
               : mantissa * rat(mpz_class(pow10), mpz_class(1));
}

rat distance_from_json(const nlohmann::json& v) {
    if (v.is_string()) return parse_distance(v.get<std::string>());
    if (v.is_number_unsigned())
        return rat(mpz_class(std::to_string(v.get<unsigned long long>())), mpz_class(1));
    if (v.is_number_integer()) return rat(mpz_class(std::to_string(v.get<long long>())), mpz_class(1));
    if (v.is_number_float()) {
        // The dump of a double is its shortest round-trip decimal; parsing
        // that recovers the value the user wrote.
        return parse_distance(nlohmann::json(v.get<double>()).dump());
    }
    throw input_error("distance entries must be numbers or rational strings");
}

std::vector<std::string> split(const std::string& line, char sep) {
    std::vector<std::string> out;
    std::string cell;
    std::istringstream ss(line);
    while (std::getline(ss, cell, sep)) out.push_back(trim(cell));
    if (!line.empty() && line.back() == sep) out.push_back("");
    return out;
}

}  // namespace

input_format parse_format(const std::string& name) {
    if (name == "metric-json") return input_format::metric_json;
    if (name == "dist-csv") return input_format::dist_csv;
    if (name == "graph-edges") return input_format::graph_edges;
    throw input_error("unknown format '" + name +
                      "' (expected metric-json, dist-csv or graph-edges)");
}

fin_metric parse_metric_json(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw input_error(std::string("invalid JSON: ") + e.what());
    }
    if (!j.is_object() || !j.contains("points") || !j.contains("distances"))
        throw input_error("metric JSON needs \"points\" and \"distances\"");
    std::vector<std::string> labels;
    for (const auto& p : j["points"]) {
        if (!p.is_string()) throw input_error("point labels must be strings");
        labels.push_back(p.get<std::string>());
    }
    std::vector<std::vector<rat>> dist;
    if (!j["distances"].is_array()) throw input_error("\"distances\" must be a matrix");
    for (const auto& row : j["distances"]) {
        if (!row.is_array()) throw input_error("\"distances\" must be a matrix");
        std::vector<rat> r;
        for (const auto& v : row) r.push_back(distance_from_json(v));
        dist.push_back(std::move(r));
    }
    return validate(std::move(dist), std::move(labels));
}

fin_metric parse_dist_csv(const std::string& text) {
    std::vector<std::string> lines;
    std::istringstream ss(text);
    std::string line;
    while (std::getline(ss, line)) {
        line = trim(line);
        if (!line.empty()) lines.push_back(line);
    }
    if (lines.empty()) throw input_error("empty CSV input");
    std::vector<std::string> labels = split(lines[0], ',');
    if (lines.size() != labels.size() + 1)
        throw input_error("CSV needs a header row plus one row per point");
    std::vector<std::vector<rat>> dist;
    for (std::size_t i = 1; i < lines.size(); ++i) {
        std::vector<std::string> cells = split(lines[i], ',');
        if (cells.size() != labels.size())
            throw input_error("CSV row " + std::to_string(i) + " has " +
                              std::to_string(cells.size()) + " cells, expected " +
                              std::to_string(labels.size()));
        std::vector<rat> r;
        for (const auto& c : cells) r.push_back(parse_distance(c));
        dist.push_back(std::move(r));
    }
    return validate(std::move(dist), std::move(labels));
}

fin_metric parse_graph_edges(const std::string& text) {
    std::vector<std::pair<std::string, std::string>> edges;
    std::vector<std::string> isolated;
    std::istringstream ss(text);
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(ss, line)) {
        ++lineno;
        std::size_t hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        std::istringstream ls(line);
        std::vector<std::string> tokens;
        std::string tok;
        while (ls >> tok) tokens.push_back(tok);
        if (tokens.empty()) continue;
        if (tokens.size() == 1) {
            isolated.push_back(tokens[0]);
        } else if (tokens.size() == 2) {
            edges.emplace_back(tokens[0], tokens[1]);
        } else {
            throw input_error("line " + std::to_string(lineno) +
                              ": expected 'u v' or a single vertex");
        }
    }
    return graph_to_metric(edges, isolated);
}

fin_metric load_space(const std::string& path, input_format format) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw input_error("cannot read file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    switch (format) {
        case input_format::metric_json: return parse_metric_json(buf.str());
        case input_format::dist_csv: return parse_dist_csv(buf.str());
        case input_format::graph_edges: return parse_graph_edges(buf.str());
    }
    throw input_error("unhandled format");
}

}  // namespace maghom
