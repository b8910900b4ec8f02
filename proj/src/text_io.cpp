#include "rskflags/text_io.hpp"

#include <sstream>

#include "json.hpp"
#include "rskflags/errors.hpp"

namespace rskflags {

namespace {

std::string strip(const std::string& s) {
    size_t a = s.find_first_not_of(" \t\r\n");
    if (a == std::string::npos) return "";
    size_t b = s.find_last_not_of(" \t\r\n");
    return s.substr(a, b - a + 1);
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> parts;
    std::string cur;
    std::istringstream in(s);
    while (std::getline(in, cur, sep)) parts.push_back(cur);
    if (!s.empty() && s.back() == sep) parts.emplace_back();
    return parts;
}

int parse_int(const std::string& s) {
    std::string t = strip(s);
    if (t.empty()) throw ParseError("empty number");
    size_t pos = 0;
    int v;
    try {
        v = std::stoi(t, &pos);
    } catch (const std::exception&) {
        throw ParseError("bad number '" + t + "'");
    }
    if (pos != t.size()) throw ParseError("bad number '" + t + "'");
    return v;
}

}  // namespace

Composition parse_sequence(const std::string& s) {
    Composition out;
    std::string t = strip(s);
    if (t.empty()) return out;
    for (const auto& part : split(t, ',')) out.push_back(parse_int(part));
    return out;
}

std::string format_sequence(const Composition& c) {
    std::string out;
    for (size_t i = 0; i < c.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(c[i]);
    }
    return out;
}

Tableau parse_tableau(const std::string& s) {
    Tableau t;
    std::string body = strip(s);
    if (body.empty()) return t;
    for (const auto& row : split(body, ';')) t.rows.push_back(parse_sequence(row));
    return t;
}

std::string format_tableau(const Tableau& t) {
    std::string out;
    for (size_t r = 0; r < t.rows.size(); ++r) {
        if (r) out += ';';
        out += format_sequence(t.rows[r]);
    }
    return out;
}

Tableau tableau_from_json(const std::string& text) {
    nlohmann::json j = nlohmann::json::parse(text);
    return Tableau{j.at("rows").get<std::vector<std::vector<int>>>()};
}

std::string tableau_to_json(const Tableau& t) {
    nlohmann::json j;
    j["rows"] = t.rows;
    return j.dump();
}

BiArray parse_array(const std::string& s, ArrayOrder order) {
    std::string body = strip(s);
    BiArray a;
    a.order = order;
    if (body.empty() || body == "/") return a;
    auto halves = split(body, '/');
    if (halves.size() != 2) throw ParseError("array needs exactly one '/'");
    a.top = parse_sequence(halves[0]);
    a.bottom = parse_sequence(halves[1]);
    validate_array(a);
    return a;
}

std::string format_array(const BiArray& a) {
    return format_sequence(a.top) + " / " + format_sequence(a.bottom);
}

RelPosMatrix parse_matrix(const std::string& s) {
    RelPosMatrix m;
    std::string body = strip(s);
    if (body.empty()) return m;
    for (const auto& row : split(body, ';')) m.entries.push_back(parse_sequence(row));
    validate_matrix(m);
    return m;
}

std::string format_matrix(const RelPosMatrix& m) {
    std::string out;
    for (int r = 0; r < m.num_rows(); ++r) {
        if (r) out += ';';
        out += format_sequence(m.entries[r]);
    }
    return out;
}

}  // namespace rskflags
