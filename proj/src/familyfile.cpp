#include "degenlift/familyfile.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <map>
#include <sstream>
#include <vector>

#include "degenlift/errors.hpp"

namespace degenlift {

namespace {

struct SourceLine {
    int number = 0;
    int offset = 0;  // column of text[0] minus one
    std::string text;
};

std::string strip_prefix(const ParseError& e)
{
    // what() is "line:col: message".
    const std::string w = e.what();
    const auto first = w.find(':');
    const auto second = first == std::string::npos ? first : w.find(':', first + 1);
    return second == std::string::npos ? w : w.substr(second + 2);
}

Poly parse_at(const std::string& text, const SourceLine& where, int column_offset)
{
    try {
        return Poly::parse(text);
    } catch (const ParseError& e) {
        throw ParseError(where.number, where.offset + column_offset + e.column(), strip_prefix(e));
    }
}

std::vector<std::string> split_words(const std::string& s)
{
    std::vector<std::string> out;
    std::string cur;
    for (char c : s) {
        if (std::isspace(static_cast<unsigned char>(c)) || c == ',') {
            if (!cur.empty()) {
                out.push_back(cur);
                cur.clear();
            }
        } else {
            cur += c;
        }
    }
    if (!cur.empty()) {
        out.push_back(cur);
    }
    return out;
}

int parse_int(const std::string& v, const SourceLine& where, int column)
{
    if (v.empty() || !std::all_of(v.begin(), v.end(), [](char c) {
            return std::isdigit(static_cast<unsigned char>(c));
        }) || v.size() > 6) {
        throw ParseError(where.number, where.offset + column, "expected a small integer, got '" + v + "'");
    }
    return std::stoi(v);
}

// Splits "coeff monomial" at the first blank outside parentheses.
std::pair<std::string, std::string> split_term(const std::string& s, int& second_col)
{
    int depth = 0;
    for (std::size_t i = 0; i < s.size(); ++i) {
        const char c = s[i];
        if (c == '(') {
            ++depth;
        } else if (c == ')') {
            --depth;
        } else if (depth == 0 && std::isspace(static_cast<unsigned char>(c))) {
            std::size_t j = i;
            while (j < s.size() && std::isspace(static_cast<unsigned char>(s[j]))) {
                ++j;
            }
            second_col = static_cast<int>(j);
            return {s.substr(0, i), s.substr(j)};
        }
    }
    second_col = 0;
    return {"", s};
}

}  // namespace

FamilySpec parse_family(std::string_view text)
{
    std::map<std::string, std::vector<SourceLine>> sections;
    std::map<std::string, int> section_line;
    std::string current;
    int number = 0;
    std::size_t pos = 0;
    int last_line = 1;
    while (pos <= text.size()) {
        const auto nl = text.find('\n', pos);
        std::string raw(text.substr(pos, nl == std::string_view::npos ? std::string_view::npos : nl - pos));
        pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
        ++number;
        last_line = number;
        if (!raw.empty() && raw.back() == '\r') {
            raw.pop_back();
        }
        const auto hash = raw.find('#');
        if (hash != std::string::npos) {
            raw.erase(hash);
        }
        std::size_t b = 0;
        while (b < raw.size() && std::isspace(static_cast<unsigned char>(raw[b]))) {
            ++b;
        }
        std::size_t e = raw.size();
        while (e > b && std::isspace(static_cast<unsigned char>(raw[e - 1]))) {
            --e;
        }
        if (b == e) {
            continue;
        }
        const std::string body = raw.substr(b, e - b);
        if (body.front() == '[') {
            if (body.back() != ']') {
                throw ParseError(number, static_cast<int>(b) + 1, "unterminated section header");
            }
            current = body.substr(1, body.size() - 2);
            if (current != "ambient" && current != "factors" && current != "f" &&
                current != "params") {
                throw ParseError(number, static_cast<int>(b) + 2, "unknown section [" + current + "]");
            }
            if (section_line.count(current)) {
                throw ParseError(number, static_cast<int>(b) + 1, "duplicate section [" + current + "]");
            }
            section_line[current] = number;
            sections[current];
            continue;
        }
        if (current.empty()) {
            throw ParseError(number, static_cast<int>(b) + 1, "content before the first section");
        }
        sections[current].push_back({number, static_cast<int>(b), body});
    }
    auto require_section = [&](const char* need) {
        if (!section_line.count(need)) {
            throw ParseError(last_line, 1, std::string("missing section [") + need + "]");
        }
    };
    require_section("ambient");

    FamilySpec spec;
    int n = -1;
    bool have_degree = false;
    for (const auto& ln : sections["ambient"]) {
        const auto eq = ln.text.find('=');
        if (eq == std::string::npos) {
            throw ParseError(ln.number, ln.offset + 1, "expected 'key = value'");
        }
        auto trim = [](std::string s) {
            while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) {
                s.pop_back();
            }
            std::size_t i = 0;
            while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) {
                ++i;
            }
            return s.substr(i);
        };
        const std::string key = trim(ln.text.substr(0, eq));
        const std::string value = trim(ln.text.substr(eq + 1));
        const int vcol = static_cast<int>(ln.text.find_first_not_of(" \t", eq + 1)) + 1;
        if (key == "n") {
            n = parse_int(value, ln, vcol);
        } else if (key == "degree") {
            spec.degree = parse_int(value, ln, vcol);
            have_degree = true;
        } else if (key == "coordinates") {
            spec.coordinates = split_words(value);
        } else if (key == "chart") {
            spec.chart = value;
        } else {
            throw ParseError(ln.number, ln.offset + 1, "unknown ambient key '" + key + "'");
        }
    }
    const int amb = section_line["ambient"];
    if (spec.coordinates.empty()) {
        throw ParseError(amb, 1, "[ambient] needs 'coordinates'");
    }
    if (!have_degree) {
        throw ParseError(amb, 1, "[ambient] needs 'degree'");
    }
    spec.n = n >= 0 ? n : static_cast<int>(spec.coordinates.size()) - 1;
    require_section("factors");
    require_section("f");
    for (const auto& ln : sections["params"]) {
        for (const auto& w : split_words(ln.text)) {
            spec.params.push_back(w);
        }
    }
    for (const auto& ln : sections["factors"]) {
        spec.factors.push_back(parse_at(ln.text, ln, 0));
    }
    auto is_param = [&](const std::string& v) {
        return std::find(spec.params.begin(), spec.params.end(), v) != spec.params.end();
    };
    auto is_coord = [&](const std::string& v) { return spec.coordinate_index(v) >= 0; };
    for (const auto& ln : sections["f"]) {
        int mcol = 0;
        const auto [ctext, mtext] = split_term(ln.text, mcol);
        const Poly coeff = ctext.empty() ? Poly(1) : parse_at(ctext, ln, 0);
        for (const auto& v : coeff.used_vars()) {
            if (!is_param(v)) {
                throw ParseError(ln.number, ln.offset + 1,
                                 "coefficient uses '" + v + "', which is not a parameter");
            }
        }
        const Poly mono = parse_at(mtext, ln, mcol);
        if (mono.size() != 1 || !mono.leading_coefficient().is_one()) {
            throw ParseError(ln.number, ln.offset + mcol + 1,
                             "expected a monomial with coefficient 1, got '" + mtext + "'");
        }
        for (const auto& v : mono.used_vars()) {
            if (!is_coord(v)) {
                throw ParseError(ln.number, ln.offset + mcol + 1,
                                 "monomial uses '" + v + "', which is not a coordinate");
            }
        }
        spec.f += coeff * mono;
    }
    spec.validate();
    return spec;
}

FamilySpec load_family(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw InvalidArgument("cannot open family file '" + path + "'");
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_family(buf.str());
}

std::string serialize_family(const FamilySpec& spec)
{
    std::ostringstream os;
    os << "[ambient]\n";
    os << "n = " << spec.n << "\n";
    os << "degree = " << spec.degree << "\n";
    os << "coordinates =";
    for (const auto& c : spec.coordinates) {
        os << " " << c;
    }
    os << "\n";
    if (!spec.chart.empty()) {
        os << "chart = " << spec.chart << "\n";
    }
    os << "\n[factors]\n";
    for (const auto& a : spec.factors) {
        os << a.str() << "\n";
    }
    if (!spec.params.empty()) {
        os << "\n[params]\n";
        for (std::size_t i = 0; i < spec.params.size(); ++i) {
            os << (i ? " " : "") << spec.params[i];
        }
        os << "\n";
    }
    os << "\n[f]\n";
    // Group by coordinate monomial, exponents in coordinate order.
    std::map<std::vector<int>, Poly, std::greater<>> groups;
    const auto& vars = spec.f.vars();
    for (const auto& [ex, c] : spec.f.terms()) {
        std::vector<int> key(spec.coordinates.size(), 0);
        std::map<std::string, int> rest;
        for (std::size_t i = 0; i < vars.size(); ++i) {
            const int ci = spec.coordinate_index(vars[i]);
            if (ci >= 0) {
                key[static_cast<std::size_t>(ci)] = ex[i];
            } else if (ex[i] > 0) {
                rest[vars[i]] = ex[i];
            }
        }
        groups[key] += Poly::monomial(c, rest);
    }
    for (const auto& [key, coeff] : groups) {
        if (coeff.is_zero()) {
            continue;
        }
        os << (coeff.is_constant() ? coeff.constant_term().str() : "(" + coeff.str() + ")") << " ";
        std::string mono;
        for (std::size_t i = 0; i < key.size(); ++i) {
            if (key[i] == 0) {
                continue;
            }
            mono += (mono.empty() ? "" : "*") + spec.coordinates[i];
            if (key[i] > 1) {
                mono += "^" + std::to_string(key[i]);
            }
        }
        os << (mono.empty() ? "1" : mono) << "\n";
    }
    return os.str();
}

}  // namespace degenlift
