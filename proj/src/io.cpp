#include "nsjac/io.hpp"

#include <charconv>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>

namespace nsjac {

namespace {

std::string_view strip(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
    return s;
}

template <typename T>
T parse_number(std::string_view token, const std::string& what) {
    T value{};
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (token.empty() || ec != std::errc() || ptr != token.data() + token.size()) {
        throw InvalidInput("curve file: bad " + what + " '" + std::string(token) + "'");
    }
    return value;
}

std::vector<std::string_view> split_ws(std::string_view s) {
    std::vector<std::string_view> out;
    std::size_t k = 0;
    while (k < s.size()) {
        while (k < s.size() && (s[k] == ' ' || s[k] == '\t')) ++k;
        const auto start = k;
        while (k < s.size() && s[k] != ' ' && s[k] != '\t') ++k;
        if (k > start) out.push_back(s.substr(start, k - start));
    }
    return out;
}

struct TailEntry {
    int i;
    int j;
    std::string value;
    int line;
};

}  // namespace

CurveFile parse_curve_file(std::string_view text) {
    std::optional<std::uint64_t> p;
    std::optional<std::string> ext;
    std::optional<int> n;
    std::optional<int> s;
    std::vector<TailEntry> entries;

    int line_no = 0;
    std::size_t start = 0;
    while (start <= text.size()) {
        const auto end = text.find('\n', start);
        std::string_view line = text.substr(start, end == std::string_view::npos ? std::string_view::npos : end - start);
        ++line_no;
        if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
        line = strip(line);
        const std::string where = "curve file line " + std::to_string(line_no);
        if (!line.empty()) {
            if (const auto eq = line.find('='); eq != std::string_view::npos) {
                const auto key = strip(line.substr(0, eq));
                const auto value = strip(line.substr(eq + 1));
                auto once = [&](bool seen) {
                    if (seen) throw InvalidInput(where + ": duplicate key '" + std::string(key) + "'");
                };
                if (key == "p") {
                    once(p.has_value());
                    p = parse_number<std::uint64_t>(value, "p");
                } else if (key == "ext") {
                    once(ext.has_value());
                    ext = std::string(value);
                } else if (key == "n") {
                    once(n.has_value());
                    n = parse_number<int>(value, "n");
                } else if (key == "s") {
                    once(s.has_value());
                    s = parse_number<int>(value, "s");
                } else {
                    throw InvalidInput(where + ": unknown key '" + std::string(key) + "'");
                }
            } else {
                const auto tokens = split_ws(line);
                if (tokens.size() != 4 || tokens[0] != "c") throw InvalidInput(where + ": expected 'c <i> <j> <value>'");
                entries.push_back({parse_number<int>(tokens[1], "exponent"), parse_number<int>(tokens[2], "exponent"),
                                   std::string(tokens[3]), line_no});
            }
        }
        if (end == std::string_view::npos) break;
        start = end + 1;
    }
    if (!p) throw InvalidInput("curve file: missing p");
    if (!n) throw InvalidInput("curve file: missing n");
    if (!s) throw InvalidInput("curve file: missing s");

    FieldSpec spec{*p, std::nullopt};
    if (ext) {
        std::vector<std::uint64_t> modulus;
        std::stringstream ss(*ext);
        std::string part;
        while (std::getline(ss, part, ',')) modulus.push_back(parse_number<std::uint64_t>(strip(part), "ext coefficient"));
        spec.ext_modulus = std::move(modulus);
    }
    const Field field(spec);

    std::map<std::pair<int, int>, int> seen;
    std::vector<BiPoly::Term> terms;
    for (const auto& e : entries) {
        if (e.i < 0 || e.j < 0) throw InvalidInput("curve file line " + std::to_string(e.line) + ": negative exponent");
        if (!seen.emplace(std::pair{e.i, e.j}, e.line).second) {
            throw InvalidInput("curve file line " + std::to_string(e.line) + ": repeated coefficient");
        }
        std::string_view v = e.value;
        const bool negative = !v.empty() && v.front() == '-';
        if (negative) v.remove_prefix(1);
        Fe c = field.parse(v);
        if (negative) c = -c;
        terms.push_back({e.i, e.j, c});
    }
    return {Curve(field, *n, *s, BiPoly::from_terms(field, terms)), ext.has_value()};
}

std::string format_curve_file(const Curve& curve) {
    const Field& f = curve.field();
    std::string out = "p=" + std::to_string(f.characteristic()) + "\n";
    if (!f.is_prime_field()) {
        out += "ext=";
        const auto& m = f.modulus();
        for (std::size_t k = 0; k < m.size(); ++k) out += (k ? "," : "") + std::to_string(m[k]);
        out += "\n";
    }
    out += "n=" + std::to_string(curve.n()) + "\ns=" + std::to_string(curve.s()) + "\n";
    const BiPoly& t = curve.tail();
    for (int j = 0; j <= t.deg_y(); ++j) {
        const UniPoly row = t.y_coeff(j);
        for (int i = 0; i <= row.degree(); ++i) {
            if (!row.coeff(i).is_zero()) out += "c " + std::to_string(i) + " " + std::to_string(j) + " " + row.coeff(i).to_string() + "\n";
        }
    }
    return out;
}

std::string read_text_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InvalidInput("cannot open '" + path + "'");
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

}  // namespace nsjac
