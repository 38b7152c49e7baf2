#include "dm/textio.hpp"

#include <charconv>
#include <vector>

namespace dm {

namespace {

std::vector<std::string_view> split_lines(std::string_view text) {
    std::vector<std::string_view> lines;
    while (!text.empty()) {
        const std::size_t nl = text.find('\n');
        lines.push_back(text.substr(0, nl));
        if (nl == std::string_view::npos) break;
        text = text.substr(nl + 1);
    }
    return lines;
}

std::vector<std::string_view> split_fields(std::string_view line) {
    std::vector<std::string_view> fields;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
        std::size_t j = i;
        while (j < line.size() && line[j] != ' ' && line[j] != '\t') ++j;
        if (j > i) fields.push_back(line.substr(i, j - i));
        i = j;
    }
    return fields;
}

int parse_int(std::string_view s, int line_no, const char* what) {
    int value = 0;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
    if (ec != std::errc{} || ptr != s.data() + s.size())
        throw SyntaxError(line_no, std::string("bad ") + what + ": '" + std::string(s) + "'");
    return value;
}

int hex_value(char c, int line_no) {
    if (c >= '0' && c <= '9') return c - '0';
    if (c >= 'a' && c <= 'f') return c - 'a' + 10;
    if (c >= 'A' && c <= 'F') return c - 'A' + 10;
    throw SyntaxError(line_no, "bad hex digit in compact code");
}

SetSystem parse_compact(std::string_view token, int line_no) {
    const std::size_t colon = token.find(':');
    const int n = parse_int(token.substr(0, colon), line_no, "ground-set size");
    if (n < 0 || n > kMaxGroundSetSize)
        throw SyntaxError(line_no, "ground-set size out of range [0, 16]");
    const std::string_view hex = token.substr(colon + 1);
    const int bytes = ((1 << n) + 7) / 8;
    if (static_cast<int>(hex.size()) != 2 * bytes)
        throw SyntaxError(line_no, "compact code has wrong hex length, expected " +
                                       std::to_string(2 * bytes) + " digits");
    FeasibleFamily family(n);
    for (int b = 0; b < bytes; ++b) {
        const int byte = (hex_value(hex[static_cast<std::size_t>(2 * b)], line_no) << 4) |
                         hex_value(hex[static_cast<std::size_t>(2 * b) + 1], line_no);
        for (int bit = 0; bit < 8; ++bit) {
            if (!((byte >> bit) & 1)) continue;
            const SubsetMask m = static_cast<SubsetMask>(8 * b + bit);
            if (m >= family.subset_count())
                throw SyntaxError(line_no, "family bit beyond 2^n");
            family.set(m);
        }
    }
    return family;
}

}  // namespace

SetSystem parse_set_system(std::string_view text) {
    const std::vector<std::string_view> lines = split_lines(text);
    std::optional<SetSystem> family;
    bool saw_header = false;
    for (std::size_t i = 0; i < lines.size(); ++i) {
        const int line_no = static_cast<int>(i) + 1;
        const std::vector<std::string_view> fields = split_fields(lines[i]);
        if (fields.empty()) continue;
        if (!saw_header) {
            if (fields.size() == 1 && fields[0].find(':') != std::string_view::npos)
                return parse_compact(fields[0], line_no);
            if (fields[0] != "n" || fields.size() != 2)
                throw SyntaxError(line_no, "expected 'n <size>' or a compact 'n:<hex>' code");
            const int n = parse_int(fields[1], line_no, "ground-set size");
            if (n < 0 || n > kMaxGroundSetSize)
                throw SyntaxError(line_no, "ground-set size out of range [0, 16]");
            family.emplace(n);
            saw_header = true;
            continue;
        }
        if (fields[0] != "F")
            throw SyntaxError(line_no, "expected a feasible-set line 'F <labels>'");
        SubsetMask m = 0;
        if (fields.size() == 2 && fields[1] == "-") {
            // the empty set
        } else {
            if (fields.size() < 2)
                throw SyntaxError(line_no, "feasible-set line needs labels or '-'");
            for (std::size_t k = 1; k < fields.size(); ++k) {
                const int label = parse_int(fields[k], line_no, "element label");
                if (label < 1 || label > family->ground_size())
                    throw SyntaxError(line_no, "element label out of range [1, n]");
                const SubsetMask bit = element_bit(label - 1);
                if (m & bit) throw SyntaxError(line_no, "duplicate element label in set");
                m |= bit;
            }
        }
        if (family->test(m)) throw SyntaxError(line_no, "duplicate feasible set");
        family->set(m);
    }
    if (!family) throw SyntaxError(1, "empty input");
    return *std::move(family);
}

DeltaMatroid parse_dm(std::string_view text) {
    return DeltaMatroid(parse_set_system(text));
}

std::string encode_family_hex(const FeasibleFamily& family) {
    static const char digits[] = "0123456789abcdef";
    const int bytes = ((1 << family.ground_size()) + 7) / 8;
    std::string bits(static_cast<std::size_t>(bytes), '\0');
    family.for_each([&](SubsetMask m) {
        bits[m >> 3] = static_cast<char>(bits[m >> 3] | (1 << (m & 7)));
    });
    std::string out;
    for (int b = 0; b < bytes; ++b) {
        const unsigned byte = static_cast<unsigned char>(bits[static_cast<std::size_t>(b)]);
        out += digits[byte >> 4];
        out += digits[byte & 0xf];
    }
    return out;
}

std::string format_subset(SubsetMask m) {
    if (m == 0) return "-";
    std::string out;
    while (m) {
        const int e = std::countr_zero(m);
        m &= m - 1;
        if (!out.empty()) out += ' ';
        out += std::to_string(e + 1);
    }
    return out;
}

std::string format_dm(const DeltaMatroid& d, DmFormat style) {
    if (style == DmFormat::Compact)
        return std::to_string(d.ground_size()) + ":" + encode_family_hex(d.family());
    std::string out = "n " + std::to_string(d.ground_size()) + "\n";
    d.family().for_each([&](SubsetMask m) {
        out += "F ";
        out += format_subset(m);
        out += '\n';
    });
    return out;
}

SubsetMask parse_set_arg(std::string_view text, int n) {
    if (text == "0") return 0;
    SubsetMask m = 0;
    std::size_t start = 0;
    while (start <= text.size()) {
        const std::size_t comma = text.find(',', start);
        const std::string_view tok =
            text.substr(start, comma == std::string_view::npos ? comma : comma - start);
        int label = 0;
        const auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), label);
        if (ec != std::errc{} || ptr != tok.data() + tok.size() || tok.empty())
            throw Error("bad set argument '" + std::string(text) +
                        "': expected comma-separated labels or 0");
        if (label < 1 || label > n)
            throw Error("element label " + std::to_string(label) +
                        " out of range [1, " + std::to_string(n) + "]");
        const SubsetMask bit = element_bit(label - 1);
        if (m & bit) throw Error("duplicate element label in set argument");
        m |= bit;
        if (comma == std::string_view::npos) break;
        start = comma + 1;
    }
    return m;
}

std::string format_set_arg(SubsetMask m) {
    if (m == 0) return "0";
    std::string out;
    while (m) {
        const int e = std::countr_zero(m);
        m &= m - 1;
        if (!out.empty()) out += ',';
        out += std::to_string(e + 1);
    }
    return out;
}

std::string render_graph(const SymMatrixGF2& a) {
    std::string out = "loops:";
    for (int i = 0; i < a.dim(); ++i)
        if (a.get(i, i)) out += " " + std::to_string(i + 1);
    out += '\n';
    for (int i = 0; i < a.dim(); ++i)
        for (int j = i + 1; j < a.dim(); ++j)
            if (a.get(i, j))
                out += std::to_string(i + 1) + " " + std::to_string(j + 1) + "\n";
    return out;
}

SymMatrixGF2 parse_graph(std::string_view text, int n) {
    SymMatrixGF2 a(n);
    const std::vector<std::string_view> lines = split_lines(text);
    bool saw_loops = false;
    for (std::size_t i = 0; i < lines.size(); ++i) {
        const int line_no = static_cast<int>(i) + 1;
        std::vector<std::string_view> fields = split_fields(lines[i]);
        if (fields.empty()) continue;
        if (!saw_loops) {
            if (fields[0] != "loops:")
                throw SyntaxError(line_no, "expected a 'loops:' line");
            for (std::size_t k = 1; k < fields.size(); ++k) {
                const int v = parse_int(fields[k], line_no, "vertex label");
                if (v < 1 || v > n) throw SyntaxError(line_no, "vertex label out of range");
                a.set(v - 1, v - 1, true);
            }
            saw_loops = true;
            continue;
        }
        if (fields.size() != 2) throw SyntaxError(line_no, "expected an edge line 'i j'");
        const int u = parse_int(fields[0], line_no, "vertex label");
        const int v = parse_int(fields[1], line_no, "vertex label");
        if (u < 1 || u > n || v < 1 || v > n || u == v)
            throw SyntaxError(line_no, "bad edge endpoints");
        a.set(u - 1, v - 1, true);
    }
    if (!saw_loops) throw SyntaxError(1, "missing 'loops:' line");
    return a;
}

}  // namespace dm
