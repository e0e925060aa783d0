#include "perdet/io.hpp"

#include <cctype>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <vector>

namespace perdet {

namespace {

struct Line {
    std::string text;
    int number = 0;
};

// Reads the next line that contains anything but whitespace.
bool next_content_line(std::istream& in, Line& line, int& line_no) {
    std::string raw;
    while (std::getline(in, raw)) {
        ++line_no;
        if (raw.find_first_not_of(" \t\r\n") != std::string::npos) {
            line.text = raw;
            line.number = line_no;
            return true;
        }
    }
    return false;
}

// Whitespace-separated tokens with their 1-based starting columns.
std::vector<std::pair<std::string, int>> tokenize(const std::string& text) {
    std::vector<std::pair<std::string, int>> out;
    std::size_t pos = 0;
    while (pos < text.size()) {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
        if (pos >= text.size()) break;
        const std::size_t start = pos;
        while (pos < text.size() && !std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
        out.emplace_back(text.substr(start, pos - start), static_cast<int>(start) + 1);
    }
    return out;
}

int parse_dimension(const std::string& token, int line, int column) {
    try {
        std::size_t used = 0;
        const int n = std::stoi(token, &used);
        if (used != token.size() || n < 1) throw std::invalid_argument(token);
        return n;
    } catch (const std::exception&) {
        throw ParseError("expected a positive dimension, got '" + token + "'", line, column);
    }
}

} // namespace

Rational parse_rational(const std::string& token) {
    const auto slash = token.find('/');
    const std::string num_text = token.substr(0, slash);
    auto parse_int = [&](const std::string& part) -> Int {
        if (part.empty()) throw std::invalid_argument("empty integer in '" + token + "'");
        const std::size_t start = (part[0] == '-' || part[0] == '+') ? 1 : 0;
        if (start == part.size()) throw std::invalid_argument("bad integer '" + part + "'");
        for (std::size_t t = start; t < part.size(); ++t)
            if (!std::isdigit(static_cast<unsigned char>(part[t])))
                throw std::invalid_argument("bad integer '" + part + "'");
        // cpp_int's string constructor rejects a leading '+'
        return part[0] == '+' ? Int(part.substr(1)) : Int(part);
    };
    const Int num = parse_int(num_text);
    if (slash == std::string::npos) return Rational(num);
    const Int den = parse_int(token.substr(slash + 1));
    if (den == 0) throw std::invalid_argument("zero denominator in '" + token + "'");
    return make_rational(num, den);
}

SquareMatrix read_matrix(std::istream& in) {
    int line_no = 0;
    Line line;
    if (!next_content_line(in, line, line_no)) throw ParseError("empty input", 1, 1);

    auto header = tokenize(line.text);
    if (header.size() != 1)
        throw ParseError("dimension line must hold a single integer", line.number,
                         header.size() > 1 ? header[1].second : 1);
    const int n = parse_dimension(header[0].first, line.number, header[0].second);

    SquareMatrix a(n);
    for (int i = 1; i <= n; ++i) {
        if (!next_content_line(in, line, line_no))
            throw ParseError("expected " + std::to_string(n) + " matrix rows, got " +
                                 std::to_string(i - 1),
                             line_no + 1, 1);
        auto tokens = tokenize(line.text);
        if (static_cast<int>(tokens.size()) != n)
            throw ParseError("row " + std::to_string(i) + " has " +
                                 std::to_string(tokens.size()) + " entries, expected " +
                                 std::to_string(n),
                             line.number, 1);
        for (int j = 1; j <= n; ++j) {
            const auto& [token, column] = tokens[static_cast<std::size_t>(j - 1)];
            try {
                a.at(i, j) = parse_rational(token);
            } catch (const std::invalid_argument& e) {
                throw ParseError(e.what(), line.number, column);
            }
        }
    }
    if (next_content_line(in, line, line_no))
        throw ParseError("unexpected trailing content", line.number, 1);
    return a;
}

SquareMatrix read_matrix_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open '" + path + "'");
    return read_matrix(in);
}

void write_matrix(std::ostream& out, const SquareMatrix& a) {
    out << a.n() << '\n';
    for (int i = 1; i <= a.n(); ++i) {
        for (int j = 1; j <= a.n(); ++j) out << (j > 1 ? " " : "") << a.at(i, j);
        out << '\n';
    }
}

ZeroPattern read_pattern(std::istream& in) {
    int line_no = 0;
    Line line;
    if (!next_content_line(in, line, line_no)) throw ParseError("empty input", 1, 1);

    auto header = tokenize(line.text);
    if (header.size() != 2)
        throw ParseError("pattern header must be 'n kind' with kind sign|zerostar", line.number, 1);
    const int n = parse_dimension(header[0].first, line.number, header[0].second);
    PatternKind kind;
    if (header[1].first == "sign")
        kind = PatternKind::sign;
    else if (header[1].first == "zerostar")
        kind = PatternKind::zero_star;
    else
        throw ParseError("unknown pattern kind '" + header[1].first + "'", line.number,
                         header[1].second);

    std::vector<PatternCell> cells;
    cells.reserve(static_cast<std::size_t>(n) * static_cast<std::size_t>(n));
    for (int i = 1; i <= n; ++i) {
        if (!next_content_line(in, line, line_no))
            throw ParseError("expected " + std::to_string(n) + " pattern rows, got " +
                                 std::to_string(i - 1),
                             line_no + 1, 1);
        int row_cells = 0;
        for (std::size_t col = 0; col < line.text.size(); ++col) {
            const char ch = line.text[col];
            if (std::isspace(static_cast<unsigned char>(ch))) continue;
            PatternCell cell;
            try {
                cell = ZeroPattern::cell_from_char(ch);
            } catch (const std::invalid_argument& e) {
                throw ParseError(e.what(), line.number, static_cast<int>(col) + 1);
            }
            const bool legal = kind == PatternKind::sign
                                   ? cell != PatternCell::star
                                   : cell == PatternCell::zero || cell == PatternCell::star;
            if (!legal)
                throw ParseError(std::string("symbol '") + ch + "' not legal for this kind",
                                 line.number, static_cast<int>(col) + 1);
            cells.push_back(cell);
            ++row_cells;
        }
        if (row_cells != n)
            throw ParseError("row " + std::to_string(i) + " has " + std::to_string(row_cells) +
                                 " symbols, expected " + std::to_string(n),
                             line.number, 1);
    }
    if (next_content_line(in, line, line_no))
        throw ParseError("unexpected trailing content", line.number, 1);
    return ZeroPattern(n, kind, std::move(cells));
}

ZeroPattern read_pattern_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open '" + path + "'");
    return read_pattern(in);
}

void write_pattern(std::ostream& out, const ZeroPattern& gamma) {
    out << gamma.n() << ' '
        << (gamma.kind() == PatternKind::sign ? "sign" : "zerostar") << '\n';
    for (int i = 1; i <= gamma.n(); ++i) {
        for (int j = 1; j <= gamma.n(); ++j) out << ZeroPattern::cell_char(gamma.cell(i, j));
        out << '\n';
    }
}

Digraph read_digraph(std::istream& in) {
    int line_no = 0;
    Line line;
    if (!next_content_line(in, line, line_no)) throw ParseError("empty input", 1, 1);

    auto header = tokenize(line.text);
    if (header.size() != 1)
        throw ParseError("vertex-count line must hold a single integer", line.number, 1);
    const int n = parse_dimension(header[0].first, line.number, header[0].second);

    std::vector<std::pair<int, int>> arcs;
    while (next_content_line(in, line, line_no)) {
        auto tokens = tokenize(line.text);
        if (tokens.size() != 2)
            throw ParseError("arc line must be 'i j'", line.number, 1);
        const int i = parse_dimension(tokens[0].first, line.number, tokens[0].second);
        const int j = parse_dimension(tokens[1].first, line.number, tokens[1].second);
        if (i > n || j > n)
            throw ParseError("arc endpoint out of range", line.number, tokens[0].second);
        if (i == j) throw ParseError("self-loops are not allowed", line.number, tokens[0].second);
        arcs.emplace_back(i, j);
    }
    return Digraph(n, arcs);
}

void write_digraph(std::ostream& out, const Digraph& g) {
    out << g.n() << '\n';
    for (const auto& [i, j] : g.arcs()) out << i << ' ' << j << '\n';
}

} // namespace perdet
