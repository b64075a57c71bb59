#include "cdslab/text_io.hpp"

#include <sstream>
#include <vector>

#include "cdslab/errors.hpp"

namespace cdslab {

namespace {

std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return "";
    const auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

bool is_bit_row(const std::string& s) { return !s.empty() && s.find_first_not_of("01") == std::string::npos; }

}  // namespace

F2Matrix read_matrix(std::istream& in) {
    std::vector<std::string> rows;
    std::string line;
    while (std::getline(in, line)) {
        line = trim(line);
        if (line.empty()) {
            if (rows.empty()) continue;
            break;
        }
        if (!is_bit_row(line)) throw ContractViolation("matrix text: row " + std::to_string(rows.size() + 1) + " has characters other than '0'/'1'");
        rows.push_back(line);
    }
    return F2Matrix::from_rows(rows);
}

F2Matrix parse_matrix(const std::string& text) {
    std::istringstream in(text);
    F2Matrix m = read_matrix(in);
    if (m.rows() == 0) throw ContractViolation("matrix text: no rows");
    return m;
}

std::string format_matrix(const F2Matrix& m) {
    std::string s = m.to_string();
    if (m.rows() > 0) s += '\n';
    return s;
}

RootedGraph parse_graph(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        line = trim(line);
        if (!line.empty()) break;
    }
    if (line.empty()) throw ContractViolation("graph text: empty input");
    if (is_bit_row(line) && line.size() > 1) return RootedGraph(parse_matrix(text));

    std::istringstream header(line);
    long n = 0, r1 = 0, r2 = 0;
    std::string extra;
    if (!(header >> n >> r1 >> r2) || (header >> extra))
        throw ContractViolation("graph text: header must be 'n root1 root2'");
    if (n < 2 || r1 < 1 || r2 < 1 || r1 > n || r2 > n)
        throw ContractViolation("graph text: header values out of range");
    std::vector<std::pair<std::size_t, std::size_t>> edges;
    std::size_t line_no = 1;
    while (std::getline(in, line)) {
        ++line_no;
        line = trim(line);
        if (line.empty()) continue;
        std::istringstream row(line);
        long u = 0, v = 0;
        if (!(row >> u >> v) || (row >> extra) || u < 1 || v < 1 || u > n || v > n)
            throw ContractViolation("graph text: bad edge on line " + std::to_string(line_no));
        edges.emplace_back(static_cast<std::size_t>(u - 1), static_cast<std::size_t>(v - 1));
    }
    return RootedGraph::from_edges(static_cast<std::size_t>(n), static_cast<std::size_t>(r1 - 1),
                                   static_cast<std::size_t>(r2 - 1), edges);
}

std::string format_graph(const RootedGraph& g) {
    std::string s = std::to_string(g.size()) + " 1 " + std::to_string(g.size()) + "\n";
    for (auto [u, v] : g.edges()) s += std::to_string(u + 1) + " " + std::to_string(v + 1) + "\n";
    return s;
}

}  // namespace cdslab
