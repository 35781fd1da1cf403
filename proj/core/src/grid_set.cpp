#include "isotri/grid_set.hpp"

#include <istream>
#include <sstream>
#include <stdexcept>

#include "isotri/errors.hpp"

namespace isotri {

GridSet::GridSet(int side)
    : side_(side),
      words_per_row_((side + 63) / 64),
      cardinality_(0),
      words_(static_cast<std::size_t>(side) * static_cast<std::size_t>((side + 63) / 64), 0) {
    if (side < 1) throw std::invalid_argument("grid side must be >= 1");
}

bool GridSet::test(int row, int col) const {
    const std::uint64_t w = words_[static_cast<std::size_t>(row) * static_cast<std::size_t>(words_per_row_) +
                                   static_cast<std::size_t>(col / 64)];
    return (w >> (col % 64)) & 1u;
}

void GridSet::set(int row, int col, bool value) {
    std::uint64_t& w = words_[static_cast<std::size_t>(row) * static_cast<std::size_t>(words_per_row_) +
                              static_cast<std::size_t>(col / 64)];
    const std::uint64_t bit = std::uint64_t{1} << (col % 64);
    const bool was = w & bit;
    if (value && !was) {
        w |= bit;
        ++cardinality_;
    } else if (!value && was) {
        w &= ~bit;
        --cardinality_;
    }
}

GridSet GridSet::from_text(const std::string& text) {
    std::istringstream in(text);
    return from_stream(in);
}

GridSet GridSet::from_stream(std::istream& in) {
    std::vector<std::string> lines;
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty() && in.peek() == std::char_traits<char>::eof()) break;
        lines.push_back(line);
    }
    while (!lines.empty() && lines.back().empty()) lines.pop_back();
    if (lines.empty()) throw ParseError("empty grid file", 1, 1);

    const int n = static_cast<int>(lines[0].size());
    if (n == 0) throw ParseError("first grid line is empty", 1, 1);
    if (static_cast<int>(lines.size()) != n) {
        throw ParseError("grid is not square: " + std::to_string(lines.size()) + " lines of width " +
                             std::to_string(n),
                         static_cast<int>(lines.size()), 1);
    }
    GridSet g(n);
    for (int r = 0; r < n; ++r) {
        if (static_cast<int>(lines[static_cast<std::size_t>(r)].size()) != n) {
            throw ParseError("grid line has width " + std::to_string(lines[static_cast<std::size_t>(r)].size()) +
                                 ", expected " + std::to_string(n),
                             r + 1, static_cast<int>(lines[static_cast<std::size_t>(r)].size()) + 1);
        }
        for (int c = 0; c < n; ++c) {
            const char ch = lines[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)];
            if (ch == '1') {
                g.set(r, c, true);
            } else if (ch != '0') {
                throw ParseError(std::string("invalid grid character '") + ch + "', expected '0' or '1'",
                                 r + 1, c + 1);
            }
        }
    }
    return g;
}

std::string GridSet::to_text() const {
    std::string out;
    out.reserve(static_cast<std::size_t>(side_) * static_cast<std::size_t>(side_ + 1));
    for (int r = 0; r < side_; ++r) {
        for (int c = 0; c < side_; ++c) out.push_back(test(r, c) ? '1' : '0');
        out.push_back('\n');
    }
    return out;
}

std::vector<std::pair<int, int>> GridSet::points() const {
    std::vector<std::pair<int, int>> pts;
    pts.reserve(static_cast<std::size_t>(cardinality_));
    for (int r = 0; r < side_; ++r)
        for (int c = 0; c < side_; ++c)
            if (test(r, c)) pts.emplace_back(r, c);
    return pts;
}

GridSet GridSet::from_points(int side, const std::vector<std::pair<int, int>>& pts) {
    GridSet g(side);
    for (const auto& [r, c] : pts) {
        if (r < 0 || r >= side || c < 0 || c >= side)
            throw std::invalid_argument("grid point (" + std::to_string(r) + "," + std::to_string(c) +
                                        ") outside side-" + std::to_string(side) + " grid");
        g.set(r, c, true);
    }
    return g;
}

} // namespace isotri
