#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace isotri {

/// A subset of the N x N grid as a word-packed bit matrix: one run of
/// 64-bit words per row, bit b of row a set iff cell (a, b) is present.
/// Rows and columns are 0-based throughout. Cardinality is kept cached.
class GridSet {
public:
    explicit GridSet(int side);

    int side() const { return side_; }
    std::int64_t cardinality() const { return cardinality_; }
    double density() const {
        return static_cast<double>(cardinality_) /
               (static_cast<double>(side_) * static_cast<double>(side_));
    }

    bool test(int row, int col) const;
    void set(int row, int col, bool value);

    int words_per_row() const { return words_per_row_; }
    /// Raw packed words of one row (words_per_row() entries).
    const std::uint64_t* row(int r) const { return words_.data() + static_cast<std::size_t>(r) * static_cast<std::size_t>(words_per_row_); }

    /// Parse the text format: N lines of exactly N characters '0'/'1'.
    /// Throws ParseError with 1-based line/column diagnostics.
    static GridSet from_text(const std::string& text);
    static GridSet from_stream(std::istream& in);
    /// N lines of N characters, '\n'-terminated.
    std::string to_text() const;

    std::vector<std::pair<int, int>> points() const;
    static GridSet from_points(int side, const std::vector<std::pair<int, int>>& pts);

    friend bool operator==(const GridSet& a, const GridSet& b) {
        return a.side_ == b.side_ && a.words_ == b.words_;
    }

private:
    int side_;
    int words_per_row_;
    std::int64_t cardinality_;
    std::vector<std::uint64_t> words_;
};

} // namespace isotri
