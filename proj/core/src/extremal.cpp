#include "isotri/extremal.hpp"

#include <utility>
#include <vector>

namespace isotri {

namespace {

/// Given two distinct grid points, the up-to-six third points that would
/// complete a right-isosceles configuration containing both. Roles: the
/// apex P1, P2 = P1 + (m,n), P3 = P1 + (-n,m); the new point and the
/// existing one can occupy any two of the three roles, and when they are
/// {P2, P3} the apex exists only if the coordinate parities match.
struct ThirdPoints {
    int count = 0;
    std::pair<int, int> pts[6];

    void add(int r, int c, int side) {
        if (r >= 0 && r < side && c >= 0 && c < side) pts[count++] = {r, c};
    }
};

ThirdPoints third_points(int a, int b, int u, int v, int side) {
    ThirdPoints out;
    out.add(a - (v - b), b + (u - a), side); // new=P1, old=P2 -> P3
    out.add(a + (v - b), b + (a - u), side); // new=P1, old=P3 -> P2
    out.add(u - (b - v), v + (a - u), side); // new=P2, old=P1 -> P3
    out.add(u + (b - v), v + (u - a), side); // new=P3, old=P1 -> P2
    int p2 = a + b + u - v, q2 = u + v + b - a; // new=P2, old=P3 -> apex
    if ((p2 & 1) == 0 && (q2 & 1) == 0) out.add(p2 / 2, q2 / 2, side);
    p2 = a + u + v - b, q2 = a + b + v - u; // new=P3, old=P2 -> apex
    if ((p2 & 1) == 0 && (q2 & 1) == 0) out.add(p2 / 2, q2 / 2, side);
    return out;
}

class Search {
public:
    Search(int side, std::uint64_t budget)
        : side_(side),
          cells_(side * side),
          budget_(budget),
          bits_(static_cast<std::size_t>((cells_ + 63) / 64), 0),
          half_((side - 1) / 2) {}

    void run() { dfs(0); }

    int best() const { return best_; }
    const std::vector<int>& best_cells() const { return best_cells_; }
    std::uint64_t nodes() const { return nodes_; }
    bool exhausted() const { return exhausted_; }

private:
    bool in_bits(int cell) const {
        return (bits_[static_cast<std::size_t>(cell / 64)] >> (cell % 64)) & 1u;
    }
    void flip(int cell) { bits_[static_cast<std::size_t>(cell / 64)] ^= std::uint64_t{1} << (cell % 64); }

    bool completes_configuration(int cell) const {
        const int a = cell / side_, b = cell % side_;
        for (int other : chosen_) {
            const ThirdPoints t = third_points(a, b, other / side_, other % side_, side_);
            for (int i = 0; i < t.count; ++i) {
                if (in_bits(t.pts[i].first * side_ + t.pts[i].second)) return true;
            }
        }
        return false;
    }

    void dfs(int idx) {
        if (exhausted_) return;
        if (++nodes_ > budget_) {
            exhausted_ = true;
            return;
        }
        if (static_cast<int>(chosen_.size()) + (cells_ - idx) <= best_) return;
        if (idx == cells_) return;

        const int a = idx / side_, b = idx % side_;
        // Any set has a dihedral image whose row-major first cell falls in
        // the upper-left quadrant, so the first inclusion is restricted.
        const bool first_ok = !chosen_.empty() || (a <= half_ && b <= half_);
        if (first_ok && !completes_configuration(idx)) {
            chosen_.push_back(idx);
            flip(idx);
            if (static_cast<int>(chosen_.size()) > best_) {
                best_ = static_cast<int>(chosen_.size());
                best_cells_ = chosen_;
            }
            dfs(idx + 1);
            flip(idx);
            chosen_.pop_back();
        }
        dfs(idx + 1);
    }

    int side_;
    int cells_;
    std::uint64_t budget_;
    std::uint64_t nodes_ = 0;
    bool exhausted_ = false;
    std::vector<int> chosen_;
    std::vector<std::uint64_t> bits_;
    int best_ = 0;
    std::vector<int> best_cells_;
    int half_;
};

} // namespace

bool is_configuration_free(const GridSet& a) {
    const auto pts = a.points();
    const int side = a.side();
    for (const auto& [p, q] : pts) {
        for (const auto& [u, v] : pts) {
            if (p == u && q == v) continue;
            // (p,q) apex, (u,v) = apex + (m,n); rotated point apex + (-n,m).
            const int m = u - p, n = v - q;
            const int r = p - n, c = q + m;
            if (r >= 0 && r < side && c >= 0 && c < side && a.test(r, c)) return false;
        }
    }
    return true;
}

ExtremalResult max_configuration_free(int side, std::uint64_t node_budget) {
    ExtremalResult result{side, 0, GridSet(side), 0, true};
    Search search(side, node_budget);
    search.run();

    result.max_size = search.best();
    result.nodes_explored = search.nodes();
    result.exact = !search.exhausted();
    for (int cell : search.best_cells()) result.witness.set(cell / side, cell % side, true);
    return result;
}

} // namespace isotri
