#include "isotri/json_io.hpp"

#include <algorithm>

#include <json.hpp>

#include "isotri/errors.hpp"

namespace isotri {

namespace {

using nlohmann::json;

json bound_check_json(const BoundCheck& c) {
    return json{{"value", c.lhs}, {"limit", c.rhs}, {"slack", c.slack}, {"pass", c.pass}};
}

json grid_json(const GridSet& g) {
    json rows = json::array();
    const std::string text = g.to_text();
    std::size_t pos = 0;
    for (int r = 0; r < g.side(); ++r) {
        rows.push_back(text.substr(pos, static_cast<std::size_t>(g.side())));
        pos += static_cast<std::size_t>(g.side()) + 1;
    }
    return json{{"side", g.side()}, {"rows", rows}};
}

} // namespace

std::string count_report_json(const GridSet& a, bool wraparound, int m, int n,
                              std::int64_t count) {
    json j{{"schema", "isotri.count/1"},
           {"side", a.side()},
           {"cardinality", a.cardinality()},
           {"wraparound", wraparound},
           {"difference", {m, n}},
           {"count", count}};
    return j.dump(2);
}

std::string count_table_json(const GridSet& a, bool wraparound,
                             const DifferenceCounts& counts) {
    auto entries = counts.entries();
    std::stable_sort(entries.begin(), entries.end(),
                     [](const DifferenceCounts::Entry& x, const DifferenceCounts::Entry& y) {
                         if (x.count != y.count) return x.count > y.count;
                         return std::make_pair(x.m, x.n) < std::make_pair(y.m, y.n);
                     });
    json table = json::array();
    for (const auto& e : entries)
        table.push_back(json{{"difference", {e.m, e.n}}, {"count", e.count}});
    json j{{"schema", "isotri.count_table/1"},
           {"side", a.side()},
           {"cardinality", a.cardinality()},
           {"wraparound", wraparound},
           {"table", table}};
    return j.dump(2);
}

std::string popular_json(const PopularDifferenceResult& r) {
    json j{{"schema", "isotri.popular/1"},
           {"side", r.side},
           {"alpha", r.alpha},
           {"epsilon", r.epsilon},
           {"method", r.method},
           {"wraparound", r.wraparound},
           {"difference", {r.m, r.n}},
           {"count", r.count},
           {"threshold", r.threshold},
           {"met", r.met}};
    if (r.method == "certificate") {
        j["support_degenerate"] = r.support_degenerate;
        if (r.certificate_bound)
            j["certificate_bound"] = *r.certificate_bound;
    }
    return j.dump(2);
}

std::string certificate_json(const RegularityCertificate& c) {
    json j{{"schema", "isotri.certificate/1"},
           {"epsilon", c.epsilon},
           {"modulus", c.modulus},
           {"index", c.index},
           {"frequencies", c.freqs.freqs},
           {"rho", c.rho},
           {"realized_r", c.realized_r},
           {"lambda_value", c.lambda_value},
           {"lambda_direct_check", c.lambda_direct_check},
           {"mean", c.mean_value},
           {"mean_cubed", c.mean_cubed},
           {"bounds",
            {{"pigeonhole_shell_energy", bound_check_json(c.shell_energy)},
             {"rough_spectrum_sup", bound_check_json(c.rough_sup)},
             {"mid_l2", bound_check_json(c.mid_l2)},
             {"smooth_shift_sup", bound_check_json(c.smooth_shift_sup)}}},
           {"bounds_pass", c.bounds_pass},
           {"pass", c.pass}};
    return j.dump(2);
}

std::string slice_rank_json(const SliceRankReport& r) {
    json j{{"schema", "isotri.slicerank/1"},
           {"q", r.q},
           {"n", r.n},
           {"t_star", r.t_star},
           {"c_q", r.c_q},
           {"d", r.d.str()}, // exact integer, may exceed 2^53
           {"bound", r.bound},
           {"d_bound_ok", r.d_bound_ok}};
    return j.dump(2);
}

std::string extremal_json(const ExtremalResult& r) {
    json j{{"schema", "isotri.extremal/1"},
           {"side", r.side},
           {"max_size", r.max_size},
           {"exact", r.exact},
           {"nodes_explored", r.nodes_explored},
           {"witness", grid_json(r.witness)}};
    return j.dump(2);
}

GridSet grid_from_json(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ParseError(std::string("invalid JSON grid: ") + e.what());
    }
    if (!j.is_object() || !j.contains("side") || !j["side"].is_number_integer())
        throw ParseError("JSON grid needs an integer \"side\"");
    const int side = j["side"].get<int>();
    if (side < 1) throw ParseError("JSON grid side must be >= 1");
    GridSet g(side);
    if (j.contains("points")) {
        if (!j["points"].is_array()) throw ParseError("JSON grid \"points\" must be an array");
        for (const auto& p : j["points"]) {
            if (!p.is_array() || p.size() != 2 || !p[0].is_number_integer() ||
                !p[1].is_number_integer())
                throw ParseError("JSON grid point must be [row, col]");
            const int r = p[0].get<int>(), c = p[1].get<int>();
            if (r < 0 || r >= side || c < 0 || c >= side)
                throw ParseError("JSON grid point (" + std::to_string(r) + "," +
                                 std::to_string(c) + ") outside the grid");
            g.set(r, c, true);
        }
    } else if (j.contains("rows")) {
        if (!j["rows"].is_array() || j["rows"].size() != static_cast<std::size_t>(side))
            throw ParseError("JSON grid \"rows\" must list side-many strings");
        std::string text_rows;
        for (const auto& row : j["rows"]) {
            if (!row.is_string()) throw ParseError("JSON grid row must be a string");
            text_rows += row.get<std::string>();
            text_rows += '\n';
        }
        return GridSet::from_text(text_rows);
    } else {
        throw ParseError("JSON grid needs \"points\" or \"rows\"");
    }
    return g;
}

std::string grid_to_json(const GridSet& g) {
    json j = grid_json(g);
    j["schema"] = "isotri.grid/1";
    return j.dump(2);
}

} // namespace isotri
