#pragma once

#include <cstdint>
#include <string>

#include "isotri/counting_forms.hpp"
#include "isotri/extremal.hpp"
#include "isotri/grid_set.hpp"
#include "isotri/popular.hpp"
#include "isotri/regularity.hpp"
#include "isotri/slice_rank.hpp"

namespace isotri {

// All reports are emitted as UTF-8 JSON with sorted keys and a "schema"
// tag; shapes are pinned by the documents under schemas/. Byte-stable for
// fixed inputs regardless of worker count.

std::string count_report_json(const GridSet& a, bool wraparound, int m, int n,
                              std::int64_t count);
/// Full table, sorted by count descending, ties by lexicographic (m, n).
std::string count_table_json(const GridSet& a, bool wraparound,
                             const DifferenceCounts& counts);
std::string popular_json(const PopularDifferenceResult& r);
std::string certificate_json(const RegularityCertificate& c);
std::string slice_rank_json(const SliceRankReport& r);
std::string extremal_json(const ExtremalResult& r);

/// Coordinate-list alternate input: {"side": N, "points": [[row, col], ...]}.
GridSet grid_from_json(const std::string& text);
std::string grid_to_json(const GridSet& g);

} // namespace isotri
