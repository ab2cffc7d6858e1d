#pragma once

#include <string>
#include <vector>

#include "hbl/bfs.hpp"
#include "hbl/heisenberg.hpp"
#include "hbl/window.hpp"
#include "hbl/word.hpp"

namespace hbl {

// Column summary of an H3 element set: per (x,y), the height range.
struct ColumnRange {
  std::int64_t x = 0, y = 0, zmin = 0, zmax = 0;
  std::size_t count = 0;
};

std::vector<ColumnRange> h3_columns(const std::vector<H3Elem>& elems);

// Text table of column ranges: one line "x y zmin zmax count".
std::string h3_column_table(const std::vector<ColumnRange>& cols);

// SVG heatmap over (x,y) colored by zmax (top of the column).
std::string h3_column_svg(const std::vector<ColumnRange>& cols);

// SVG diagram of planar move words drawn side by side on grids.
std::string h3_paths_svg(const std::vector<Word>& words);

// SVG heatmap of a window set (H3): columns colored by IN-count fraction.
std::string h3_window_svg(const std::vector<H3Elem>& elems, const std::vector<Status>& status);

}  // namespace hbl
