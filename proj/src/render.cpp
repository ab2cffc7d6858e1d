#include "hbl/render.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <sstream>

namespace hbl {

namespace {

// The comment line is the only part allowed to vary between runs.
const char* kSvgGenerator = "<!-- generator: hbl render -->\n";

std::string svg_open(double w, double h) {
  std::ostringstream s;
  s << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << w << "\" height=\"" << h
    << "\" viewBox=\"0 0 " << w << " " << h << "\">\n"
    << kSvgGenerator;
  return s.str();
}

std::string heat_color(double t) {
  t = std::clamp(t, 0.0, 1.0);
  int r = static_cast<int>(40 + 215 * t);
  int g = static_cast<int>(60 + 120 * (1 - t));
  int b = static_cast<int>(200 - 160 * t);
  std::ostringstream s;
  s << "rgb(" << r << "," << g << "," << b << ")";
  return s.str();
}

}  // namespace

std::vector<ColumnRange> h3_columns(const std::vector<H3Elem>& elems) {
  std::map<std::pair<std::int64_t, std::int64_t>, ColumnRange> cols;
  for (const auto& e : elems) {
    auto key = std::make_pair(e.a[0], e.b[0]);
    auto it = cols.find(key);
    if (it == cols.end()) {
      cols[key] = ColumnRange{e.a[0], e.b[0], e.c, e.c, 1};
    } else {
      it->second.zmin = std::min(it->second.zmin, e.c);
      it->second.zmax = std::max(it->second.zmax, e.c);
      ++it->second.count;
    }
  }
  std::vector<ColumnRange> out;
  out.reserve(cols.size());
  for (auto& [k, v] : cols) out.push_back(v);
  return out;
}

std::string h3_column_table(const std::vector<ColumnRange>& cols) {
  std::ostringstream s;
  s << "x y zmin zmax count\n";
  for (const auto& c : cols)
    s << c.x << ' ' << c.y << ' ' << c.zmin << ' ' << c.zmax << ' ' << c.count << '\n';
  return s.str();
}

std::string h3_column_svg(const std::vector<ColumnRange>& cols) {
  if (cols.empty()) return svg_open(120, 120) + "<line x1=\"10\" y1=\"110\" x2=\"110\" y2=\"110\" stroke=\"black\"/>\n<line x1=\"10\" y1=\"110\" x2=\"10\" y2=\"10\" stroke=\"black\"/>\n</svg>\n";
  std::int64_t xmin = cols[0].x, xmax = cols[0].x, ymin = cols[0].y, ymax = cols[0].y, zmax = 0;
  for (const auto& c : cols) {
    xmin = std::min(xmin, c.x);
    xmax = std::max(xmax, c.x);
    ymin = std::min(ymin, c.y);
    ymax = std::max(ymax, c.y);
    zmax = std::max(zmax, c.zmax);
  }
  const double cell = 18, pad = 30;
  double w = pad * 2 + cell * double(xmax - xmin + 1);
  double h = pad * 2 + cell * double(ymax - ymin + 1);
  std::ostringstream s;
  s << svg_open(w, h);
  for (const auto& c : cols) {
    double px = pad + cell * double(c.x - xmin);
    double py = pad + cell * double(ymax - c.y);
    double t = zmax > 0 ? double(c.zmax) / double(zmax) : 0.0;
    s << "<rect x=\"" << px << "\" y=\"" << py << "\" width=\"" << cell << "\" height=\"" << cell
      << "\" fill=\"" << heat_color(t) << "\"><title>(" << c.x << "," << c.y << ") z in ["
      << c.zmin << "," << c.zmax << "]</title></rect>\n";
    s << "<text x=\"" << px + cell / 2 << "\" y=\"" << py + cell / 2 + 3
      << "\" font-size=\"7\" text-anchor=\"middle\" fill=\"white\">" << c.zmax << "</text>\n";
  }
  s << "</svg>\n";
  return s.str();
}

std::string h3_paths_svg(const std::vector<Word>& words) {
  const double cell = 16, pad = 24, gap = 30;
  // bounding box per word
  struct Box {
    std::int64_t xmin = 0, xmax = 0, ymin = 0, ymax = 0;
  };
  std::vector<Box> boxes;
  for (const auto& w : words) {
    Box b;
    std::int64_t x = 0, y = 0;
    for (auto m : w) {
      if (m == 1) ++x;
      else if (m == 2) ++y;
      else if (m == 3) --x;
      else if (m == 4) --y;
      b.xmin = std::min(b.xmin, x);
      b.xmax = std::max(b.xmax, x);
      b.ymin = std::min(b.ymin, y);
      b.ymax = std::max(b.ymax, y);
    }
    boxes.push_back(b);
  }
  double total_w = pad, max_h = 0;
  for (const auto& b : boxes) {
    total_w += cell * double(b.xmax - b.xmin + 1) + gap;
    max_h = std::max(max_h, cell * double(b.ymax - b.ymin + 1));
  }
  double h = max_h + 2 * pad;
  std::ostringstream s;
  s << svg_open(std::max(total_w, 2 * pad), h);
  double ox = pad;
  for (std::size_t i = 0; i < words.size(); ++i) {
    const auto& b = boxes[i];
    // light grid
    for (std::int64_t gx = b.xmin; gx <= b.xmax + 1; ++gx)
      s << "<line x1=\"" << ox + cell * double(gx - b.xmin) << "\" y1=\"" << pad << "\" x2=\""
        << ox + cell * double(gx - b.xmin) << "\" y2=\"" << pad + cell * double(b.ymax - b.ymin + 1)
        << "\" stroke=\"#ccc\" stroke-width=\"0.5\"/>\n";
    for (std::int64_t gy = b.ymin; gy <= b.ymax + 1; ++gy)
      s << "<line x1=\"" << ox << "\" y1=\"" << pad + cell * double(b.ymax + 1 - gy) << "\" x2=\""
        << ox + cell * double(b.xmax - b.xmin + 1) << "\" y2=\""
        << pad + cell * double(b.ymax + 1 - gy) << "\" stroke=\"#ccc\" stroke-width=\"0.5\"/>\n";
    std::ostringstream pts;
    std::int64_t x = 0, y = 0;
    auto emit = [&] {
      pts << ox + cell * double(x - b.xmin) << "," << pad + cell * double(b.ymax - y + 1) << " ";
    };
    emit();
    for (auto m : words[i]) {
      if (m == 1) ++x;
      else if (m == 2) ++y;
      else if (m == 3) --x;
      else if (m == 4) --y;
      emit();
    }
    s << "<polyline points=\"" << pts.str()
      << "\" fill=\"none\" stroke=\"black\" stroke-width=\"2\" stroke-linejoin=\"round\"/>\n";
    ox += cell * double(b.xmax - b.xmin + 1) + gap;
  }
  s << "</svg>\n";
  return s.str();
}

std::string h3_window_svg(const std::vector<H3Elem>& elems, const std::vector<Status>& status) {
  std::map<std::pair<std::int64_t, std::int64_t>, std::pair<std::size_t, std::size_t>> cols;
  for (std::size_t i = 0; i < elems.size(); ++i) {
    auto& slot = cols[{elems[i].a[0], elems[i].b[0]}];
    ++slot.second;
    if (status[i] == Status::IN) ++slot.first;
  }
  if (cols.empty()) return h3_column_svg({});
  std::int64_t xmin = INT64_MAX, xmax = INT64_MIN, ymin = INT64_MAX, ymax = INT64_MIN;
  for (const auto& [k, v] : cols) {
    xmin = std::min(xmin, k.first);
    xmax = std::max(xmax, k.first);
    ymin = std::min(ymin, k.second);
    ymax = std::max(ymax, k.second);
  }
  const double cell = 18, pad = 30;
  double w = pad * 2 + cell * double(xmax - xmin + 1);
  double h = pad * 2 + cell * double(ymax - ymin + 1);
  std::ostringstream s;
  s << svg_open(w, h);
  for (const auto& [k, v] : cols) {
    double px = pad + cell * double(k.first - xmin);
    double py = pad + cell * double(ymax - k.second);
    double frac = v.second ? double(v.first) / double(v.second) : 0;
    s << "<rect x=\"" << px << "\" y=\"" << py << "\" width=\"" << cell << "\" height=\"" << cell
      << "\" fill=\"" << heat_color(frac) << "\"><title>(" << k.first << "," << k.second << ") "
      << v.first << "/" << v.second << " in</title></rect>\n";
  }
  s << "</svg>\n";
  return s.str();
}

}  // namespace hbl
