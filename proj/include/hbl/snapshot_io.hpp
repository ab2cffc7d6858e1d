#pragma once

#include <charconv>
#include <fstream>
#include <sstream>
#include <string>

#include "hbl/bfs.hpp"
#include "hbl/common.hpp"

namespace hbl {

class SnapshotError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// Text snapshot format:
//   HBL1;group=<id>;gens=<enc|enc|...>;center=<tuple>;radius=<n>;count=<m>
//   <element tuple>;<distance>     (m lines, sorted by (distance, tuple))
//   END;<fnv1a-64 of the body, hex>
// Tuples may themselves contain ';', so the header is parsed by field markers
// and element lines split on the last ';'.

template <class G>
std::string snapshot_to_string(const G& g, const BallSnapshot<G>& ball) {
  std::string gens;
  for (std::size_t i = 0; i < g.generators().size(); ++i) {
    if (i) gens += '|';
    gens += g.encode(g.generators()[i]);
  }
  std::vector<std::pair<int, std::string>> lines;
  lines.reserve(ball.dist.size());
  for (const auto& [e, d] : ball.dist) lines.emplace_back(d, g.encode(e));
  std::sort(lines.begin(), lines.end());
  std::string body;
  for (auto& [d, enc] : lines) {
    body += enc;
    body += ';';
    body += std::to_string(d);
    body += '\n';
  }
  std::ostringstream out;
  out << "HBL1;group=" << g.id_string() << ";gens=" << gens << ";center=" << g.encode(ball.center)
      << ";radius=" << ball.radius << ";count=" << ball.dist.size() << "\n"
      << body << "END;" << std::hex << fnv1a64(body) << "\n";
  return out.str();
}

template <class G>
void save_snapshot(const G& g, const BallSnapshot<G>& ball, const std::string& path) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw SnapshotError("cannot open for writing: " + path);
  f << snapshot_to_string(g, ball);
  if (!f) throw SnapshotError("write failed: " + path);
}

template <class G>
BallSnapshot<G> snapshot_from_string(const G& g, const std::string& text) {
  std::istringstream in(text);
  std::string header;
  if (!std::getline(in, header) || header.rfind("HBL1;", 0) != 0)
    throw SnapshotError("malformed snapshot: bad magic");
  auto field = [&header](const char* key, const char* next_key) {
    auto pos = header.find(key);
    if (pos == std::string::npos) throw SnapshotError("malformed snapshot: missing field");
    pos += std::string(key).size();
    auto end = next_key ? header.find(next_key, pos) : header.size();
    if (end == std::string::npos) throw SnapshotError("malformed snapshot: missing field");
    std::string v = header.substr(pos, end - pos);
    if (!v.empty() && v.back() == ';') v.pop_back();
    return v;
  };
  std::string group = field("group=", ";gens=");
  if (group != g.id_string())
    throw SnapshotError("snapshot group '" + group + "' does not match requested model '" +
                        g.id_string() + "'");
  std::string center_s = field(";center=", ";radius=");
  std::size_t count = std::stoull(field(";count=", nullptr));
  int radius = std::stoi(field(";radius=", ";count="));

  BallSnapshot<G> ball(g);
  ball.group_id = group;
  ball.center = g.decode(center_s);
  ball.radius = radius;
  std::string body;
  std::string line;
  int max_d = 0;
  for (std::size_t i = 0; i < count; ++i) {
    if (!std::getline(in, line)) throw SnapshotError("malformed snapshot: truncated body");
    body += line;
    body += '\n';
    auto cut = line.rfind(';');
    if (cut == std::string::npos) throw SnapshotError("malformed snapshot: bad element line");
    int d = 0;
    auto res = std::from_chars(line.data() + cut + 1, line.data() + line.size(), d);
    if (res.ec != std::errc() || d < 0 || d > radius)
      throw SnapshotError("malformed snapshot: bad distance");
    max_d = std::max(max_d, d);
    try {
      ball.dist.emplace(g.decode(line.substr(0, cut)), d);
    } catch (const std::invalid_argument&) {
      throw SnapshotError("malformed snapshot: bad element tuple");
    }
  }
  if (ball.dist.size() != count) throw SnapshotError("malformed snapshot: duplicate elements");
  if (!std::getline(in, line) || line.rfind("END;", 0) != 0)
    throw SnapshotError("malformed snapshot: missing END");
  std::ostringstream want;
  want << std::hex << fnv1a64(body);
  if (line.substr(4) != want.str()) throw SnapshotError("snapshot checksum mismatch");
  ball.sphere_sizes.assign(static_cast<std::size_t>(max_d) + 1, 0);
  for (const auto& [e, d] : ball.dist) ++ball.sphere_sizes[static_cast<std::size_t>(d)];
  return ball;
}

template <class G>
BallSnapshot<G> load_snapshot(const G& g, const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw SnapshotError("cannot open: " + path);
  std::ostringstream ss;
  ss << f.rdbuf();
  return snapshot_from_string(g, ss.str());
}

}  // namespace hbl
