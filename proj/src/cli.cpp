#include "hbl/cli.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

#include "hbl/connectivity.hpp"
#include "hbl/families.hpp"
#include "hbl/halfspace.hpp"
#include "hbl/render.hpp"
#include "hbl/snapshot_io.hpp"
#include "hbl/wreath.hpp"
#include "hbl/zd.hpp"

namespace hbl {

namespace {

struct Common {
  std::string group = "h3";
  std::uint64_t budget_mb = 0;  // 0: use env/default
  unsigned threads = 1;

  BallOptions ball_options() const {
    BallOptions o;
    o.budget = Budget::from_env();
    if (budget_mb) o.budget.bytes = budget_mb << 20;
    o.threads = threads;
    return o;
  }
};

void add_common(CLI::App* cmd, Common& c, bool with_group = true) {
  cmd->configurable();
  if (with_group)
    cmd->add_option("--group", c.group,
                    "group: h3, h5, lamplighter, z2, wreath-z2-z, wreath-z2-z2");
  cmd->add_option("--budget-mb", c.budget_mb, "memory budget in MiB (default: HBL_BUDGET_MB or 4096)");
  cmd->add_option("--threads", c.threads, "worker threads for ball enumeration");
}

H3Elem parse_h3(const std::string& s) {
  std::int64_t a, b, c;
  char c1, c2;
  std::istringstream in(s);
  if (!(in >> a >> c1 >> b >> c2 >> c) || c1 != ',' || c2 != ',' || !in.eof())
    throw std::invalid_argument("expected a,b,c");
  return h3(a, b, c);
}

std::array<std::int64_t, 2> parse_z2(const std::string& s) {
  std::int64_t x, y;
  char c1;
  std::istringstream in(s);
  if (!(in >> x >> c1 >> y) || c1 != ',' || !in.eof()) throw std::invalid_argument("expected x,y");
  return {x, y};
}

std::string csv_quote(const std::string& s) {
  if (s.find(',') == std::string::npos && s.find('"') == std::string::npos) return s;
  std::string q = "\"";
  for (char c : s) {
    if (c == '"') q += '"';
    q += c;
  }
  q += '"';
  return q;
}

void write_file_or_stdout(const std::string& path, const std::string& content, std::ostream& out) {
  if (path.empty() || path == "-") {
    out << content;
    return;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) throw std::invalid_argument("cannot open output file: " + path);
  f << content;
}

auto ll_dist_fn() {
  return [](const LampElem& a, const LampElem& b) { return lamp_dist(a, b); };
}

std::vector<std::int64_t> parse_schedule(const std::string& s) {
  auto dots = s.find("..");
  std::vector<std::int64_t> out;
  if (dots != std::string::npos) {
    std::int64_t lo = std::stoll(s.substr(0, dots)), hi = std::stoll(s.substr(dots + 2));
    for (std::int64_t n = lo; n <= hi; ++n) out.push_back(n);
  } else {
    std::istringstream in(s);
    std::string tok;
    while (std::getline(in, tok, ',')) out.push_back(std::stoll(tok));
  }
  if (out.empty()) throw std::invalid_argument("empty schedule");
  return out;
}

// ---------------------------------------------------------------------------

int cmd_norm(const Common& c, const std::string& elem, const std::string& lamps,
             std::int64_t head, const std::string& table, bool check, std::ostream& out) {
  auto bfs_check = [&](auto& g, const auto& x, std::int64_t claimed) {
    if (!check) return;
    try {
      std::int64_t got = bfs_norm(g, x, c.ball_options());
      out << "oracle: bfs=" << got << (got == claimed ? " ok" : " MISMATCH") << "\n";
      if (got != claimed) throw InvariantViolation("norm oracle mismatch");
    } catch (const BudgetExceeded&) {
      out << "oracle: skipped (budget exhausted; element may be unreachable)\n";
    }
  };
  if (c.group == "h3") {
    H3 g;
    H3Elem x = parse_h3(elem);
    NormWitness w = h3_norm_witness(x);
    out << "norm=" << w.norm << "\n";
    out << "witness: A=" << w.A << " B=" << w.B << " regime=" << regime_name(w.regime)
        << " excess=" << w.excess << "\n";
    out << "closed_form=" << h3_norm_closed(x) << "\n";
    if (!h3_parity_ok(x))
      out << "note: height parity mismatch; no word reaches this element, value is the formula "
             "extension\n";
    bfs_check(g, x, w.norm);
  } else if (c.group == "h5") {
    Heisenberg<2> g;
    auto x = g.decode(elem);
    std::int64_t n = bfs_norm(g, x, c.ball_options());
    out << "norm=" << n << "\n";
  } else if (c.group == "lamplighter") {
    Lamplighter g;
    LampElem x = g.decode("lamps=" + lamps + ";head=" + std::to_string(head));
    std::int64_t n = lamp_norm(x);
    out << "norm=" << n << "\n";
    bfs_check(g, x, n);
  } else if (c.group == "z2") {
    auto x = parse_z2(elem);
    out << "norm=" << std::llabs(x[0]) + std::llabs(x[1]) << "\n";
  } else if (c.group == "wreath-z2-z") {
    WreathZ g;
    auto x = g.decode("table=" + table + ";head=" + std::to_string(head));
    std::int64_t n = wreath_z_norm(x);
    out << "norm=" << n << "\n";
    bfs_check(g, x, n);
  } else if (c.group == "wreath-z2-z2") {
    WreathZ2 g;
    auto x = g.decode(elem);
    out << "norm=" << bfs_norm(g, x, c.ball_options()) << "\n";
  } else {
    throw std::invalid_argument("unknown group: " + c.group);
  }
  return 0;
}

template <class G>
int ball_for(const G& g, const Common& c, const std::string& center, int radius,
             const std::string& out_path, std::ostream& out) {
  auto x = center.empty() ? g.identity() : g.decode(center);
  auto ball = bfs_ball(g, x, radius, c.ball_options());
  out << "count=" << ball.size() << "\n";
  out << "spheres=";
  for (std::size_t r = 0; r < ball.sphere_sizes.size(); ++r)
    out << (r ? "," : "") << ball.sphere_sizes[r];
  out << "\n";
  if (!out_path.empty()) {
    save_snapshot(g, ball, out_path);
    out << "saved=" << out_path << "\n";
  }
  return 0;
}

int cmd_ball(const Common& c, const std::string& center, int radius, const std::string& out_path,
             std::ostream& out) {
  if (c.group == "h3") return ball_for(H3{}, c, center, radius, out_path, out);
  if (c.group == "h5") return ball_for(Heisenberg<2>{}, c, center, radius, out_path, out);
  if (c.group == "lamplighter") return ball_for(Lamplighter{}, c, center, radius, out_path, out);
  if (c.group == "wreath-z2-z") return ball_for(WreathZ{}, c, center, radius, out_path, out);
  if (c.group == "wreath-z2-z2") return ball_for(WreathZ2{}, c, center, radius, out_path, out);
  if (c.group == "z2") return ball_for(Zd<2>{}, c, center, radius, out_path, out);
  throw std::invalid_argument("unknown group: " + c.group);
}

template <class G>
int geodesics_for(const G& g, const Common& c, const std::string& elem, std::size_t max_count,
                  std::ostream& out) {
  auto x = g.decode(elem);
  auto words = geodesic_words(g, x, max_count, c.ball_options());
  out << "count=" << words.size() << "\n";
  for (const auto& w : words) out << word_letters(g, w) << "\n";
  return 0;
}

int cmd_geodesics(const Common& c, const std::string& elem, std::size_t max_count,
                  bool canonical, std::ostream& out) {
  if (c.group == "h3") {
    H3 g;
    if (canonical) {
      Word w = h3_canonical_geodesic(parse_h3(elem));
      out << word_letters(g, w) << "\n";
      return 0;
    }
    return geodesics_for(g, c, g.encode(parse_h3(elem)), max_count, out);
  }
  if (c.group == "lamplighter") return geodesics_for(Lamplighter{}, c, elem, max_count, out);
  if (c.group == "wreath-z2-z") return geodesics_for(WreathZ{}, c, elem, max_count, out);
  throw std::invalid_argument("geodesics: unsupported group " + c.group);
}

template <class G, class NormFn>
std::string distortion_csv(const G& g, NormFn norm, std::int64_t nmin, std::int64_t nmax,
                           int lmax, const Common& c, std::ostream& out) {
  auto table = distortion_table(g, nmin, nmax, lmax, norm, c.ball_options());
  std::ostringstream csv;
  csv << "n,ell,delta,witness_a,witness_b\n";
  for (const auto& row : table.rows)
    for (int l = 1; l <= lmax; ++l)
      csv << row.n << ',' << l << ',' << row.cells[l].delta << ','
          << csv_quote(g.encode(row.cells[l].witness_a)) << ','
          << csv_quote(g.encode(row.cells[l].witness_b)) << "\n";
  for (int l = 1; l <= lmax; ++l)
    out << "stabilization: ell=" << l << " onset_n=" << table.stabilization_onset[l] << "\n";
  return csv.str();
}

int cmd_distortion(const Common& c, std::int64_t nmin, std::int64_t nmax, int lmax,
                   const std::string& out_path, std::ostream& out) {
  std::string csv;
  if (nmin > nmax) {
    csv = "n,ell,delta,witness_a,witness_b\n";
  } else if (c.group == "h3") {
    csv = distortion_csv(H3{}, [](const H3Elem& e) { return h3_norm(e); }, nmin, nmax, lmax, c, out);
  } else if (c.group == "z2") {
    csv = distortion_csv(Zd<2>{}, [](const Zd<2>::Element& e) { return zd_norm<2>(e); }, nmin,
                         nmax, lmax, c, out);
  } else if (c.group == "lamplighter") {
    csv = distortion_csv(Lamplighter{}, [](const LampElem& e) { return lamp_norm(e); }, nmin,
                         nmax, lmax, c, out);
  } else if (c.group == "wreath-z2-z") {
    csv = distortion_csv(WreathZ{}, [](const WreathZ::Element& e) { return wreath_z_norm(e); },
                         nmin, nmax, lmax, c, out);
  } else {
    throw std::invalid_argument("distortion: unsupported group " + c.group);
  }
  write_file_or_stdout(out_path, csv, out);
  return 0;
}

template <class G>
std::string window_csv(const G& g, const WindowSet<G>& ws) {
  std::ostringstream csv;
  for (std::size_t i = 0; i < ws.window->size(); ++i)
    csv << csv_quote(g.encode(ws.window->elems[i])) << ',' << status_name(ws.status[i]) << "\n";
  return csv.str();
}

void print_report(const StabilizationReport& rep, std::ostream& out) {
  out << "schedule=";
  for (std::size_t i = 0; i < rep.schedule.size(); ++i) out << (i ? "," : "") << rep.schedule[i];
  out << "\nfirst_stable=" << rep.first_stable << "\nstable_tail=" << (rep.stable_tail ? "yes" : "no")
      << "\n";
  if (rep.limit_is_full_window) out << "flag: limit equals the full window (not a horoball here)\n";
  if (rep.limit_is_empty) out << "flag: limit is empty on this window\n";
}

int cmd_horoball(const Common&, const std::string& family, const std::string& window,
                 const std::string& schedule, const std::string& out_path,
                 const std::string& svg_path, std::ostream& out) {
  auto sched = parse_schedule(schedule);
  if (family == "h3-central" || family == "constant") {
    H3 g;
    auto box = parse_h3(window.empty() ? "2,2,5" : window);
    auto win = h3_box_window(g, box.a[0], box.b[0], box.c);
    auto fam = family == "constant" ? constant_family() : h3_central_family();
    auto [ws, rep] = limit_window(g, fam, win, sched, [&](const H3Elem& a, const H3Elem& b) {
      return h3_norm(g.mul(g.inv(a), b));
    });
    print_report(rep, out);
    bool match = ws.status == predicted_p_h3(g, win).status;
    if (family == "h3-central") out << "matches_predicted=" << (match ? "yes" : "no") << "\n";
    write_file_or_stdout(out_path, window_csv(g, ws), out);
    if (!svg_path.empty())
      write_file_or_stdout(svg_path, h3_window_svg(win->elems, ws.status), out);
    return 0;
  }
  if (family == "lamplighter-3n") {
    Lamplighter g;
    std::int64_t w = window.empty() ? 4 : std::stoll(window);
    auto win = lamplighter_box_window(g, w);
    auto [ws, rep] = limit_window(g, lamplighter_3n_family(), win, sched, ll_dist_fn());
    print_report(rep, out);
    out << "matches_predicted=" << (ws.status == predicted_p_lamp(g, win).status ? "yes" : "no")
        << "\n";
    write_file_or_stdout(out_path, window_csv(g, ws), out);
    return 0;
  }
  throw std::invalid_argument("unknown family: " + family);
}

int cmd_busemann(const Common&, const std::string& family, const std::string& window,
                 std::int64_t n_max, std::int64_t param_n, const std::string& out_path,
                 std::ostream& out) {
  if (family == "h3-east") {
    H3 g;
    auto box = parse_h3(window.empty() ? "3,3,3" : window);
    auto win = h3_box_window(g, box.a[0], box.b[0], box.c);
    BusemannOptions opt;
    opt.n_max = n_max;
    opt.horizon = [&](std::size_t i) { return h3_ray_horizon(win->elems[i]); };
    std::int64_t len = n_max;
    for (const auto& e : win->elems) len = std::max(len, h3_ray_horizon(e));
    auto [ws, rep] =
        busemann_window(g, h3_east_ray(len), win, opt, [&](const H3Elem& a, const H3Elem& b) {
          return h3_norm(g.mul(g.inv(a), b));
        });
    out << "monotonicity_violations=" << rep.monotonicity_violations.size() << "\n";
    write_file_or_stdout(out_path, window_csv(g, ws), out);
    return 0;
  }
  if (family == "lamplighter-left" || family == "lamplighter-gn-reversed") {
    Lamplighter g;
    std::int64_t w = window.empty() ? 3 : std::stoll(window);
    auto win = lamplighter_box_window(g, w);
    BusemannOptions opt;
    opt.n_max = n_max;
    std::int64_t len = n_max;
    Word ray;
    if (family == "lamplighter-left") {
      opt.horizon = [&](std::size_t i) { return lamp_ray_horizon(win->elems[i]); };
      for (const auto& e : win->elems) len = std::max(len, lamp_ray_horizon(e));
      ray = lamp_left_ray(len);
    } else {
      opt.horizon = [&](std::size_t i) {
        return lamp_gn_reversed_horizon(param_n, win->elems[i]);
      };
      for (const auto& e : win->elems) len = std::max(len, lamp_gn_reversed_horizon(param_n, e));
      ray = lamp_gn_reversed_ray(param_n, len);
    }
    auto [ws, rep] = busemann_window(g, ray, win, opt, ll_dist_fn());
    out << "monotonicity_violations=" << rep.monotonicity_violations.size() << "\n";
    write_file_or_stdout(out_path, window_csv(g, ws), out);
    return 0;
  }
  throw std::invalid_argument("unknown family: " + family);
}

int cmd_maxca(const Common& c, int window_radius, int ball_n, int steps, std::ostream& out) {
  auto run = [&](auto g) {
    auto win = window_from_ball(g, window_radius, c.ball_options());
    auto bn = bfs_ball(g, g.identity(), ball_n, c.ball_options());
    auto x = window_set_by(g, win, [&](const auto& e) {
      return bn.contains(e) ? Status::IN : Status::OUT;
    });
    for (int k = 1; k <= steps; ++k) {
      auto y = max_ca_step(g, x);
      auto expect = bfs_ball(g, g.identity(), ball_n + k, c.ball_options());
      std::size_t in_count = 0;
      for (std::size_t i = 0; i < y.window->size(); ++i) {
        bool want = expect.contains(y.window->elems[i]);
        if ((y.status[i] == Status::IN) != want)
          throw InvariantViolation("max CA step disagrees with the grown ball");
        in_count += y.status[i] == Status::IN;
      }
      out << "step=" << k << " window=" << y.window->size() << " in=" << in_count
          << " law=ball+" << k << " ok\n";
      x = std::move(y);
    }
    return 0;
  };
  if (c.group == "h3") return run(H3{});
  if (c.group == "lamplighter") return run(Lamplighter{});
  throw std::invalid_argument("maxca: unsupported group " + c.group);
}

int cmd_certify(const Common&, const std::string& h3_elem, int prefix_len, std::int64_t k_max,
                const std::string& out_path, std::ostream& out) {
  std::ostringstream csv;
  csv << "kind,input,ux,uy,k\n";
  const std::vector<Vec2> gens = {{0, 0}, {1, 0}, {0, 1}, {-1, 0}, {0, -1}};
  if (!h3_elem.empty()) {
    H3Elem x = parse_h3(h3_elem);
    Word w = h3_canonical_geodesic(x);
    std::vector<Vec2> pts{{0, 0}};
    for (auto m : w) {
      Vec2 p = pts.back();
      if (m == 1) ++p.x;
      else if (m == 2) ++p.y;
      else if (m == 3) --p.x;
      else if (m == 4) --p.y;
      pts.push_back(p);
    }
    auto cert = halfspace_certificate(pts, gens, k_max);
    if (cert)
      csv << "h3-word," << csv_quote(h3_elem) << ',' << cert->u.x << ',' << cert->u.y << ','
          << cert->k << "\n";
    else
      csv << "h3-word," << csv_quote(h3_elem) << ",,,none\n";
    out << (cert ? "certificate found\n" : "no certificate within k_max\n");
  } else {
    // all Z^2 geodesic ray prefixes up to prefix_len; report the max deficit
    auto cands = halfspace_candidates(gens);
    std::vector<std::int64_t> max_k(static_cast<std::size_t>(prefix_len) + 1, 0);
    for (int sx : {1, -1})
      for (int sy : {1, -1}) {
        struct Node {
          Vec2 p;
          int len;
          std::vector<std::int64_t> def;
        };
        std::vector<Node> stack{{{0, 0}, 0, std::vector<std::int64_t>(cands.size(), 0)}};
        while (!stack.empty()) {
          Node n = std::move(stack.back());
          stack.pop_back();
          std::int64_t best = INT64_MAX;
          for (auto d : n.def) best = std::min(best, d);
          max_k[static_cast<std::size_t>(n.len)] = std::max(max_k[n.len], best);
          if (n.len == prefix_len) continue;
          for (Vec2 step : {Vec2{sx, 0}, Vec2{0, sy}}) {
            Node m;
            m.p = {n.p.x + step.x, n.p.y + step.y};
            m.len = n.len + 1;
            m.def.resize(cands.size());
            for (std::size_t ci = 0; ci < cands.size(); ++ci) {
              std::int64_t speed = 0;
              for (const auto& s : gens) speed = std::max(speed, cands[ci].x * s.x + cands[ci].y * s.y);
              std::int64_t lhs = cands[ci].x * m.p.x + cands[ci].y * m.p.y;
              m.def[ci] = std::max(n.def[ci], std::int64_t(m.len) * speed - lhs);
            }
            stack.push_back(std::move(m));
          }
        }
      }
    for (int l = 0; l <= prefix_len; ++l) csv << "z2-prefixes," << l << ",,," << max_k[l] << "\n";
    out << "max_k_at_" << std::max(0, prefix_len - 5) << "=" << max_k[std::max(0, prefix_len - 5)]
        << " max_k_at_" << prefix_len << "=" << max_k[prefix_len] << "\n";
  }
  write_file_or_stdout(out_path, csv.str(), out);
  return 0;
}

int cmd_render(const Common&, const std::string& snapshot, const std::string& window_csv_path,
               bool detours, bool columns, const std::string& out_path, std::ostream& out) {
  H3 g;
  if (detours) {
    auto member = [&](const H3Elem& e) { return h3_norm(e) <= 10; };
    auto census = detour_census_pred(g, member, h3(0, 4, 24), h3(0, 6, 24));
    write_file_or_stdout(out_path, h3_paths_svg(census.paths), out);
    out << "paths=" << census.paths.size() << " length=" << census.distance << "\n";
    return 0;
  }
  if (!snapshot.empty()) {
    auto ball = load_snapshot(g, snapshot);
    std::vector<H3Elem> elems;
    for (const auto& [e, d] : ball.dist) elems.push_back(e);
    std::sort(elems.begin(), elems.end());
    auto cols = h3_columns(elems);
    if (columns) {
      write_file_or_stdout(out_path, h3_column_table(cols), out);
    } else {
      write_file_or_stdout(out_path, h3_column_svg(cols), out);
    }
    return 0;
  }
  if (!window_csv_path.empty()) {
    std::ifstream f(window_csv_path);
    if (!f) throw std::invalid_argument("cannot open " + window_csv_path);
    std::vector<H3Elem> elems;
    std::vector<Status> status;
    std::string line;
    while (std::getline(f, line)) {
      if (line.empty()) continue;
      auto cut = line.rfind(',');
      if (cut == std::string::npos) throw std::invalid_argument("bad window csv line");
      std::string tuple = line.substr(0, cut);
      if (tuple.size() >= 2 && tuple.front() == '"' && tuple.back() == '"')
        tuple = tuple.substr(1, tuple.size() - 2);
      std::string st = line.substr(cut + 1);
      elems.push_back(g.decode(tuple));
      status.push_back(st == "IN"            ? Status::IN
                       : st == "OUT"         ? Status::OUT
                                             : Status::UNDETERMINED);
    }
    write_file_or_stdout(out_path, h3_window_svg(elems, status), out);
    return 0;
  }
  // empty render: axes-only canvas
  write_file_or_stdout(out_path, h3_column_svg({}), out);
  return 0;
}

int cmd_selftest(std::uint64_t seed, std::ostream& out) {
  std::mt19937_64 rng(seed);
  auto sample_laws = [&](auto g, auto rand_elem, const char* name) {
    for (int i = 0; i < 500; ++i) {
      auto x = rand_elem(), y = rand_elem(), z = rand_elem();
      if (g.mul(g.mul(x, y), z) != g.mul(x, g.mul(y, z)))
        throw InvariantViolation(std::string(name) + ": associativity failed");
      if (g.mul(x, g.inv(x)) != g.identity() || g.mul(g.inv(x), x) != g.identity())
        throw InvariantViolation(std::string(name) + ": inverse law failed");
      if (g.mul(x, g.identity()) != x || g.mul(g.identity(), x) != x)
        throw InvariantViolation(std::string(name) + ": identity law failed");
    }
    out << name << ": group laws ok (500 random triples)\n";
  };
  sample_laws(H3{}, [&] { return h3(std::int64_t(rng() % 41) - 20, std::int64_t(rng() % 41) - 20,
                                    std::int64_t(rng() % 2001) - 1000); },
              "h3");
  sample_laws(Heisenberg<2>{}, [&] {
    Heisenberg<2>::Element e;
    for (int k = 0; k < 2; ++k) {
      e.a[k] = std::int64_t(rng() % 21) - 10;
      e.b[k] = std::int64_t(rng() % 21) - 10;
    }
    e.c = std::int64_t(rng() % 401) - 200;
    return e;
  }, "h5");
  sample_laws(Lamplighter{}, [&] {
    LampElem e;
    e.head = std::int32_t(rng() % 13) - 6;
    for (std::int32_t l = -7; l <= 7; l += 2)
      if (rng() & 1) e.lamps.push_back(l);
    return e;
  }, "lamplighter");
  sample_laws(WreathZ{}, [&] {
    WreathZ::Element e;
    e.head = std::int64_t(rng() % 9) - 4;
    for (std::int64_t p = -4; p <= 4; ++p)
      if (rng() & 1) e.table.emplace_back(p, 1);
    return e;
  }, "wreath-z2-z");
  // norm spot checks across routes
  H3 g;
  for (int i = 0; i < 200; ++i) {
    H3Elem x = h3(std::int64_t(rng() % 21) - 10, std::int64_t(rng() % 21) - 10,
                  std::int64_t(rng() % 401) - 200);
    if (h3_norm(x) != h3_norm_closed(x) || h3_norm(x) != h3_norm_process(x).norm)
      throw InvariantViolation("h3 norm routes disagree");
    (void)g;
  }
  out << "h3: norm routes agree (200 random elements)\n";
  out << "selftest ok\n";
  return 0;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"horoball laboratory: word metrics, balls, geodesics, distortion and "
               "window-truncated horoballs for Heisenberg, lamplighter and wreath groups"};
  app.set_config("--config", "", "configuration file (TOML-like key=value, [command] sections)");
  app.fallthrough();
  app.require_subcommand(1);

  Common c;
  std::string elem, lamps, table, center, out_path, svg_path, family, window, schedule, snapshot,
      window_csv_path, h3_elem;
  std::int64_t head = 0, nmin = 8, nmax = 12, n_max = 40, param_n = 4, k_max = 8;
  int radius = 5, lmax = 5, ball_n = 4, window_radius = 6, steps = 1, prefix_len = 20;
  std::size_t max_count = 1000;
  bool check = false, canonical = false, detours = false, columns = false;
  std::uint64_t seed = 0x9ea1ab5eu;

  auto* norm = app.add_subcommand("norm", "word norm of an element (with witness where closed forms exist)");
  add_common(norm, c);
  norm->add_option("element", elem, "element, e.g. 0,0,19 for h3");
  norm->add_option("--lamps", lamps, "lamplighter lamps as stored odd integers");
  norm->add_option("--head", head, "head position");
  norm->add_option("--table", table, "wreath table entries coord:value,...");
  norm->add_flag("--check", check, "cross-check against the BFS oracle");

  auto* ball = app.add_subcommand("ball", "enumerate a metric ball, optionally saving a snapshot");
  add_common(ball, c);
  ball->add_option("--center", center, "center tuple (defaults to the identity)");
  ball->add_option("--radius", radius)->required();
  ball->add_option("--out", out_path, "snapshot file");

  auto* geo = app.add_subcommand("geodesics", "geodesic words to an element");
  add_common(geo, c);
  geo->add_option("element", elem)->required();
  geo->add_option("--max", max_count, "maximum number of words to list");
  geo->add_flag("--canonical", canonical, "print only the canonical geodesic (h3)");

  auto* dis = app.add_subcommand("distortion", "intrinsic distortion table of balls");
  add_common(dis, c);
  dis->add_option("--nmin", nmin);
  dis->add_option("--nmax", nmax);
  dis->add_option("--lmax", lmax);
  dis->add_option("--out", out_path, "CSV output (default stdout)");

  auto* hor = app.add_subcommand("horoball", "window-truncated limit of a ball family");
  add_common(hor, c, false);
  hor->add_option("--family", family, "h3-central, lamplighter-3n, constant")->required();
  hor->add_option("--window", window, "h3: a,b,c box bounds; lamplighter: w");
  hor->add_option("--schedule", schedule, "lo..hi or comma list")->required();
  hor->add_option("--out", out_path, "CSV output");
  hor->add_option("--svg", svg_path, "SVG slice heatmap (h3 families)");

  auto* bus = app.add_subcommand("busemann", "window statuses of a Busemann horoball prefix");
  add_common(bus, c, false);
  bus->add_option("--family", family, "h3-east, lamplighter-left, lamplighter-gn-reversed")
      ->required();
  bus->add_option("--window", window);
  bus->add_option("--nmax", n_max);
  bus->add_option("--N", param_n, "family parameter for lamplighter-gn-reversed");
  bus->add_option("--out", out_path);

  auto* mca = app.add_subcommand("maxca", "max cellular automaton steps on a ball indicator");
  add_common(mca, c);
  mca->add_option("--window-radius", window_radius);
  mca->add_option("--ball-n", ball_n);
  mca->add_option("--steps", steps);

  auto* cer = app.add_subcommand("certify", "half-space escape certificates in Z^2");
  add_common(cer, c, false);
  cer->add_option("--h3-element", h3_elem, "certify the canonical geodesic projection");
  cer->add_option("--prefix-len", prefix_len, "scan all Z^2 geodesic prefixes up to this length");
  cer->add_option("--kmax", k_max);
  cer->add_option("--out", out_path);

  auto* ren = app.add_subcommand("render", "SVG figures and column tables");
  add_common(ren, c, false);
  ren->add_option("--snapshot", snapshot, "h3 snapshot file to render");
  ren->add_option("--window-csv", window_csv_path, "window CSV to render");
  ren->add_flag("--detours", detours, "the four detour paths in the 10-ball");
  ren->add_flag("--columns", columns, "emit the text column table instead of SVG");
  ren->add_option("--out", out_path)->required();

  auto* st = app.add_subcommand("selftest", "randomized law tests");
  st->configurable();
  st->add_option("--seed", seed);

  std::vector<std::string> argv(args.rbegin(), args.rend());
  try {
    app.parse(argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {  // --help
      out << app.help();
      return 0;
    }
    err << "error: " << e.what() << "\n";
    return 2;
  }

  try {
    if (norm->parsed()) return cmd_norm(c, elem, lamps, head, table, check, out);
    if (ball->parsed()) return cmd_ball(c, center, radius, out_path, out);
    if (geo->parsed()) return cmd_geodesics(c, elem, max_count, canonical, out);
    if (dis->parsed()) return cmd_distortion(c, nmin, nmax, lmax, out_path, out);
    if (hor->parsed()) return cmd_horoball(c, family, window, schedule, out_path, svg_path, out);
    if (bus->parsed()) return cmd_busemann(c, family, window, n_max, param_n, out_path, out);
    if (mca->parsed()) return cmd_maxca(c, window_radius, ball_n, steps, out);
    if (cer->parsed()) return cmd_certify(c, h3_elem, prefix_len, k_max, out_path, out);
    if (ren->parsed())
      return cmd_render(c, snapshot, window_csv_path, detours, columns, out_path, out);
    if (st->parsed()) return cmd_selftest(seed, out);
    err << "error: no command\n";
    return 2;
  } catch (const BudgetExceeded& e) {
    err << "budget exceeded: " << e.what() << "\n";
    return 3;
  } catch (const SnapshotError& e) {
    err << "snapshot error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const InvariantViolation& e) {
    err << "invariant violation: " << e.what() << "\n";
    return 4;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return 4;
  }
}

}  // namespace hbl
