#include "epsball/io.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace epsball {

namespace fs = std::filesystem;

std::string format_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

std::string hash_string(std::uint64_t h) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

void write_atomically(const fs::path& path,
                      const std::function<void(std::ostream&)>& writer) {
  const fs::path partial = path.string() + ".partial";
  {
    std::ofstream out(partial, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open " + partial.string());
    writer(out);
    if (!out) throw std::runtime_error("write failed for " + partial.string());
  }
  fs::rename(partial, path);
}

void write_field_csv(const fs::path& path, const ScalarField& u) {
  const std::string hash = hash_string(u.grid->hash());
  write_atomically(path, [&](std::ostream& out) {
    out << "# grid_hash=" << hash << "\n";
    out << "node_id,value\n";
    for (NodeId i = 0; i < u.size(); ++i)
      out << i << ',' << format_double(u[i]) << '\n';
  });
}

ScalarField read_field_csv(const fs::path& path, const Grid& grid) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  ScalarField u(grid);
  std::string line;
  bool hash_seen = false;
  NodeId filled = 0;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    if (line[0] == '#') {
      const auto pos = line.find("grid_hash=");
      if (pos != std::string::npos) {
        const std::string expect = hash_string(grid.hash());
        const std::string got = line.substr(pos + 10);
        if (got.substr(0, expect.size()) != expect)
          throw std::runtime_error("field file " + path.string() +
                                   " was dumped from a different grid");
        hash_seen = true;
      }
      continue;
    }
    if (line.rfind("node_id", 0) == 0) continue;
    const auto comma = line.find(',');
    if (comma == std::string::npos)
      throw std::runtime_error("malformed field row in " + path.string());
    const long id = std::stol(line.substr(0, comma));
    const double value = std::stod(line.substr(comma + 1));
    if (id < 0 || id >= grid.size())
      throw std::runtime_error("node id out of range in " + path.string());
    u[static_cast<NodeId>(id)] = value;
    ++filled;
  }
  if (!hash_seen)
    throw std::runtime_error("field file " + path.string() + " carries no grid hash");
  if (filled != grid.size())
    throw std::runtime_error("field file " + path.string() + " misses nodes");
  return u;
}

void write_grid_csv(const fs::path& path, const Grid& grid) {
  write_atomically(path, [&](std::ostream& out) { dump_grid_csv(grid, out); });
}

void write_profile_csv(const fs::path& path, const ScalarField& u) {
  const Grid& grid = *u.grid;
  if (grid.dim() != 1) throw std::invalid_argument("profile dump is for d=1 fields");
  write_atomically(path, [&](std::ostream& out) {
    out << "x,value\n";
    for (NodeId i = 0; i < u.size(); ++i)
      out << format_double(grid.coords[i][0]) << ',' << format_double(u[i]) << '\n';
  });
}

void write_pgm_heatmap(const fs::path& path, const ScalarField& u) {
  const Grid& grid = *u.grid;
  if (grid.dim() != 2) throw std::invalid_argument("heatmaps are for d=2 fields");

  std::int32_t i0min = std::numeric_limits<std::int32_t>::max(), i0max = -i0min;
  std::int32_t i1min = i0min, i1max = i0max;
  for (const auto& iv : grid.lattice) {
    i0min = std::min(i0min, iv[0]);
    i0max = std::max(i0max, iv[0]);
    i1min = std::min(i1min, iv[1]);
    i1max = std::max(i1max, iv[1]);
  }
  const int width = i0max - i0min + 1;
  const int height = i1max - i1min + 1;

  const double vmin = min_value(u);
  const double vmax = max_value(u);
  const double span = vmax - vmin;

  write_atomically(path, [&](std::ostream& out) {
    out << "P5\n" << width << ' ' << height << "\n255\n";
    // Row 0 is the top of the image = largest x2.
    for (std::int32_t row = i1max; row >= i1min; --row) {
      for (std::int32_t col = i0min; col <= i0max; ++col) {
        unsigned char pixel = 0;
        if (auto id = grid.node_at({col, row, 0})) {
          const double t = span > 0.0 ? (u[*id] - vmin) / span : 0.5;
          pixel = static_cast<unsigned char>(1 + std::lround(t * 254.0));
        }
        out.put(static_cast<char>(pixel));
      }
    }
  });

  const fs::path sidecar = path.string() + ".scale.txt";
  write_atomically(sidecar, [&](std::ostream& out) {
    out << "pixel = 0 outside the domain; otherwise 1 + round(254*(value - vmin)/(vmax - vmin))\n";
    out << "vmin=" << format_double(vmin) << "\n";
    out << "vmax=" << format_double(vmax) << "\n";
    out << "width=" << width << " height=" << height << "\n";
    out << "row 0 holds the largest x2; column 0 the smallest x1\n";
  });
}

void write_slice_csv(const fs::path& path, const ScalarField& u, int axis,
                     std::int32_t index) {
  const Grid& grid = *u.grid;
  if (grid.dim() != 3) throw std::invalid_argument("slice dump is for d=3 fields");
  if (axis < 0 || axis > 2) throw std::invalid_argument("slice axis must be 0..2");
  write_atomically(path, [&](std::ostream& out) {
    out << "node_id,x1,x2,x3,value\n";
    for (NodeId i = 0; i < u.size(); ++i) {
      if (grid.lattice[i][axis] != index) continue;
      out << i;
      for (int a = 0; a < 3; ++a) out << ',' << format_double(grid.coords[i][a]);
      out << ',' << format_double(u[i]) << '\n';
    }
  });
}

void write_json(const fs::path& path, const nlohmann::ordered_json& j) {
  write_atomically(path, [&](std::ostream& out) { out << j.dump(2) << '\n'; });
}

}  // namespace epsball
