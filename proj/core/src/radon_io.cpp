#include "volterra/radon.hpp"

#include <charconv>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace volterra {

namespace {

std::string sidecar_path(const std::string& path) {
  const auto slash = path.find_last_of("/\\");
  const auto dot = path.find_last_of('.');
  if (dot == std::string::npos || (slash != std::string::npos && dot < slash))
    return path + ".json";
  return path.substr(0, dot) + ".json";
}

std::string shortest(double v) {
  char buf[32];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
  (void)ec;
  return std::string(buf, ptr);
}

}  // namespace

void write_grid_csv(const Grid2D& F, const std::string& path) {
  std::ofstream os(path);
  if (!os) throw std::runtime_error("cannot open '" + path + "' for writing");
  const std::size_t m = F.m();
  // Top row first: iy = m-1 holds the largest y.
  for (std::size_t r = 0; r < m; ++r) {
    const std::size_t iy = m - 1 - r;
    for (std::size_t ix = 0; ix < m; ++ix) {
      if (ix) os << ',';
      os << shortest(F.at(ix, iy));
    }
    os << '\n';
  }
  if (!os) throw std::runtime_error("failed writing '" + path + "'");

  nlohmann::json meta;
  meta["m"] = m;
  meta["support_tolerance"] = F.support_tolerance();
  std::ofstream js(sidecar_path(path));
  if (!js) throw std::runtime_error("cannot write grid sidecar for '" + path + "'");
  js << meta.dump(2) << '\n';
}

Grid2D read_grid_csv(const std::string& path) {
  std::ifstream is(path);
  if (!is) throw std::runtime_error("cannot open '" + path + "'");

  std::vector<std::vector<double>> rows;
  std::string line;
  while (std::getline(is, line)) {
    if (line.empty()) continue;
    std::vector<double> row;
    std::size_t start = 0;
    while (start <= line.size()) {
      std::size_t end = line.find(',', start);
      if (end == std::string::npos) end = line.size();
      double v = 0.0;
      const char* first = line.data() + start;
      const char* last = line.data() + end;
      while (first < last && (*first == ' ' || *first == '\t')) ++first;
      auto [ptr, ec] = std::from_chars(first, last, v);
      while (ptr < last && (*ptr == ' ' || *ptr == '\t' || *ptr == '\r')) ++ptr;
      if (ec != std::errc{} || ptr != last)
        throw std::runtime_error("bad number in grid CSV '" + path + "'");
      row.push_back(v);
      start = end + 1;
    }
    rows.push_back(std::move(row));
  }

  const std::size_t m = rows.size();
  if (m < 2) throw std::runtime_error("grid CSV needs at least 2 rows");
  for (const auto& row : rows)
    if (row.size() != m)
      throw std::runtime_error("grid CSV must be square (m rows of m values)");

  double tol = 1e-8;
  std::ifstream js(sidecar_path(path));
  if (js) {
    nlohmann::json meta = nlohmann::json::parse(js, nullptr, true, true);
    if (meta.contains("m") && meta["m"].get<std::size_t>() != m)
      throw std::runtime_error("grid sidecar disagrees with CSV size");
    if (meta.contains("support_tolerance"))
      tol = meta["support_tolerance"].get<double>();
  }

  std::vector<double> values(m * m);
  for (std::size_t r = 0; r < m; ++r) {
    const std::size_t iy = m - 1 - r;
    for (std::size_t ix = 0; ix < m; ++ix) values[iy * m + ix] = rows[r][ix];
  }
  return Grid2D(m, std::move(values), tol);
}

}  // namespace volterra
