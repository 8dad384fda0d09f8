#include "fracml/io.hpp"

#include <cinttypes>
#include <cstdio>
#include <fstream>
#include <map>
#include <sstream>

#include "fracml/errors.hpp"

namespace fracml {

namespace {

std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

// "# key=value,key=value" metadata lines
std::map<std::string, std::string> parse_metadata(const std::string& content) {
  std::map<std::string, std::string> meta;
  std::istringstream in(content);
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    if (line[0] != '#') break;
    std::string body = line.substr(1);
    std::istringstream pairs(body);
    std::string kv;
    while (std::getline(pairs, kv, ',')) {
      const auto eq = kv.find('=');
      if (eq == std::string::npos) continue;
      std::string key = kv.substr(0, eq);
      key.erase(0, key.find_first_not_of(" \t"));
      key.erase(key.find_last_not_of(" \t") + 1);
      meta[key] = kv.substr(eq + 1);
    }
  }
  return meta;
}

double meta_num(const std::map<std::string, std::string>& meta,
                const std::string& key) {
  auto it = meta.find(key);
  if (it == meta.end()) throw DataError("missing metadata field: " + key);
  return std::stod(it->second);
}

std::string meta_str(const std::map<std::string, std::string>& meta,
                     const std::string& key) {
  auto it = meta.find(key);
  if (it == meta.end()) throw DataError("missing metadata field: " + key);
  return it->second;
}

std::vector<std::vector<double>> parse_rows(const std::string& content) {
  std::vector<std::vector<double>> rows;
  std::istringstream in(content);
  std::string line;
  bool header_seen = false;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    if (!header_seen) {  // column header line
      header_seen = true;
      continue;
    }
    std::vector<double> row;
    std::istringstream cells(line);
    std::string cell;
    while (std::getline(cells, cell, ',')) {
      try {
        row.push_back(std::stod(cell));
      } catch (const std::exception&) {
        throw DataError("malformed CSV cell: " + cell);
      }
    }
    if (!row.empty()) rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace

void atomic_write_file(const std::string& path, const std::string& content) {
  const std::string tmp = path + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw DataError("cannot open for writing: " + tmp);
    out.write(content.data(), (std::streamsize)content.size());
    if (!out) throw DataError("write failed: " + tmp);
  }
  if (std::rename(tmp.c_str(), path.c_str()) != 0) {
    throw DataError("atomic rename failed for: " + path);
  }
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DataError("cannot open file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string far_field_tag(const FarFieldModel& m) {
  switch (m.kind) {
    case FarFieldKind::zero:
      return "zero";
    case FarFieldKind::constant:
      return "constant";
    case FarFieldKind::power_growth:
      return "power_growth:" + fmt(m.growth_exponent);
    case FarFieldKind::none:
      return "none";
  }
  return "none";
}

FarFieldModel parse_far_field_tag(const std::string& tag) {
  if (tag == "zero") return {FarFieldKind::zero, 0.0};
  if (tag == "constant") return {FarFieldKind::constant, 0.0};
  if (tag == "none") return {FarFieldKind::none, 0.0};
  if (tag.rfind("power_growth:", 0) == 0) {
    return {FarFieldKind::power_growth, std::stod(tag.substr(13))};
  }
  throw DataError("unknown far-field tag: " + tag);
}

std::string format_time_series_csv(const TimeSeries& s) {
  std::ostringstream out;
  out << "# fracml series v1\n";
  out << "# a=" << fmt(s.grid.a) << ",b=" << fmt(s.grid.b)
      << ",kappa=" << s.grid.kappa << "\n";
  out << "t,value\n";
  for (int k = 0; k <= s.grid.kappa; ++k) {
    out << fmt(s.grid.node(k)) << "," << fmt(s.values[k]) << "\n";
  }
  return out.str();
}

TimeSeries parse_time_series_csv(const std::string& content) {
  const auto meta = parse_metadata(content);
  const auto rows = parse_rows(content);
  TimeSeries s;
  s.grid = TimeGrid::make(meta_num(meta, "a"), meta_num(meta, "b"),
                          (int)meta_num(meta, "kappa"));
  if ((int)rows.size() != s.grid.kappa + 1) {
    throw DataError("series row count does not match kappa");
  }
  s.values.resize(rows.size());
  for (size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != 2) throw DataError("series rows need 2 columns");
    s.values[i] = rows[i][1];
  }
  return s;
}

TimeSeries read_time_series_csv(const std::string& path) {
  return parse_time_series_csv(read_text_file(path));
}

std::string format_field_csv(const SpaceTimeField& f) {
  std::ostringstream out;
  out << "# fracml field v1\n";
  out << "# a=" << fmt(f.tgrid.a) << ",b=" << fmt(f.tgrid.b)
      << ",kappa=" << f.tgrid.kappa << ",half_width=" << fmt(f.xgrid.half_width)
      << ",n_points=" << f.xgrid.n_points
      << ",far_field=" << far_field_tag(f.xgrid.far_field) << "\n";
  out << "t";
  for (int j = 0; j < f.xgrid.n_points; ++j) {
    out << ",x" << j;
  }
  out << "\n";
  for (int k = 0; k <= f.tgrid.kappa; ++k) {
    out << fmt(f.tgrid.node(k));
    for (int j = 0; j < f.xgrid.n_points; ++j) out << "," << fmt(f.at(k, j));
    out << "\n";
  }
  return out.str();
}

SpaceTimeField parse_field_csv(const std::string& content) {
  const auto meta = parse_metadata(content);
  const auto rows = parse_rows(content);
  const TimeGrid tg = TimeGrid::make(meta_num(meta, "a"), meta_num(meta, "b"),
                                     (int)meta_num(meta, "kappa"));
  const SpaceGrid xg =
      SpaceGrid::make(meta_num(meta, "half_width"),
                      (int)meta_num(meta, "n_points"),
                      parse_far_field_tag(meta_str(meta, "far_field")));
  if ((int)rows.size() != tg.kappa + 1) {
    throw DataError("field row count does not match kappa");
  }
  SpaceTimeField f = SpaceTimeField::make(tg, xg);
  for (int k = 0; k <= tg.kappa; ++k) {
    if ((int)rows[k].size() != xg.n_points + 1) {
      throw DataError("field row width does not match n_points");
    }
    for (int j = 0; j < xg.n_points; ++j) f.at(k, j) = rows[k][j + 1];
  }
  return f;
}

SpaceTimeField read_field_csv(const std::string& path) {
  return parse_field_csv(read_text_file(path));
}

std::string format_xfield_csv(const SampledField& f) {
  std::ostringstream out;
  out << "# fracml xfield v1\n";
  out << "# half_width=" << fmt(f.grid().half_width)
      << ",n_points=" << f.grid().n_points
      << ",far_field=" << far_field_tag(f.grid().far_field) << "\n";
  out << "x,value\n";
  for (int j = 0; j < f.grid().n_points; ++j) {
    out << fmt(f.grid().node(j)) << "," << fmt(f.values()[j]) << "\n";
  }
  return out.str();
}

SampledField parse_xfield_csv(const std::string& content) {
  const auto meta = parse_metadata(content);
  const auto rows = parse_rows(content);
  const SpaceGrid xg =
      SpaceGrid::make(meta_num(meta, "half_width"),
                      (int)meta_num(meta, "n_points"),
                      parse_far_field_tag(meta_str(meta, "far_field")));
  if ((int)rows.size() != xg.n_points) {
    throw DataError("xfield row count does not match n_points");
  }
  std::vector<double> vals(rows.size());
  for (size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != 2) throw DataError("xfield rows need 2 columns");
    vals[i] = rows[i][1];
  }
  return SampledField(xg, std::move(vals));
}

SampledField read_xfield_csv(const std::string& path) {
  return parse_xfield_csv(read_text_file(path));
}

}  // namespace fracml
