#pragma once

#include <string>

#include "fracml/ab_operators.hpp"
#include "fracml/nonlocal_space.hpp"
#include "fracml/parabolic_solver.hpp"

namespace fracml {

/// Write via temp file + rename so readers never observe partial artifacts.
void atomic_write_file(const std::string& path, const std::string& content);

std::string format_time_series_csv(const TimeSeries& s);
TimeSeries parse_time_series_csv(const std::string& content);
TimeSeries read_time_series_csv(const std::string& path);

std::string format_field_csv(const SpaceTimeField& f);
SpaceTimeField parse_field_csv(const std::string& content);
SpaceTimeField read_field_csv(const std::string& path);

std::string format_xfield_csv(const SampledField& f);
SampledField parse_xfield_csv(const std::string& content);
SampledField read_xfield_csv(const std::string& path);

std::string far_field_tag(const FarFieldModel& m);
FarFieldModel parse_far_field_tag(const std::string& tag);

std::string read_text_file(const std::string& path);

}  // namespace fracml
