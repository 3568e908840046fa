/*
 * Copyright 2026 The optotriplet Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     https://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include "optotriplet/app/output.hpp"

#include <cstdio>
#include <fstream>
#include <iterator>
#include <system_error>

#include <unistd.h>

namespace optotriplet::app {

std::string format_number(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

void write_atomic(const std::filesystem::path& path, std::string_view content) {
  namespace fs = std::filesystem;
  if (path.has_parent_path()) fs::create_directories(path.parent_path());
  fs::path tmp = path;
  tmp += ".tmp." + std::to_string(::getpid());
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw fs::filesystem_error("cannot open for writing", tmp, std::error_code());
    out.write(content.data(), static_cast<std::streamsize>(content.size()));
    out.flush();
    if (!out) {
      throw fs::filesystem_error("write failed", tmp,
                                 std::make_error_code(std::errc::io_error));
    }
  }
  fs::rename(tmp, path);
}

std::string spectrum_csv(const std::vector<SpectrumRecord>& records) {
  std::string out(kSpectrumHeader);
  out += '\n';
  for (const auto& r : records) {
    const double row[] = {r.omega, r.omega_scaled, r.y.real(), r.y.imag(), r.s_qu,
                          r.s_thermal, r.s_f, r.s_sql, r.ratio};
    for (std::size_t i = 0; i < std::size(row); ++i) {
      if (i != 0) out += ',';
      out += format_number(row[i]);
    }
    out += '\n';
  }
  return out;
}

std::string comparison_csv(const ComparisonReport& report) {
  std::string out = "omega_rad_s,analytic,estimate,z\n";
  for (std::size_t i = 0; i < report.omega.size(); ++i) {
    out += format_number(report.omega[i]) + ',' + format_number(report.analytic[i]) + ',' +
           format_number(report.estimate[i]) + ',' + format_number(report.z[i]) + '\n';
  }
  return out;
}

}  // namespace optotriplet::app
