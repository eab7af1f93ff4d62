// Copyright 2026 The ZZZY Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef ZZZY_PLOT_H
#define ZZZY_PLOT_H

#include <iosfwd>
#include <string>
#include <vector>

#include "zzzy/monte_carlo.h"

namespace zzzy {

struct PlotOptions {
  /// "A", "p", or "auto" (A when the rows span several asymmetries).
  std::string x_axis = "auto";
  std::string title;
  int width = 720;
  int height = 480;
};

/// Static SVG line chart of p_L against A or p on log-log axes, one series
/// per (family, d), with Wilson intervals as error bars. Points with p_L = 0
/// or an infinite abscissa cannot be placed on log axes and are skipped.
/// Throws std::invalid_argument if nothing is plottable.
void write_svg(std::ostream& out, const std::vector<CsvRow>& rows, const PlotOptions& options = {});

}  // namespace zzzy

#endif  // ZZZY_PLOT_H
