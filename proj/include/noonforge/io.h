// Copyright 2026 The NoonForge Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


// Plain-text dumps. Numbers are written with 17 significant digits so that
// every double round-trips, with '.' as decimal separator and LF endings.

#ifndef NOONFORGE_IO_H
#define NOONFORGE_IO_H

#include <initializer_list>
#include <ostream>
#include <string>
#include <vector>

#include "noonforge/fock.h"

namespace noonforge {

std::string format_double(double value);

/// Minimal CSV writer. Fields are written verbatim; callers only emit
/// identifiers and numbers, so no quoting is needed.
class CsvWriter {
   public:
    CsvWriter(std::ostream &out, const std::vector<std::string> &header);

    void row(const std::vector<std::string> &fields);
    std::size_t columns() const { return columns_; }

   private:
    std::ostream &out_;
    std::size_t columns_;
};

/// Columns a,b1,b2,level,re,im, one row per basis vector in flat order.
/// Absent modes are written as 0.
void write_state_csv(std::ostream &out, const StateVector &state);

/// Columns row,col,re,im for every nonzero entry, row-major.
void write_operator_csv(std::ostream &out, const CMatrix &matrix);

}  // namespace noonforge

#endif
