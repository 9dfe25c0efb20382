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


#include "noonforge/io.h"

#include <cstdio>
#include <stdexcept>

namespace noonforge {

std::string format_double(double value) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.17g", value);
    return buf;
}

CsvWriter::CsvWriter(std::ostream &out, const std::vector<std::string> &header)
    : out_(out), columns_(header.size()) {
    row(header);
}

void CsvWriter::row(const std::vector<std::string> &fields) {
    if (fields.size() != columns_) {
        throw std::invalid_argument("csv row has the wrong number of fields");
    }
    for (std::size_t i = 0; i < fields.size(); ++i) {
        if (i > 0) {
            out_ << ',';
        }
        out_ << fields[i];
    }
    out_ << '\n';
}

void write_state_csv(std::ostream &out, const StateVector &state) {
    CsvWriter csv(out, {"a", "b1", "b2", "level", "re", "im"});
    const ModeLayout &layout = state.layout();
    for (std::size_t i = 0; i < layout.dimension(); ++i) {
        FockIndex idx = layout.multi_index(i);
        Complex v = state[i];
        csv.row({std::to_string(idx.a), std::to_string(idx.b1), std::to_string(idx.b2), std::to_string(idx.level),
                 format_double(v.real()), format_double(v.imag())});
    }
}

void write_operator_csv(std::ostream &out, const CMatrix &matrix) {
    CsvWriter csv(out, {"row", "col", "re", "im"});
    for (Eigen::Index r = 0; r < matrix.rows(); ++r) {
        for (Eigen::Index c = 0; c < matrix.cols(); ++c) {
            Complex v = matrix(r, c);
            if (v != 0.0) {
                csv.row({std::to_string(r), std::to_string(c), format_double(v.real()), format_double(v.imag())});
            }
        }
    }
}

}  // namespace noonforge
