#pragma once

#include <string_view>
#include <vector>

namespace idealarr::data {

using StringRows = std::vector<std::vector<std::string_view>>;
// table[m] is the matrix P_m, row-major, entries as rational literals.
using MatrixTable = std::vector<StringRows>;

const StringRows& e8_root_codes();

const MatrixTable& f4_matrices();
const MatrixTable& e6_matrices();
const MatrixTable& e7_matrices();
const MatrixTable& e8_matrices();

}  // namespace idealarr::data
