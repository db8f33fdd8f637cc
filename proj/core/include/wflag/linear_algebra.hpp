/*
 * Copyright (c) 2026, The wflag Authors.
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#pragma once

// Exact rank of sparse integer matrices.

#include <cstddef>
#include <utility>
#include <vector>

#include "wflag/polynomial.hpp"

namespace wflag {

/// One sparse row: (column, value) pairs with strictly increasing columns
/// and non-zero values.
using SparseRow = std::vector<std::pair<int, Integer>>;

/// Rank over the rationals of the matrix with the given rows.
///
/// The matrix is split into independent blocks (connected components of the
/// row/column incidence graph); each block is reduced by fraction-free
/// elimination on leading columns, with rows kept primitive.
std::size_t exact_rank(std::vector<SparseRow> rows, int num_cols);

/// Converts a row of rationals to a primitive integer row with the same span.
SparseRow primitive_integer_row(const std::vector<std::pair<int, Rational>>& row);

}  // namespace wflag
