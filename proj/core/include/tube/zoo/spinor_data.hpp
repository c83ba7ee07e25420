#pragma once

#include <cstddef>
#include <tuple>
#include <vector>

namespace tube::zoo {

// Frozen basis of the quadrics cutting out the 10-dimensional spinor variety
// in its sub-Pfaffian coordinates; each entry is (coefficient, i, j) for
// coefficient * x_i * x_j. Reproduced from the parametrization by a test.
const std::vector<std::vector<std::tuple<long, std::size_t, std::size_t>>>& spinor5_quadric_table();

}  // namespace tube::zoo
