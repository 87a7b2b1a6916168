#pragma once

#include "splitcone/rational.hpp"

#include <vector>

namespace splitcone {

// Rank of a dense rational matrix (rows of equal length) by Gaussian
// elimination; exact.
int rational_rank(std::vector<std::vector<Rat>> rows);

} // namespace splitcone
