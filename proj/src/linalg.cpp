#include "splitcone/linalg.hpp"

namespace splitcone {

int rational_rank(std::vector<std::vector<Rat>> rows)
{
    if (rows.empty())
        return 0;
    const size_t cols = rows[0].size();
    size_t row = 0;
    int rank = 0;
    for (size_t col = 0; col < cols && row < rows.size(); ++col) {
        size_t pivot = row;
        while (pivot < rows.size() && rows[pivot][col] == 0)
            ++pivot;
        if (pivot == rows.size())
            continue;
        std::swap(rows[row], rows[pivot]);
        for (size_t r = row + 1; r < rows.size(); ++r) {
            if (rows[r][col] == 0)
                continue;
            Rat factor = rows[r][col] / rows[row][col];
            for (size_t c = col; c < cols; ++c)
                rows[r][c] -= factor * rows[row][c];
        }
        ++row;
        ++rank;
    }
    return rank;
}

} // namespace splitcone
