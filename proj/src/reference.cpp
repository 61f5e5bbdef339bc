#include "numerov/reference.hpp"

namespace numerov::reference {

std::optional<std::size_t> row_of(std::int64_t N)
{
    for (std::size_t i = 0; i < kReferenceN.size(); ++i)
        if (kReferenceN[i] == N) return i;
    return std::nullopt;
}

std::optional<std::size_t> column_of(int n, int l)
{
    if (l != 0) return std::nullopt;
    for (std::size_t j = 0; j < kReferenceStates.size(); ++j)
        if (kReferenceStates[j] == n) return j;
    return std::nullopt;
}

std::optional<double> grid_size(std::int64_t N, int n, int l)
{
    const auto r = row_of(N);
    const auto c = column_of(n, l);
    if (!r || !c) return std::nullopt;
    return kGridSize[*r][*c];
}

} // namespace numerov::reference
