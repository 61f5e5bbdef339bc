#include "numerov/tridiagonal_lu.hpp"

#include <cmath>

#include "numerov/errors.hpp"

namespace numerov {

TridiagonalLU::TridiagonalLU(std::span<const double> sub, std::span<const double> diag, std::span<const double> super)
    : dl_(sub.begin(), sub.end()), d_(diag.begin(), diag.end()), du_(super.begin(), super.end())
{
    const std::size_t n = d_.size();
    if (n == 0 || dl_.size() + 1 != n || du_.size() + 1 != n)
        throw DomainError("tridiagonal LU: inconsistent band lengths");

    du2_.assign(n > 2 ? n - 2 : 0, 0.0);
    swapped_.assign(n > 1 ? n - 1 : 0, 0);

    for (std::size_t i = 0; i + 1 < n; ++i) {
        if (std::abs(d_[i]) >= std::abs(dl_[i])) {
            if (d_[i] != 0.0) {
                const double fact = dl_[i] / d_[i];
                dl_[i] = fact;
                d_[i + 1] -= fact * du_[i];
            }
        } else {
            const double fact = d_[i] / dl_[i];
            d_[i] = dl_[i];
            dl_[i] = fact;
            const double temp = du_[i];
            du_[i] = d_[i + 1];
            d_[i + 1] = temp - fact * d_[i + 1];
            if (i + 2 < n) {
                du2_[i] = du_[i + 1];
                du_[i + 1] = -fact * du_[i + 1];
            }
            swapped_[i] = 1;
        }
    }
    for (double v : d_) {
        if (v == 0.0) singular_ = true;
    }
}

void TridiagonalLU::solve(std::span<double> b) const
{
    if (singular_) throw SingularFactorization("tridiagonal LU: zero pivot");
    const std::size_t n = d_.size();

    for (std::size_t i = 0; i + 1 < n; ++i) {
        if (!swapped_[i]) {
            b[i + 1] -= dl_[i] * b[i];
        } else {
            const double temp = b[i];
            b[i] = b[i + 1];
            b[i + 1] = temp - dl_[i] * b[i];
        }
    }

    b[n - 1] /= d_[n - 1];
    if (n > 1) b[n - 2] = (b[n - 2] - du_[n - 2] * b[n - 1]) / d_[n - 2];
    if (n > 2)
        for (std::size_t i = n - 2; i-- > 0;) b[i] = (b[i] - du_[i] * b[i + 1] - du2_[i] * b[i + 2]) / d_[i];
}

void TridiagonalLU::solve_transposed(std::span<double> b) const
{
    if (singular_) throw SingularFactorization("tridiagonal LU: zero pivot");
    const std::size_t n = d_.size();

    b[0] /= d_[0];
    if (n > 1) b[1] = (b[1] - du_[0] * b[0]) / d_[1];
    for (std::size_t i = 2; i < n; ++i) b[i] = (b[i] - du_[i - 1] * b[i - 1] - du2_[i - 2] * b[i - 2]) / d_[i];

    for (std::size_t i = n - 1; i-- > 0;) {
        if (!swapped_[i]) {
            b[i] -= dl_[i] * b[i + 1];
        } else {
            const double temp = b[i + 1];
            b[i + 1] = b[i] - dl_[i] * temp;
            b[i] = temp;
        }
    }
}

} // namespace numerov
