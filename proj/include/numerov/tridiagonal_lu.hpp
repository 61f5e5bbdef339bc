#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace numerov {

/// LU factorization with partial pivoting of a general tridiagonal matrix,
/// same storage scheme as LAPACK's ?gttrf (U gains a second superdiagonal).
class TridiagonalLU {
public:
    /// sub/super have n-1 entries, diag has n.
    TridiagonalLU(std::span<const double> sub, std::span<const double> diag, std::span<const double> super);

    std::size_t size() const { return d_.size(); }
    bool singular() const { return singular_; }

    /// Overwrites b with T^{-1} b. Throws SingularFactorization on a zero pivot.
    void solve(std::span<double> b) const;
    /// Overwrites b with T^{-T} b.
    void solve_transposed(std::span<double> b) const;

private:
    std::vector<double> dl_, d_, du_, du2_;
    std::vector<unsigned char> swapped_;
    bool singular_ = false;
};

} // namespace numerov
