#pragma once

#include <array>
#include <cstdint>
#include <optional>

// Published hydrogen reference data for the matrix Numerov pencil with
// variationally optimized grid sizes. Rows follow kReferenceN, columns
// follow kReferenceStates (s states, l = 0). Energies are magnitudes |E|.
namespace numerov::reference {

inline constexpr std::array<std::int64_t, 9> kReferenceN{500, 1000, 1500, 2000, 2500, 5000, 7500, 10000, 15000};
inline constexpr std::array<int, 6> kReferenceStates{1, 2, 3, 4, 5, 10};

using Row = std::array<double, 6>;

/// Optimized grid sizes h(N, ns) for the pure Coulomb potential.
inline constexpr std::array<Row, 9> kGridSize{{
    {0.016764, 0.041090, 0.073143, 0.112906, 0.160429, 0.518061},
    {0.009129, 0.022209, 0.039261, 0.060262, 0.085171, 0.268797},
    {0.006378, 0.015458, 0.027225, 0.041659, 0.058729, 0.183493},
    {0.004941, 0.011920, 0.020973, 0.032028, 0.045083, 0.140004},
    {0.004048, 0.009749, 0.017134, 0.026108, 0.036703, 0.113499},
    {0.002171, 0.005199, 0.009070, 0.013798, 0.019333, 0.059092},
    {0.001498, 0.003590, 0.006244, 0.009485, 0.013268, 0.040302},
    {0.001160, 0.002755, 0.004798, 0.007261, 0.010146, 0.030702},
    {0.000804, 0.001902, 0.003286, 0.004979, 0.006947, 0.020917},
}};

/// |E| at the grid sizes above, pure Coulomb potential.
inline constexpr std::array<Row, 9> kCoulombEnergy{{
    {0.4998954423, 0.1249243874, 0.0554876675, 0.0311852044, 0.0199368695, 0.0049440578},
    {0.4999690692, 0.1249776755, 0.0555354185, 0.0312305773, 0.0199807819, 0.0049807719},
    {0.4999849515, 0.1249891750, 0.0555457959, 0.0312405672, 0.0199906272, 0.0049901987},
    {0.4999910010, 0.1249935460, 0.0555497440, 0.0312443816, 0.0199944088, 0.0049940255},
    {0.4999939700, 0.1249956864, 0.0555516764, 0.0312462510, 0.0199962672, 0.0049959622},
    {0.4999982742, 0.1249987763, 0.0555544612, 0.0312489454, 0.0199989507, 0.0049988427},
    {0.4999991736, 0.1249994173, 0.0555550364, 0.0312495010, 0.0199995043, 0.0049994518},
    {0.4999995110, 0.1249996564, 0.0555552504, 0.0312497072, 0.0199997095, 0.0049996789},
    {0.4999997669, 0.1249998372, 0.0555554115, 0.0312498622, 0.0199998636, 0.0049998498},
}};

/// Accelerated |E| (screened potential), indicative only.
inline constexpr std::array<Row, 9> kAcceleratedEnergy{{
    {0.4999981387, 0.1249935304, 0.0555500986, 0.0312443978, 0.0199943970, 0.0049946365},
    {0.4999995666, 0.1249981450, 0.0555539025, 0.0312481011, 0.0199978112, 0.0049957720},
    {0.4999998415, 0.1249991616, 0.0555548140, 0.0312491164, 0.0199989347, 0.0049995057},
    {0.4999999394, 0.1249995392, 0.0555551559, 0.0312495120, 0.0199993941, 0.0049996099},
    {0.4999999699, 0.1249997087, 0.0555553086, 0.0312496943, 0.0199996129, 0.0049997098},
    {0.5000000010, 0.1249999336, 0.0555555062, 0.0312499361, 0.0199999133, 0.0049999207},
    {0.4999999960, 0.1249999684, 0.0555555341, 0.0312499728, 0.0199999626, 0.0049999651},
    {0.5000000037, 0.1249999866, 0.0555555485, 0.0312499899, 0.0199999842, 0.0049999865},
    {0.5000000036, 0.1249999959, 0.0555555548, 0.0312499981, 0.0199999956, 0.0049999976},
}};

/// Iteration counts of the accelerated runs per state column.
inline constexpr std::array<int, 6> kAcceleratedIterations{3, 1, 2, 4, 6, 15};

/// Worked 1s example: N1 = 7500, N2 = 10000 with the tabulated grid sizes.
struct WorkedIteration {
    double nu_n1;
    double nu_n2;
    double energy_n1;
    double energy_n2;
};
inline constexpr std::array<WorkedIteration, 4> kWorked1s{{
    {1.457709, 1.467792, -0.4999997807, -0.4999998747},
    {1.444173, 1.454678, -0.4999998586, -0.4999999214},
    {1.430636, 1.441564, -0.4999999465, -0.4999999741},
    {1.417100, 1.428451, -0.5000000458, -0.5000000336},
}};
inline constexpr double kWorked1sFinal = -0.5000000037;

std::optional<std::size_t> row_of(std::int64_t N);
std::optional<std::size_t> column_of(int n, int l);

/// Tabulated grid size for (N, ns), if present.
std::optional<double> grid_size(std::int64_t N, int n, int l = 0);

} // namespace numerov::reference
