#ifndef BELL_TABLE_HPP
#define BELL_TABLE_HPP

#include <array>
#include <cstddef>

namespace bell {

/// 2x2 table of reals addressed by detector indices (i, j), both in {1, 2}.
/// Storage is row-major: (1,1), (1,2), (2,1), (2,2).
struct Table2x2 {
  std::array<double, 4> cells{};

  constexpr double& operator()(int i, int j) { return cells[index(i, j)]; }
  constexpr double operator()(int i, int j) const { return cells[index(i, j)]; }

  static constexpr std::size_t index(int i, int j) {
    return static_cast<std::size_t>((i - 1) * 2 + (j - 1));
  }

  friend constexpr bool operator==(const Table2x2&, const Table2x2&) = default;
};

constexpr Table2x2 make_table(double v11, double v12, double v21, double v22) {
  return Table2x2{{v11, v12, v21, v22}};
}

}  // namespace bell

#endif
