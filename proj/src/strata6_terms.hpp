#pragma once

// Terms {coefficient, i, j, k} of coefficient * a^i * b^j * c^k.

#include <array>
#include <cstdint>

namespace morsepoly::detail {

struct Term {
  std::int64_t coef;
  int i, j, k;
};

inline constexpr std::array<Term, 16> kDiscriminantTerms = {{
    {16, 4, 0, 1},
    {-4, 3, 2, 0},
    {-64, 3, 0, 1},
    {16, 2, 2, 0},
    {-320, 2, 1, 1},
    {-128, 2, 0, 2},
    {72, 1, 3, 0},
    {144, 1, 2, 1},
    {1152, 1, 1, 1},
    {2304, 1, 0, 2},
    {-27, 0, 4, 0},
    {-256, 0, 3, 0},
    {-96, 0, 2, 1},
    {-768, 0, 1, 2},
    {256, 0, 0, 3},
    {-6912, 0, 0, 2},
}};

inline constexpr std::array<Term, 57> kDistinctValuesTerms = {{
    {37500, 7, 1, 0},
    {-15625, 6, 2, 0},
    {-688000, 6, 1, 0},
    {-90000, 6, 0, 1},
    {-480000, 5, 2, 0},
    {-450000, 5, 1, 1},
    {3624960, 5, 1, 0},
    {1651200, 5, 0, 1},
    {600000, 4, 3, 0},
    {187500, 4, 2, 1},
    {13363200, 4, 2, 0},
    {13824000, 4, 1, 1},
    {-5898240, 4, 1, 0},
    {1080000, 4, 0, 2},
    {-8699904, 4, 0, 1},
    {-125000, 3, 4, 0},
    {-9344000, 3, 3, 0},
    {-8160000, 3, 2, 1},
    {-73662464, 3, 2, 0},
    {1800000, 3, 1, 2},
    {-163184640, 3, 1, 1},
    {-28416000, 3, 0, 2},
    {14155776, 3, 0, 1},
    {1440000, 2, 4, 0},
    {1200000, 2, 3, 1},
    {3932160, 2, 3, 0},
    {-750000, 2, 2, 2},
    {126259200, 2, 2, 1},
    {116391936, 2, 2, 0},
    {-24576000, 2, 1, 2},
    {723517440, 2, 1, 1},
    {-4320000, 2, 0, 3},
    {299630592, 2, 0, 2},
    {19046400, 1, 4, 0},
    {-46080000, 1, 3, 1},
    {154140672, 1, 3, 0},
    {23040000, 1, 2, 2},
    {-438829056, 1, 2, 1},
    {-2400000, 1, 1, 3},
    {-47185920, 1, 1, 2},
    {-1056964608, 1, 1, 1},
    {70656000, 1, 0, 3},
    {-1264582656, 1, 0, 2},
    {-4096000, 0, 5, 0},
    {7680000, 0, 4, 1},
    {-66322432, 0, 4, 0},
    {-4800000, 0, 3, 2},
    {96337920, 0, 3, 1},
    {1000000, 0, 2, 3},
    {-8601600, 0, 2, 2},
    {276824064, 0, 2, 1},
    {-23552000, 0, 1, 3},
    {421527552, 0, 1, 2},
    {-203423744, 0, 0, 3},
    {-268435456, 0, 3, 0},
    {1811939328, 0, 0, 2},
    {5760000, 0, 0, 4},
}};

inline constexpr std::array<Term, 16> kNonzeroValuesTerms = {{
    {5625, 4, 0, 1},
    {-1250, 3, 2, 0},
    {-21600, 3, 0, 1},
    {4800, 2, 2, 0},
    {-120000, 2, 1, 1},
    {-60000, 2, 0, 2},
    {24000, 1, 3, 0},
    {60000, 1, 2, 1},
    {414720, 1, 1, 1},
    {1036800, 1, 0, 2},
    {-10000, 0, 4, 0},
    {-81920, 0, 3, 0},
    {-38400, 0, 2, 1},
    {-384000, 0, 1, 2},
    {160000, 0, 0, 3},
    {-2985984, 0, 0, 2},
}};

}  // namespace morsepoly::detail
