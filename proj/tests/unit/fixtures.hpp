#pragma once

// The word 3112322 over {1,2,3} and its queue states after each letter.

#include <vector>

#include "rspath/transform.hpp"

namespace fixtures {

inline const char* kWord = "3112322";

// d(n) for n = 1..7.
inline const std::vector<rspath::ArrayRows> kDepartures = {
    {{0, 0, 0}, {0, 0}, {1}}, {{1, 0, 0}, {1, 0}, {2}}, {{2, 0, 0}, {2, 0}, {3}}, {{2, 1, 0}, {2, 1}, {3}},
    {{2, 1, 1}, {2, 1}, {3}}, {{2, 2, 1}, {2, 2}, {3}}, {{2, 2, 1}, {3, 2}, {4}},
};

// q(n) for n = 1..7.
inline const std::vector<rspath::ArrayRows> kQueues = {
    {{0, 0}, {0}}, {{1, 0}, {1}}, {{2, 0}, {2}}, {{1, 1}, {1}}, {{1, 0}, {1}}, {{0, 1}, {0}}, {{0, 1}, {1}},
};

// Column-insertion tableaux after each letter.
inline const std::vector<std::vector<std::vector<int>>> kTableaux = {
    {{3}},
    {{1, 3}},
    {{1, 1, 3}},
    {{1, 1, 3}, {2}},
    {{1, 1, 3}, {2}, {3}},
    {{1, 1, 3}, {2, 2}, {3}},
    {{1, 1, 2, 3}, {2, 2}, {3}},
};

}  // namespace fixtures
