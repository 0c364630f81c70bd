#pragma once

#include <cstdint>

namespace dedupix::detail {
// 256 sampling pairs for the binary descriptor, drawn once from a seeded
// Gaussian (sigma = patch/5) and frozen here so descriptors are identical
// across builds. Layout: ax, ay, bx, by per pair, offsets within +/-15.
inline constexpr int8_t kBriefPattern[256][4] = {
    {1, -2, -4, 6}, {-8, 5, 5, -2}, {-15, 15, -3, -3}, {9, 5, -13, 4},
    {5, 0, -14, -12}, {4, 0, -6, 10}, {4, 1, -2, 8}, {2, 5, -3, -6},
    {10, 2, -12, -8}, {-4, -7, -2, -3}, {10, 6, 5, 11}, {5, -7, -3, 14},
    {2, 4, -2, 1}, {1, 7, -9, 0}, {2, -9, 2, -1}, {-15, -5, -1, -1},
    {-1, 3, 1, 0}, {2, 5, 1, -5}, {-2, 4, 0, -5}, {-3, -7, -3, 3},
    {1, -7, 4, 0}, {5, -2, -11, -5}, {-3, 8, -6, 2}, {-4, 3, 0, -7},
    {10, 4, 0, 0}, {-1, -1, 4, -9}, {0, -5, -1, 3}, {1, 1, 3, -7},
    {-5, 4, -4, -1}, {-7, -6, 6, 5}, {13, -15, 0, 3}, {-9, -3, 2, 6},
    {12, 1, 3, -3}, {-9, 0, -2, 1}, {3, -2, 0, 9}, {-4, 7, 7, -7},
    {-9, 4, -3, -2}, {-2, 0, 4, 5}, {3, 0, 5, -1}, {1, -6, 6, -6},
    {2, 9, 1, 0}, {14, -7, -5, -11}, {1, 0, -2, 0}, {-8, 9, -9, 1},
    {-4, -1, 3, 4}, {12, 4, -5, -3}, {2, 8, 6, 3}, {-3, -3, -9, -2},
    {-5, -2, 4, 2}, {1, -6, -3, 5}, {8, -2, 3, 2}, {9, 3, 4, 3},
    {-1, -2, 2, -8}, {2, 2, -4, 0}, {5, -3, -2, 8}, {-11, 0, 1, -2},
    {-3, -4, 1, -4}, {-1, -6, -10, 3}, {4, 1, 3, -1}, {6, 8, 4, 11},
    {3, -3, 0, 0}, {2, 0, -2, -3}, {-2, 8, -9, 1}, {-6, -5, 5, 1},
    {-7, -3, -3, -13}, {-8, 7, -7, -5}, {-5, -6, 2, 0}, {3, -4, -3, 4},
    {-12, 2, 7, 7}, {-4, 7, 0, -6}, {-2, -2, 5, -11}, {0, -1, 6, -1},
    {-9, 3, -2, 8}, {-2, -12, -1, -1}, {0, -2, 15, -10}, {9, 6, -2, -1},
    {3, -3, -4, -5}, {-9, 1, 0, 0}, {5, 5, 0, 6}, {2, 5, 4, -1},
    {0, -4, 1, 6}, {6, 5, -9, -15}, {-12, -7, -3, -7}, {-1, 2, -1, 4},
    {-1, -7, -2, -9}, {-12, -8, 2, -6}, {-11, 5, -1, -3}, {12, 2, 9, -4},
    {13, 9, -4, -3}, {-5, -1, 1, 15}, {-9, 1, 4, 5}, {9, -2, 7, -10},
    {0, -9, 6, -7}, {-2, 5, -7, -10}, {0, 1, 3, 11}, {4, 11, -6, 0},
    {0, 0, -6, 2}, {9, -5, 4, -4}, {-14, 4, 2, 0}, {11, 3, -12, 9},
    {6, 9, -15, 5}, {-2, 9, 4, 2}, {-2, -4, -1, 4}, {2, -6, -2, 11},
    {-11, 6, 1, -2}, {12, -4, 10, 1}, {-1, -1, 7, -4}, {10, 0, 0, -8},
    {6, -11, 5, -2}, {-2, 4, -4, 3}, {6, 8, -1, 2}, {-6, 5, -10, -6},
    {-1, -3, -4, 1}, {5, -8, -2, -14}, {-2, 1, 1, -2}, {-8, 8, -1, -1},
    {6, 10, -5, -3}, {-4, -10, -2, 5}, {-2, 5, 4, 9}, {1, -1, -5, -6},
    {-5, 4, 2, -3}, {2, 7, 0, 5}, {-2, -2, 9, -3}, {-10, 10, -1, 10},
    {0, -11, -3, 2}, {-6, 7, 7, -2}, {5, -4, 3, 13}, {0, 0, -9, 4},
    {0, -5, -5, 7}, {6, 10, 2, -2}, {-1, -11, 4, 0}, {-2, 0, 15, -2},
    {-8, 10, 7, -12}, {-5, -2, 4, -9}, {0, 0, -1, -7}, {-1, -6, 8, 3},
    {-6, -5, 10, 9}, {11, 2, -6, 3}, {-5, -5, -12, 1}, {-1, 6, 3, 4},
    {-4, 6, -5, -2}, {5, 8, -6, -10}, {5, -6, 1, -10}, {0, 9, 1, -4},
    {8, -2, 6, 0}, {1, -2, 7, -4}, {5, -13, 9, -2}, {2, 1, -2, 0},
    {-1, 1, 1, 0}, {-1, 6, -2, -7}, {15, -1, 1, -8}, {-4, 7, -4, -2},
    {-7, -3, 3, -2}, {1, -2, 9, -15}, {1, 1, -6, 0}, {-6, -3, -2, 5},
    {-15, -1, 2, -7}, {1, 3, 2, 0}, {1, -7, -1, -9}, {15, 5, -3, -2},
    {-8, -13, 8, 4}, {-4, 3, 3, 4}, {4, 4, 7, 4}, {5, 7, 5, -1},
    {-4, 1, 4, -12}, {13, 4, 1, -3}, {-2, 8, 11, 1}, {-1, 2, -4, -7},
    {0, -5, 1, -4}, {0, -2, 7, 1}, {-5, 2, 0, 8}, {2, 1, 5, 10},
    {3, -1, -1, 11}, {-1, -5, 6, 3}, {-8, -6, 12, 1}, {6, 1, 4, 1},
    {-6, -4, 4, 3}, {-3, 2, 10, -7}, {8, 0, -4, -4}, {-6, -7, -3, -11},
    {4, 0, -10, 10}, {-4, 3, -2, 2}, {2, 6, 10, -5}, {-1, -8, 3, 9},
    {-1, 4, -10, -2}, {-8, 1, -11, -10}, {8, 3, 4, -2}, {2, 1, -7, -2},
    {10, 6, 4, -3}, {6, -5, 0, 3}, {2, 2, 12, 4}, {-5, -9, 0, -1},
    {-8, -4, 10, 12}, {0, 12, 4, -7}, {7, -3, -5, 1}, {-1, -3, -2, 0},
    {-1, -15, 4, -5}, {4, 3, -1, -4}, {1, 3, -9, 2}, {-2, 10, 2, 7},
    {0, 2, 5, -10}, {3, 10, -3, -2}, {-3, 2, 3, 0}, {1, -5, -2, 6},
    {3, 3, -2, -1}, {6, 5, -6, -2}, {-4, 11, 6, 1}, {1, 14, -2, 7},
    {-13, 5, -2, 10}, {-7, 11, 1, 12}, {1, 10, -5, -2}, {-2, 12, -2, 13},
    {5, 15, -14, 1}, {1, 5, -8, -1}, {-6, 7, 14, 10}, {-7, -1, -3, 2},
    {0, 3, 8, 3}, {8, -8, -7, -8}, {15, -6, -1, 2}, {0, 5, 2, 6},
    {3, -15, -6, -5}, {4, -2, 6, 5}, {1, 6, 1, 11}, {1, -3, -5, 13},
    {-5, -1, 8, -1}, {-4, -2, 5, 8}, {-8, 5, -13, 1}, {4, 4, -3, -5},
    {-5, 11, -15, -7}, {-15, 13, -2, 3}, {-4, -8, 7, 10}, {1, 5, -1, 8},
    {3, 3, 6, -9}, {3, -5, -2, 2}, {-2, -3, 1, 3}, {4, -2, 3, -1},
    {-1, -7, 0, 8}, {-14, 3, 3, 5}, {-10, -4, -3, 0}, {2, 9, -4, 9},
    {-8, 2, -3, 2}, {4, -2, 7, 9}, {0, -5, -5, 2}, {14, -8, 5, 3},
    {-3, 7, 3, 2}, {2, 2, 14, -2}, {-8, 0, 2, -2}, {-3, -4, 1, 2},
    {-8, -5, 6, 9}, {4, 9, 11, 2}, {8, 5, 4, -2}, {-2, 1, -2, 2},
    {-6, 5, -4, -7}, {1, 1, -2, -7}, {7, 6, 0, -2}, {1, -9, 0, 3},
};

}  // namespace dedupix::detail
