#pragma once

// Published reference data: genus-3 full automorphism groups and the
// large-group loci for genus 4 to 10. Row numbers are the published ones.

#include <cstddef>
#include <string>
#include <vector>

namespace reference {

struct Genus3Row {
  std::size_t n, m;
  int g0;
  std::vector<int> periods;
  int delta;
  bool hyperelliptic;
};

inline const std::vector<Genus3Row> &genus3_rows() {
  static const std::vector<Genus3Row> rows = {
      // not normal homocyclic covers
      {168, 42, 0, {2, 3, 7}, 0, false},
      {6, 1, 0, {2, 2, 2, 2, 3}, 2, false},
      {2, 1, 1, {2, 2, 2, 2}, 4, false},
      // normal homocyclic, not hyperelliptic
      {4, 2, 0, {2, 2, 2, 2, 2, 2}, 3, false},
      {8, 3, 0, {2, 2, 2, 2, 2}, 2, false},
      {24, 12, 0, {2, 2, 2, 3}, 1, false},
      {96, 64, 0, {2, 3, 8}, 0, false},
      {16, 13, 0, {2, 2, 2, 4}, 1, false},
      {48, 33, 0, {2, 3, 12}, 0, false},
      {3, 1, 0, {3, 3, 3, 3, 3}, 2, false},
      {6, 2, 0, {2, 3, 3, 6}, 1, false},
      {9, 1, 0, {3, 9, 9}, 0, false},
      // hyperelliptic
      {48, 48, 0, {2, 4, 6}, 0, true},
      {32, 9, 0, {2, 4, 8}, 0, true},
      {24, 5, 0, {2, 4, 12}, 0, true},
      {14, 2, 0, {2, 7, 14}, 0, true},
      {16, 11, 0, {2, 2, 2, 4}, 1, true},
      {12, 4, 0, {2, 2, 2, 6}, 1, true},
      {8, 2, 0, {2, 2, 4, 4}, 1, true},
      {8, 5, 0, {2, 2, 2, 2, 2}, 2, true},
      {4, 1, 0, {2, 2, 2, 4, 4}, 2, true},
      {4, 2, 0, {2, 2, 2, 2, 2, 2}, 3, true},
      {2, 1, 0, {2, 2, 2, 2, 2, 2, 2, 2}, 5, true},
  };
  return rows;
}

struct LargeRow {
  int genus;
  int number;
  std::size_t n, m;
  std::vector<int> periods;
  std::vector<int> contains;
};

inline int delta_of(const LargeRow &r) { return static_cast<int>(r.periods.size()) - 3; }

inline const std::vector<LargeRow> &large_rows() {
  static const std::vector<LargeRow> rows = {
      {4, 1, 120, 34, {2, 4, 5}, {}},
      {4, 2, 72, 42, {2, 3, 12}, {}},
      {4, 3, 72, 40, {2, 4, 6}, {}},
      {4, 4, 40, 8, {2, 4, 10}, {}},
      {4, 5, 36, 12, {2, 6, 6}, {}},
      {4, 6, 32, 19, {2, 4, 16}, {}},
      {4, 7, 24, 3, {3, 4, 6}, {}},
      {4, 8, 18, 2, {2, 9, 18}, {}},
      {4, 9, 15, 1, {3, 5, 15}, {}},
      {4, 10, 36, 10, {2, 2, 2, 3}, {3}},
      {4, 11, 24, 12, {2, 2, 2, 4}, {1, 2}},
      {4, 12, 20, 4, {2, 2, 2, 5}, {4}},
      {4, 13, 18, 3, {2, 2, 3, 3}, {2, 5}},
      {4, 14, 16, 7, {2, 2, 2, 8}, {6}},

      {5, 1, 192, 181, {2, 3, 8}, {}},
      {5, 2, 160, 234, {2, 4, 5}, {}},
      {5, 3, 120, 35, {2, 3, 10}, {}},
      {5, 4, 96, 195, {2, 4, 6}, {}},
      {5, 5, 64, 32, {2, 4, 8}, {}},
      {5, 6, 48, 14, {2, 4, 12}, {}},
      {5, 7, 48, 30, {3, 4, 4}, {}},
      {5, 8, 40, 5, {2, 4, 20}, {}},
      {5, 9, 30, 2, {2, 6, 15}, {}},
      {5, 10, 22, 2, {2, 11, 22}, {}},
      {5, 11, 48, 48, {2, 2, 2, 3}, {1, 4}},
      {5, 12, 32, 43, {2, 2, 2, 4}, {}},
      {5, 13, 32, 28, {2, 2, 2, 4}, {1}},
      {5, 14, 32, 27, {2, 2, 2, 4}, {2, 4, 5}},
      {5, 15, 24, 14, {2, 2, 2, 6}, {6}},
      {5, 16, 24, 8, {2, 2, 2, 6}, {4}},
      {5, 17, 24, 13, {2, 2, 3, 3}, {3, 7}},
      {5, 18, 20, 4, {2, 2, 2, 10}, {3, 8}},

      {6, 1, 150, 5, {2, 3, 10}, {}},
      {6, 2, 120, 34, {2, 4, 6}, {}},
      {6, 3, 72, 15, {2, 4, 9}, {}},
      {6, 4, 56, 7, {2, 4, 14}, {}},
      {6, 5, 48, 6, {2, 4, 24}, {}},
      {6, 6, 48, 29, {2, 6, 8}, {}},
      {6, 7, 48, 15, {2, 6, 8}, {}},
      {6, 8, 39, 1, {3, 3, 13}, {}},
      {6, 9, 30, 1, {2, 10, 15}, {}},
      {6, 10, 26, 2, {2, 13, 26}, {}},
      {6, 11, 21, 2, {3, 7, 21}, {}},
      {6, 12, 60, 5, {2, 2, 2, 3}, {2}},
      {6, 13, 28, 3, {2, 2, 2, 7}, {4}},
      {6, 14, 24, 12, {2, 2, 3, 4}, {2}},
      {6, 15, 24, 8, {2, 2, 3, 4}, {3}},
      {6, 16, 24, 6, {2, 2, 2, 12}, {5}},
      {6, 17, 24, 6, {2, 2, 3, 4}, {7}},

      {7, 1, 504, 156, {2, 3, 7}, {}},
      {7, 2, 144, 127, {2, 3, 12}, {}},
      {7, 3, 64, 41, {2, 4, 16}, {}},
      {7, 4, 64, 38, {2, 4, 16}, {}},
      {7, 5, 56, 4, {2, 4, 28}, {}},
      {7, 6, 54, 6, {2, 6, 9}, {}},
      {7, 7, 54, 6, {2, 6, 9}, {}},
      {7, 8, 54, 3, {2, 6, 9}, {}},
      {7, 9, 48, 32, {3, 4, 6}, {}},
      {7, 10, 42, 4, {2, 6, 21}, {}},
      {7, 11, 32, 11, {4, 4, 8}, {}},
      {7, 12, 32, 10, {4, 4, 8}, {}},
      {7, 13, 30, 4, {2, 15, 30}, {}},
      {7, 14, 48, 48, {2, 2, 2, 4}, {}},
      {7, 15, 48, 41, {2, 2, 2, 4}, {2}},
      {7, 16, 48, 38, {2, 2, 2, 4}, {}},
      {7, 17, 36, 10, {2, 2, 2, 6}, {}},
      {7, 18, 32, 43, {2, 2, 2, 8}, {}},
      {7, 19, 32, 42, {2, 2, 2, 8}, {3}},
      {7, 20, 32, 39, {2, 2, 2, 8}, {4}},
      {7, 21, 28, 3, {2, 2, 2, 14}, {5}},

      {8, 1, 336, 208, {2, 3, 8}, {}},
      {8, 2, 336, 208, {2, 3, 8}, {}},
      {8, 3, 84, 7, {2, 6, 6}, {}},
      {8, 4, 84, 7, {2, 6, 6}, {}},
      {8, 5, 72, 8, {2, 4, 18}, {}},
      {8, 6, 64, 53, {2, 4, 32}, {}},
      {8, 7, 60, 8, {2, 6, 10}, {}},
      {8, 8, 48, 25, {2, 6, 24}, {}},
      {8, 9, 48, 17, {2, 8, 12}, {}},
      {8, 10, 48, 28, {3, 4, 8}, {}},
      {8, 11, 40, 10, {2, 10, 20}, {}},
      {8, 12, 34, 2, {2, 17, 34}, {}},
      {8, 13, 42, 1, {2, 2, 3, 3}, {1, 2, 3, 4}},
      {8, 14, 36, 4, {2, 2, 2, 9}, {5}},
      {8, 15, 32, 18, {2, 2, 2, 16}, {6}},
      {8, 16, 30, 3, {2, 2, 3, 5}, {7}},

      {9, 1, 320, 1582, {2, 4, 5}, {}},
      {9, 2, 192, 194, {2, 3, 12}, {}},
      {9, 3, 192, 990, {2, 4, 6}, {}},
      {9, 4, 192, 955, {2, 4, 6}, {}},
      {9, 5, 128, 138, {2, 4, 8}, {}},
      {9, 6, 128, 136, {2, 4, 8}, {}},
      {9, 7, 128, 134, {2, 4, 8}, {}},
      {9, 8, 128, 75, {2, 4, 8}, {}},
      {9, 9, 120, 35, {2, 5, 6}, {}},
      {9, 10, 120, 34, {2, 5, 6}, {}},
      {9, 11, 96, 187, {2, 4, 12}, {}},
      {9, 12, 96, 186, {2, 4, 12}, {}},
      {9, 13, 96, 13, {2, 4, 12}, {}},
      {9, 14, 80, 14, {2, 4, 20}, {}},
      {9, 15, 72, 5, {2, 4, 36}, {}},
      {9, 16, 64, 6, {2, 8, 8}, {}},
      {9, 17, 57, 1, {3, 3, 19}, {}},
      {9, 18, 48, 5, {2, 8, 24}, {}},
      {9, 19, 48, 4, {2, 8, 24}, {}},
      {9, 20, 48, 30, {4, 4, 6}, {}},
      {9, 21, 42, 3, {2, 14, 21}, {}},
      {9, 22, 40, 12, {4, 4, 10}, {}},
      {9, 23, 38, 2, {2, 19, 38}, {}},
      {9, 24, 96, 193, {2, 2, 2, 3}, {3}},
      {9, 25, 96, 227, {2, 2, 2, 3}, {4}},
      {9, 26, 64, 190, {2, 2, 2, 4}, {}},
      {9, 27, 64, 177, {2, 2, 2, 4}, {5}},
      {9, 28, 64, 140, {2, 2, 2, 4}, {}},
      {9, 29, 64, 138, {2, 2, 2, 4}, {4}},
      {9, 30, 64, 135, {2, 2, 2, 4}, {1, 3, 6}},
      {9, 31, 64, 134, {2, 2, 2, 4}, {7}},
      {9, 32, 64, 128, {2, 2, 2, 4}, {}},
      {9, 33, 64, 73, {2, 2, 2, 4}, {2, 8}},
      {9, 34, 48, 43, {2, 2, 2, 6}, {13}},
      {9, 35, 48, 38, {2, 2, 2, 6}, {}},
      {9, 36, 48, 15, {2, 2, 2, 6}, {3}},
      {9, 37, 48, 48, {2, 2, 2, 6}, {4, 12}},
      {9, 38, 48, 48, {2, 2, 2, 6}, {11}},
      {9, 39, 40, 13, {2, 2, 2, 10}, {14}},
      {9, 40, 40, 8, {2, 2, 2, 10}, {}},
      {9, 41, 36, 4, {2, 2, 2, 18}, {15}},

      {10, 1, 432, 734, {2, 3, 8}, {}},
      {10, 2, 432, 734, {2, 3, 8}, {}},
      {10, 3, 360, 118, {2, 4, 5}, {}},
      {10, 4, 324, 160, {2, 3, 9}, {}},
      {10, 5, 216, 92, {2, 3, 12}, {}},
      {10, 6, 216, 158, {2, 4, 6}, {}},
      {10, 7, 216, 87, {2, 4, 6}, {}},
      {10, 8, 216, 153, {3, 3, 4}, {}},
      {10, 9, 180, 19, {2, 3, 15}, {}},
      {10, 10, 168, 42, {2, 4, 7}, {}},
      {10, 11, 162, 14, {2, 3, 18}, {}},
      {10, 12, 144, 122, {2, 3, 24}, {}},
      {10, 13, 108, 25, {2, 6, 6}, {}},
      {10, 14, 108, 15, {2, 4, 12}, {}},
      {10, 15, 88, 7, {2, 4, 22}, {}},
      {10, 16, 80, 6, {2, 4, 40}, {}},
      {10, 17, 72, 28, {2, 6, 12}, {}},
      {10, 18, 72, 23, {2, 6, 12}, {}},
      {10, 19, 72, 42, {3, 4, 6}, {}},
      {10, 20, 63, 3, {3, 3, 21}, {}},
      {10, 21, 60, 10, {2, 6, 30}, {}},
      {10, 22, 42, 6, {2, 21, 42}, {}},
      {10, 23, 42, 2, {3, 6, 14}, {}},
      {10, 24, 42, 2, {3, 6, 14}, {}},
      {10, 25, 108, 40, {2, 2, 2, 3}, {4, 6}},
      {10, 26, 108, 17, {2, 2, 2, 3}, {1, 2, 7}},
      {10, 27, 72, 43, {2, 2, 2, 4}, {5}},
      {10, 28, 72, 40, {2, 2, 2, 4}, {1, 2, 6}},
      {10, 29, 72, 15, {2, 2, 2, 4}, {}},
      {10, 30, 60, 5, {2, 2, 2, 5}, {3, 9}},
      {10, 31, 54, 8, {2, 2, 2, 6}, {11, 14}},
      {10, 32, 54, 5, {2, 2, 3, 3}, {5, 8, 13}},
      {10, 33, 48, 29, {2, 2, 2, 8}, {1, 2, 12}},
      {10, 34, 44, 3, {2, 2, 2, 11}, {15}},
      {10, 35, 40, 6, {2, 2, 2, 20}, {16}},
  };
  return rows;
}

struct ReducibleLocus {
  int genus;
  std::size_t n, m;
  std::vector<int> periods;
  int components;
};

inline const std::vector<ReducibleLocus> &reducible_loci() {
  static const std::vector<ReducibleLocus> rows = {
      {7, 54, 6, {2, 6, 9}, 2},     {8, 336, 208, {2, 3, 8}, 2}, {8, 84, 7, {2, 6, 6}, 2},
      {9, 48, 48, {2, 2, 2, 6}, 2}, {10, 432, 734, {2, 3, 8}, 2}, {10, 42, 2, {3, 6, 14}, 2},
  };
  return rows;
}

} // namespace reference
