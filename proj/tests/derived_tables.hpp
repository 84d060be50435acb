#pragma once

// Values computed once by an independent oracle and frozen here.

#include "curveaut/catalog.hpp"
#include "curveaut/covers.hpp"

#include <utility>
#include <vector>

namespace derived {

using curveaut::GroupId;
using curveaut::Signature;

// Every genus-3 pair over a nontrivial group, from an exhaustive search
// over all groups of order at most 168 in an external algebra system.
inline const std::vector<std::pair<GroupId, Signature>> &genus3_pairs() {
  static const std::vector<std::pair<GroupId, Signature>> pairs = {
      {{2, 1}, {0, {2, 2, 2, 2, 2, 2, 2, 2}}}, {{2, 1}, {1, {2, 2, 2, 2}}}, {{2, 1}, {2, {}}},
      {{3, 1}, {0, {3, 3, 3, 3, 3}}},          {{3, 1}, {1, {3, 3}}},       {{4, 1}, {0, {2, 2, 2, 4, 4}}},
      {{4, 1}, {0, {4, 4, 4, 4}}},             {{4, 1}, {1, {2, 2}}},       {{4, 2}, {0, {2, 2, 2, 2, 2, 2}}},
      {{4, 2}, {1, {2, 2}}},                   {{6, 1}, {0, {2, 2, 2, 2, 3}}}, {{6, 1}, {1, {3}}},
      {{6, 2}, {0, {2, 2, 6, 6}}},             {{6, 2}, {0, {2, 3, 3, 6}}}, {{7, 1}, {0, {7, 7, 7}}},
      {{8, 1}, {0, {4, 8, 8}}},                {{8, 2}, {0, {2, 2, 4, 4}}}, {{8, 3}, {0, {2, 2, 2, 2, 2}}},
      {{8, 3}, {0, {2, 2, 4, 4}}},             {{8, 3}, {1, {2}}},          {{8, 4}, {1, {2}}},
      {{8, 5}, {0, {2, 2, 2, 2, 2}}},          {{9, 1}, {0, {3, 9, 9}}},    {{12, 1}, {0, {4, 4, 6}}},
      {{12, 2}, {0, {2, 12, 12}}},             {{12, 2}, {0, {3, 4, 12}}},  {{12, 3}, {0, {2, 2, 3, 3}}},
      {{12, 4}, {0, {2, 2, 2, 6}}},            {{14, 2}, {0, {2, 7, 14}}},  {{16, 2}, {0, {4, 4, 4}}},
      {{16, 4}, {0, {4, 4, 4}}},               {{16, 5}, {0, {2, 8, 8}}},   {{16, 6}, {0, {2, 8, 8}}},
      {{16, 11}, {0, {2, 2, 2, 4}}},           {{16, 13}, {0, {2, 2, 2, 4}}}, {{21, 1}, {0, {3, 3, 7}}},
      {{24, 3}, {0, {3, 3, 6}}},               {{24, 5}, {0, {2, 4, 12}}},  {{24, 12}, {0, {2, 2, 2, 3}}},
      {{24, 12}, {0, {3, 4, 4}}},              {{24, 13}, {0, {2, 6, 6}}},  {{32, 9}, {0, {2, 4, 8}}},
      {{32, 11}, {0, {2, 4, 8}}},              {{48, 3}, {0, {3, 3, 4}}},   {{48, 33}, {0, {2, 3, 12}}},
      {{48, 48}, {0, {2, 4, 6}}},              {{96, 64}, {0, {2, 3, 8}}},  {{168, 42}, {0, {2, 3, 7}}},
  };
  return pairs;
}

} // namespace derived
