// Copyright 2026 The Agatha Pipeline Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Reference edit distance: the textbook full (n+1) x (m+1) table, no
// trimming, no row reuse. Kept deliberately naive.

#ifndef AGATHA_TESTS_ORACLES_LEVENSHTEIN_ORACLE_H_
#define AGATHA_TESTS_ORACLES_LEVENSHTEIN_ORACLE_H_

#include <algorithm>
#include <string>
#include <vector>

namespace agatha::oracle {

inline int FullMatrixDistance(const std::u32string &a, const std::u32string &b) {
  const size_t n = a.size();
  const size_t m = b.size();
  std::vector<std::vector<int>> d(n + 1, std::vector<int>(m + 1, 0));
  for (size_t i = 0; i <= n; ++i) d[i][0] = static_cast<int>(i);
  for (size_t j = 0; j <= m; ++j) d[0][j] = static_cast<int>(j);
  for (size_t i = 1; i <= n; ++i) {
    for (size_t j = 1; j <= m; ++j) {
      int substitute = d[i - 1][j - 1] + (a[i - 1] == b[j - 1] ? 0 : 1);
      int remove = d[i - 1][j] + 1;
      int insert = d[i][j - 1] + 1;
      d[i][j] = std::min({substitute, remove, insert});
    }
  }
  return d[n][m];
}

}  // namespace agatha::oracle

#endif  // AGATHA_TESTS_ORACLES_LEVENSHTEIN_ORACLE_H_
