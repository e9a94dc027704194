#pragma once
// Brute-force dim A/J^d: all paths of length < d modulo the span of every
// u * r * v cut below length d. Dense elimination over mpq_class, sharing no
// code with the library beyond reading the presentation.
#include <gmpxx.h>

#include <algorithm>
#include <map>
#include <tuple>
#include <utility>
#include <vector>

#include "ncdef/presentation.hpp"

namespace oracle {

struct Word {
  int start;
  std::vector<int> arrows;
  bool operator<(const Word& o) const { return std::tie(start, arrows) < std::tie(o.start, o.arrows); }
};

inline std::size_t truncated_dimension(const ncdef::AlgebraPresentation& pres, int d) {
  const auto& q = pres.quiver;
  std::vector<Word> words;
  std::vector<int> ends;
  for (int v = 0; v < q.vertex_count(); ++v) {
    words.push_back({v, {}});
    ends.push_back(v);
  }
  for (std::size_t i = 0; i < words.size(); ++i) {
    if (static_cast<int>(words[i].arrows.size()) + 1 >= d) continue;
    for (int a = 0; a < q.arrow_count(); ++a)
      if (q.arrow(a).source == ends[i]) {
        Word w = words[i];
        w.arrows.push_back(a);
        words.push_back(w);
        ends.push_back(q.arrow(a).target);
      }
  }
  std::map<Word, std::size_t> index;
  for (std::size_t i = 0; i < words.size(); ++i) index[words[i]] = i;
  const std::size_t n = words.size();

  std::vector<std::vector<mpq_class>> pivots(n);  // pivots[c] has leading column c
  std::size_t rank = 0;
  auto insert = [&](std::vector<mpq_class> row) {
    for (std::size_t c = 0; c < n; ++c) {
      if (row[c] == 0) continue;
      if (pivots[c].empty()) {
        mpq_class lead = row[c];
        for (auto& x : row) x /= lead;
        pivots[c] = std::move(row);
        ++rank;
        return;
      }
      mpq_class f = row[c];
      for (std::size_t k = c; k < n; ++k)
        if (pivots[c][k] != 0) row[k] -= f * pivots[c][k];
    }
  };

  for (const auto& rel : pres.relations) {
    std::vector<std::pair<Word, mpq_class>> terms;
    int s = 0, t = 0, low = 1 << 30;
    for (const auto& [p, c] : rel.terms()) {
      terms.push_back({{p.start(), p.arrows()}, c});
      s = p.start();
      t = p.end();
      low = std::min(low, p.length());
    }
    for (std::size_t ui = 0; ui < n; ++ui) {
      if (ends[ui] != s) continue;
      for (std::size_t vi = 0; vi < n; ++vi) {
        if (words[vi].start != t) continue;
        if (static_cast<int>(words[ui].arrows.size() + words[vi].arrows.size()) + low >= d) continue;
        std::vector<mpq_class> row(n);
        for (const auto& [w, c] : terms) {
          Word full{words[ui].start, words[ui].arrows};
          full.arrows.insert(full.arrows.end(), w.arrows.begin(), w.arrows.end());
          full.arrows.insert(full.arrows.end(), words[vi].arrows.begin(), words[vi].arrows.end());
          if (static_cast<int>(full.arrows.size()) >= d) continue;
          row[index.at(full)] += c;
        }
        insert(std::move(row));
      }
    }
  }
  return n - rank;
}

}  // namespace oracle
