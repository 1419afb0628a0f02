#include "curvesys/chord_oracle.hpp"

#include <algorithm>
#include <numeric>

#include "curvesys/error.hpp"

namespace curvesys {

namespace {

struct Strand {
  int curve;
  int pos;  // index of the letter in its curve
};

struct Model {
  int sides = 0;
  std::vector<int> source, target;  // per generator
  std::vector<bool> same_direction;
  std::vector<std::vector<Strand>> strands;  // per generator
};

Model make_model(const std::vector<Letter>& pw, const std::vector<Word>& curves) {
  Model m;
  m.sides = static_cast<int>(pw.size());
  int rank = 0;
  for (Letter l : pw) rank = std::max(rank, generator_of(l) + 1);
  m.source.assign(static_cast<size_t>(rank), -1);
  m.target.assign(static_cast<size_t>(rank), -1);
  m.same_direction.assign(static_cast<size_t>(rank), false);
  for (int k = 0; k < m.sides; ++k) {
    const size_t g = static_cast<size_t>(generator_of(pw[static_cast<size_t>(k)]));
    (m.source[g] < 0 ? m.source[g] : m.target[g]) = k;
  }
  for (size_t g = 0; g < static_cast<size_t>(rank); ++g)
    m.same_direction[g] = (pw[static_cast<size_t>(m.source[g])] > 0) == (pw[static_cast<size_t>(m.target[g])] > 0);
  m.strands.resize(static_cast<size_t>(rank));
  for (int c = 0; c < static_cast<int>(curves.size()); ++c) {
    const Word& w = curves[static_cast<size_t>(c)];
    if (w.empty() || !is_cyclically_reduced(w))
      throw Error(ErrorKind::precondition, "chord oracle needs cyclically reduced nonempty words");
    for (int j = 0; j < static_cast<int>(w.size()); ++j)
      m.strands[static_cast<size_t>(generator_of(w[static_cast<size_t>(j)]))].push_back({c, j});
  }
  return m;
}

int run(const std::vector<Letter>& pw, const std::vector<Word>& curves, bool self, long long max_configs) {
  Model m = make_model(pw, curves);
  long long configs = 1;
  for (const auto& s : m.strands)
    for (size_t k = 2; k <= s.size(); ++k) {
      configs *= static_cast<long long>(k);
      if (configs > max_configs) throw Error(ErrorKind::too_large, "chord configuration space too large");
    }
  std::vector<std::vector<int>> perm(m.strands.size());
  for (size_t g = 0; g < perm.size(); ++g) {
    perm[g].resize(m.strands[g].size());
    std::iota(perm[g].begin(), perm[g].end(), 0);
  }
  // boundary coordinate of the point where letter j of curve c crosses, on the side it leaves by
  std::vector<std::vector<double>> exit_at(curves.size()), enter_at(curves.size());
  for (size_t c = 0; c < curves.size(); ++c) {
    exit_at[c].resize(curves[c].size());
    enter_at[c].resize(curves[c].size());
  }
  int best = -1;
  for (;;) {
    for (size_t g = 0; g < perm.size(); ++g) {
      const int k = static_cast<int>(perm[g].size());
      for (int idx = 0; idx < k; ++idx) {
        const Strand& st = m.strands[g][static_cast<size_t>(idx)];
        const int rank = perm[g][static_cast<size_t>(idx)];
        const int rank_t = m.same_direction[g] ? rank : k - 1 - rank;
        const double on_source = m.source[g] + (rank + 1.0) / (k + 1.0);
        const double on_target = m.target[g] + (rank_t + 1.0) / (k + 1.0);
        const bool forward = curves[static_cast<size_t>(st.curve)][static_cast<size_t>(st.pos)] > 0;
        // reading x leaves through the target side and arrives through the source side
        exit_at[static_cast<size_t>(st.curve)][static_cast<size_t>(st.pos)] = forward ? on_target : on_source;
        enter_at[static_cast<size_t>(st.curve)][static_cast<size_t>(st.pos)] = forward ? on_source : on_target;
      }
    }
    struct Chord {
      int curve;
      double a, b;
    };
    std::vector<Chord> chords;
    for (size_t c = 0; c < curves.size(); ++c) {
      const size_t n = curves[c].size();
      for (size_t j = 0; j < n; ++j) {
        double a = enter_at[c][(j + n - 1) % n], b = exit_at[c][j];
        if (a > b) std::swap(a, b);
        chords.push_back({static_cast<int>(c), a, b});
      }
    }
    int crossings = 0;
    for (size_t i = 0; i < chords.size(); ++i)
      for (size_t j = i + 1; j < chords.size(); ++j) {
        if (!self && chords[i].curve == chords[j].curve) continue;
        const bool in1 = chords[i].a < chords[j].a && chords[j].a < chords[i].b;
        const bool in2 = chords[i].a < chords[j].b && chords[j].b < chords[i].b;
        crossings += in1 != in2;
      }
    if (best < 0 || crossings < best) best = crossings;
    if (best == 0) break;
    size_t g = 0;
    for (; g < perm.size(); ++g)
      if (std::next_permutation(perm[g].begin(), perm[g].end())) break;
    if (g == perm.size()) break;
  }
  return best;
}

}  // namespace

int chord_oracle(const std::vector<Letter>& polygon_word, const Word& c1, const Word& c2, long long max_configs) {
  return run(polygon_word, {c1, c2}, false, max_configs);
}

int chord_oracle_self(const std::vector<Letter>& polygon_word, const Word& c, long long max_configs) {
  return run(polygon_word, {c}, true, max_configs);
}

}  // namespace curvesys
