#pragma once

#include <vector>

#include "curvesys/word.hpp"

namespace curvesys {

/// Brute-force minimal crossing count in the polygon model. Each loop is drawn as straight
/// chords through the base polygon following its letters; the only freedom is the order in
/// which strands cross each side pair. Every order is tried and the fewest crossings between
/// the two curves is returned. Throws TooLarge beyond `max_configs` orders.
int chord_oracle(const std::vector<Letter>& polygon_word, const Word& c1, const Word& c2,
                 long long max_configs = 1000000);

/// Same search counting crossings of one loop with itself.
int chord_oracle_self(const std::vector<Letter>& polygon_word, const Word& c, long long max_configs = 1000000);

}  // namespace curvesys
