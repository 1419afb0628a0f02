#pragma once

#include <cstdlib>
#include <string>
#include <vector>

namespace curvesys {

/// Generator index i is encoded as +(i+1); its inverse as -(i+1).
using Letter = int;
using Word = std::vector<Letter>;

inline int generator_of(Letter l) { return std::abs(l) - 1; }
inline Letter letter_of(int gen, bool inverse = false) { return inverse ? -(gen + 1) : gen + 1; }

/// Total order on letters: a < A < b < B < ...
inline int letter_key(Letter l) { return 2 * generator_of(l) + (l < 0 ? 1 : 0); }
bool letter_less(const Word& u, const Word& v);
bool shortlex_less(const Word& u, const Word& v);

Word inverse(const Word& w);
Word concat(const Word& u, const Word& v);
Word power(const Word& w, int k);
Word free_reduce(const Word& w);
bool is_reduced(const Word& w);
bool is_cyclically_reduced(const Word& w);

/// Cyclically reduced core; `conjugator` (if given) receives u with w = u core u^-1.
Word cyclic_reduce(const Word& w, Word* conjugator = nullptr);
Word rotate(const Word& w, int k);

/// Smallest p such that w is invariant under rotation by p.
int cyclic_period(const Word& w);
bool is_proper_power(const Word& w);

/// Lex-least rotation of the cyclic reduction of w, and of w^-1 when `up_to_inverse`.
Word canonical_cyclic(const Word& w, bool up_to_inverse = true);
bool cyclically_equal(const Word& u, const Word& v, bool up_to_inverse = true);

/// Reading uses the generator names; upper case, `^-1` or a superscript inverse flip a letter.
/// A bare letter stands for index 1, and the Greek names map to their Latin stand-ins.
Word parse_word(const std::string& text, const std::vector<std::string>& names);
std::string format_word(const Word& w, const std::vector<std::string>& names);

/// Parity of occurrences of each generator.
std::vector<int> letter_parity(const Word& w, int rank);

}  // namespace curvesys
