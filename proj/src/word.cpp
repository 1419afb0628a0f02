#include "curvesys/word.hpp"

#include <algorithm>
#include <cctype>

#include "curvesys/error.hpp"

namespace curvesys {

bool letter_less(const Word& u, const Word& v) {
  return std::lexicographical_compare(u.begin(), u.end(), v.begin(), v.end(),
                                      [](Letter a, Letter b) { return letter_key(a) < letter_key(b); });
}

bool shortlex_less(const Word& u, const Word& v) {
  if (u.size() != v.size()) return u.size() < v.size();
  return letter_less(u, v);
}

Word inverse(const Word& w) {
  Word r(w.rbegin(), w.rend());
  for (auto& l : r) l = -l;
  return r;
}

Word concat(const Word& u, const Word& v) {
  Word r = u;
  r.insert(r.end(), v.begin(), v.end());
  return free_reduce(r);
}

Word power(const Word& w, int k) {
  Word base = k < 0 ? inverse(w) : w, r;
  for (int i = 0; i < std::abs(k); ++i) r.insert(r.end(), base.begin(), base.end());
  return free_reduce(r);
}

Word free_reduce(const Word& w) {
  Word r;
  r.reserve(w.size());
  for (Letter l : w) {
    if (!r.empty() && r.back() == -l)
      r.pop_back();
    else
      r.push_back(l);
  }
  return r;
}

bool is_reduced(const Word& w) {
  for (size_t i = 1; i < w.size(); ++i)
    if (w[i] == -w[i - 1]) return false;
  return true;
}

bool is_cyclically_reduced(const Word& w) {
  return is_reduced(w) && (w.size() < 2 || w.front() != -w.back());
}

Word cyclic_reduce(const Word& w, Word* conjugator) {
  Word r = free_reduce(w);
  size_t i = 0, j = r.size();
  while (j - i >= 2 && r[i] == -r[j - 1]) {
    ++i;
    --j;
  }
  if (conjugator) conjugator->assign(r.begin(), r.begin() + static_cast<long>(i));
  return Word(r.begin() + static_cast<long>(i), r.begin() + static_cast<long>(j));
}

Word rotate(const Word& w, int k) {
  if (w.empty()) return w;
  const int n = static_cast<int>(w.size());
  k = ((k % n) + n) % n;
  Word r(w.begin() + k, w.end());
  r.insert(r.end(), w.begin(), w.begin() + k);
  return r;
}

int cyclic_period(const Word& w) {
  const int n = static_cast<int>(w.size());
  for (int p = 1; p < n; ++p) {
    if (n % p) continue;
    bool ok = true;
    for (int i = p; i < n && ok; ++i) ok = w[i] == w[i - p];
    if (ok) return p;
  }
  return n;
}

bool is_proper_power(const Word& w) { return !w.empty() && cyclic_period(w) < static_cast<int>(w.size()); }

namespace {

Word least_rotation(const Word& w) {
  Word best = w;
  for (size_t k = 1; k < w.size(); ++k) {
    Word r = rotate(w, static_cast<int>(k));
    if (letter_less(r, best)) best = std::move(r);
  }
  return best;
}

}  // namespace

Word canonical_cyclic(const Word& w, bool up_to_inverse) {
  Word c = cyclic_reduce(w);
  Word best = least_rotation(c);
  if (up_to_inverse) {
    Word alt = least_rotation(inverse(c));
    if (letter_less(alt, best)) best = std::move(alt);
  }
  return best;
}

bool cyclically_equal(const Word& u, const Word& v, bool up_to_inverse) {
  return canonical_cyclic(u, up_to_inverse) == canonical_cyclic(v, up_to_inverse);
}

Word parse_word(const std::string& text, const std::vector<std::string>& names) {
  Word w;
  size_t i = 0;
  auto starts = [&](const char* s) { return text.compare(i, std::char_traits<char>::length(s), s) == 0; };
  while (i < text.size()) {
    const unsigned char ch = static_cast<unsigned char>(text[i]);
    if (std::isspace(ch) || text[i] == '*' || text[i] == '.') {
      ++i;
      continue;
    }
    char base;
    bool inv = false;
    if (starts("\xCE\xBC")) {  // mu
      base = 'm';
      i += 2;
    } else if (starts("\xCE\xB4")) {  // delta
      base = 'd';
      i += 2;
    } else if (starts("\xCE\x9C")) {
      base = 'm';
      inv = true;
      i += 2;
    } else if (starts("\xCE\x94")) {
      base = 'd';
      inv = true;
      i += 2;
    } else if (std::isalpha(ch)) {
      base = static_cast<char>(std::tolower(ch));
      inv = std::isupper(ch);
      ++i;
    } else {
      throw Error(ErrorKind::parse_error, "unexpected character in word '" + text + "'");
    }
    std::string digits;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) digits += text[i++];
    if (digits.empty()) digits = "1";
    if (starts("^-1")) {
      inv = !inv;
      i += 3;
    } else if (starts("\xE2\x81\xBB\xC2\xB9")) {  // superscript minus one
      inv = !inv;
      i += 5;
    }
    const std::string name = std::string(1, base) + digits;
    auto it = std::find(names.begin(), names.end(), name);
    if (it == names.end()) throw Error(ErrorKind::parse_error, "unknown generator '" + name + "'");
    w.push_back(letter_of(static_cast<int>(it - names.begin()), inv));
  }
  return w;
}

std::string format_word(const Word& w, const std::vector<std::string>& names) {
  std::string s;
  for (Letter l : w) {
    std::string n = names.at(static_cast<size_t>(generator_of(l)));
    if (l < 0) n[0] = static_cast<char>(std::toupper(static_cast<unsigned char>(n[0])));
    s += n;
  }
  return s;
}

std::vector<int> letter_parity(const Word& w, int rank) {
  std::vector<int> p(static_cast<size_t>(rank), 0);
  for (Letter l : w) p[static_cast<size_t>(generator_of(l))] ^= 1;
  return p;
}

}  // namespace curvesys
