#include "operadlab/word.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <mutex>
#include <numeric>
#include <set>
#include <sstream>

namespace operadlab {

namespace {

void validate_letters(const std::vector<int>& letters) {
  std::set<int> seen;
  for (int x : letters) {
    if (x < 1) {
      throw domain_error("word letters must be positive, got " +
                         std::to_string(x));
    }
    if (!seen.insert(x).second) {
      throw duplicate_letter_error("duplicate letter " + std::to_string(x));
    }
  }
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) {
    s.remove_prefix(1);
  }
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) {
    s.remove_suffix(1);
  }
  return s;
}

}  // namespace

Word::Word(std::vector<int> letters) : letters_(std::move(letters)) {
  validate_letters(letters_);
}

Word Word::parse(std::string_view text) {
  text = trim(text);
  std::vector<int> letters;
  if (text.empty()) {
    return Word{};
  }
  if (text.find(',') != std::string_view::npos) {
    std::string token;
    std::istringstream in{std::string(text)};
    while (std::getline(in, token, ',')) {
      std::string_view tv = trim(token);
      if (tv.empty()) {
        throw parse_error("empty entry in comma-separated word");
      }
      int value = 0;
      for (char c : tv) {
        if (!std::isdigit(static_cast<unsigned char>(c))) {
          throw parse_error("bad character '" + std::string(1, c) +
                            "' in word");
        }
        value = value * 10 + (c - '0');
        if (value > 1'000'000) {
          throw parse_error("word letter too large");
        }
      }
      letters.push_back(value);
    }
  } else {
    for (char c : text) {
      if (!std::isdigit(static_cast<unsigned char>(c))) {
        throw parse_error("bad character '" + std::string(1, c) + "' in word");
      }
      letters.push_back(c - '0');
    }
  }
  return Word(std::move(letters));
}

int Word::at(std::size_t pos) const {
  if (pos < 1 || pos > letters_.size()) {
    throw position_error("word position " + std::to_string(pos) +
                         " out of range 1.." + std::to_string(letters_.size()));
  }
  return letters_[pos - 1];
}

bool Word::contains(int x) const {
  return std::find(letters_.begin(), letters_.end(), x) != letters_.end();
}

std::string Word::str() const {
  bool digits = std::all_of(letters_.begin(), letters_.end(),
                            [](int x) { return x <= 9; });
  std::string out;
  for (std::size_t i = 0; i < letters_.size(); ++i) {
    if (digits) {
      out += static_cast<char>('0' + letters_[i]);
    } else {
      if (i > 0) out += ',';
      out += std::to_string(letters_[i]);
    }
  }
  return out;
}

namespace {

void validate_permutation(const Word& w) {
  const std::size_t n = w.size();
  for (int x : w.letters()) {
    if (x < 1 || static_cast<std::size_t>(x) > n) {
      throw domain_error("not a permutation of [" + std::to_string(n) +
                         "]: entry " + std::to_string(x));
    }
  }
  // Letters are distinct by the Word invariant, so range implies totality.
}

}  // namespace

Permutation::Permutation(Word word) : word_(std::move(word)) {
  validate_permutation(word_);
}

Permutation::Permutation(std::vector<int> entries)
    : Permutation(Word(std::move(entries))) {}

Permutation Permutation::parse(std::string_view text) {
  return Permutation(Word::parse(text));
}

Permutation Permutation::identity(std::size_t n) {
  std::vector<int> entries(n);
  std::iota(entries.begin(), entries.end(), 1);
  return Permutation(std::move(entries));
}

Permutation standardize(const Word& a) {
  std::vector<int> sorted = a.letters();
  std::sort(sorted.begin(), sorted.end());
  std::vector<int> ranked;
  ranked.reserve(a.size());
  for (int x : a.letters()) {
    auto it = std::lower_bound(sorted.begin(), sorted.end(), x);
    ranked.push_back(static_cast<int>(it - sorted.begin()) + 1);
  }
  return Permutation(std::move(ranked));
}

Word reverse(const Word& a) {
  std::vector<int> letters = a.letters();
  std::reverse(letters.begin(), letters.end());
  return Word(std::move(letters));
}

std::pair<Word, Word> split_below_above(const Word& a, int x) {
  std::vector<int> below, above;
  for (int y : a.letters()) {
    if (y < x) below.push_back(y);
    if (y > x) above.push_back(y);
  }
  return {Word(std::move(below)), Word(std::move(above))};
}

int insertion_index(int x, const Word& sigma) {
  if (sigma.contains(x)) {
    throw duplicate_letter_error("letter " + std::to_string(x) +
                                 " already occurs in context " + sigma.str());
  }
  int below = 0;
  for (int y : sigma.letters()) {
    if (y < x) ++below;
  }
  return below + 1;
}

long inversions(const Permutation& pi) {
  const auto& v = pi.word().letters();
  long count = 0;
  for (std::size_t i = 0; i < v.size(); ++i) {
    for (std::size_t j = i + 1; j < v.size(); ++j) {
      if (v[i] > v[j]) ++count;
    }
  }
  return count;
}

std::vector<Permutation> weak_covers_right(const Permutation& pi) {
  std::vector<Permutation> covers;
  const auto& v = pi.word().letters();
  for (std::size_t i = 0; i + 1 < v.size(); ++i) {
    if (v[i] < v[i + 1]) {
      std::vector<int> swapped = v;
      std::swap(swapped[i], swapped[i + 1]);
      covers.emplace_back(std::move(swapped));
    }
  }
  std::sort(covers.begin(), covers.end());
  return covers;
}

std::vector<Permutation> weak_covers_left(const Permutation& pi) {
  std::vector<Permutation> covers;
  const auto& v = pi.word().letters();
  const std::size_t n = v.size();
  std::vector<std::size_t> position(n + 2, 0);
  for (std::size_t i = 0; i < n; ++i) {
    position[static_cast<std::size_t>(v[i])] = i;
  }
  for (std::size_t value = 1; value + 1 <= n; ++value) {
    if (position[value] < position[value + 1]) {
      std::vector<int> swapped = v;
      std::swap(swapped[position[value]], swapped[position[value + 1]]);
      covers.emplace_back(std::move(swapped));
    }
  }
  std::sort(covers.begin(), covers.end());
  return covers;
}

namespace {

constexpr std::size_t kWeakClosureCacheMax = 7;

std::size_t factorial(std::size_t n) {
  std::size_t f = 1;
  for (std::size_t i = 2; i <= n; ++i) f *= i;
  return f;
}

// Lexicographic rank via the Lehmer code.
std::size_t lex_rank(const Permutation& pi) {
  const auto& v = pi.word().letters();
  const std::size_t n = v.size();
  std::size_t rank = 0;
  for (std::size_t i = 0; i < n; ++i) {
    std::size_t smaller_later = 0;
    for (std::size_t j = i + 1; j < n; ++j) {
      if (v[j] < v[i]) ++smaller_later;
    }
    rank = rank * (n - i) + smaller_later;
  }
  return rank;
}

using Bitset = std::vector<std::uint64_t>;

void set_bit(Bitset& b, std::size_t i) { b[i >> 6] |= std::uint64_t{1} << (i & 63); }
bool test_bit(const Bitset& b, std::size_t i) {
  return (b[i >> 6] >> (i & 63)) & 1;
}

// Full up-set table for S_n, indexed by lexicographic rank. Built once per
// n by scanning permutations in decreasing inversion count, so every cover
// target is finished before its sources.
const std::vector<Bitset>& weak_closure_table(std::size_t n) {
  static std::mutex mutex;
  static std::map<std::size_t, std::vector<Bitset>> cache;
  std::scoped_lock lock(mutex);
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;

  const std::size_t count = factorial(n);
  const std::size_t words = (count + 63) / 64;
  std::vector<Bitset> table(count, Bitset(words, 0));

  std::vector<Permutation> perms = enumerate_permutations(n);
  std::stable_sort(perms.begin(), perms.end(),
                   [](const Permutation& a, const Permutation& b) {
                     return inversions(a) > inversions(b);
                   });
  for (const Permutation& pi : perms) {
    const std::size_t r = lex_rank(pi);
    set_bit(table[r], r);
    for (const Permutation& cover : weak_covers_right(pi)) {
      const std::size_t c = lex_rank(cover);
      for (std::size_t w = 0; w < words; ++w) table[r][w] |= table[c][w];
    }
  }
  return cache.emplace(n, std::move(table)).first->second;
}

bool weak_leq_bfs(const Permutation& lo, const Permutation& hi) {
  std::set<Permutation> visited{lo};
  std::vector<Permutation> frontier{lo};
  const long target = inversions(hi);
  while (!frontier.empty()) {
    std::vector<Permutation> next;
    for (const Permutation& pi : frontier) {
      if (pi == hi) return true;
      if (inversions(pi) >= target) continue;
      for (Permutation& cover : weak_covers_right(pi)) {
        if (visited.insert(cover).second) next.push_back(std::move(cover));
      }
    }
    frontier = std::move(next);
  }
  return false;
}

}  // namespace

bool weak_leq(const Permutation& lo, const Permutation& hi) {
  if (lo.size() != hi.size()) {
    throw size_mismatch_error("weak_leq needs equal lengths, got " +
                              std::to_string(lo.size()) + " and " +
                              std::to_string(hi.size()));
  }
  if (lo == hi) return true;
  const std::size_t n = lo.size();
  if (n <= kWeakClosureCacheMax) {
    const auto& table = weak_closure_table(n);
    return test_bit(table[lex_rank(lo)], lex_rank(hi));
  }
  return weak_leq_bfs(lo, hi);
}

Permutation inverse(const Permutation& pi) {
  const auto& v = pi.word().letters();
  std::vector<int> inv(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) {
    inv[static_cast<std::size_t>(v[i]) - 1] = static_cast<int>(i) + 1;
  }
  return Permutation(std::move(inv));
}

std::vector<Permutation> enumerate_permutations(std::size_t n) {
  std::vector<int> entries(n);
  std::iota(entries.begin(), entries.end(), 1);
  std::vector<Permutation> out;
  out.reserve(factorial(n));
  do {
    out.emplace_back(entries);
  } while (std::next_permutation(entries.begin(), entries.end()));
  return out;
}

}  // namespace operadlab
