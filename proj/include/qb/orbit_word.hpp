#pragma once

#include <algorithm>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace qb {

// Bounce sequence of edge indices. Letters are nonnegative and consecutive
// letters differ; cyclic validity (first != last) and even length are queried,
// not enforced, since some constructions pass through odd or open words.
class OrbitWord {
 public:
  static OrbitWord fromLetters(std::vector<int> letters) {
    if (letters.empty()) throw std::invalid_argument("OrbitWord: empty word");
    for (size_t i = 0; i < letters.size(); ++i) {
      if (letters[i] < 0) throw std::invalid_argument("OrbitWord: negative letter");
      if (i > 0 && letters[i] == letters[i - 1])
        throw std::invalid_argument("OrbitWord: consecutive letters repeat");
    }
    return OrbitWord(std::move(letters));
  }

  static OrbitWord parse(std::string_view digits) {
    std::vector<int> letters;
    letters.reserve(digits.size());
    for (char ch : digits) {
      if (ch < '0' || ch > '9')
        throw std::invalid_argument("OrbitWord: word must be decimal digits");
      letters.push_back(ch - '0');
    }
    return fromLetters(std::move(letters));
  }

  int length() const { return static_cast<int>(w_.size()); }
  int letter(int i) const {
    int n = length();
    int r = i % n;
    return w_[static_cast<size_t>(r < 0 ? r + n : r)];
  }
  const std::vector<int>& letters() const { return w_; }
  bool evenLength() const { return length() % 2 == 0; }
  bool cyclicallyValid() const { return w_.front() != w_.back(); }
  int maxLetter() const { return *std::max_element(w_.begin(), w_.end()); }

  std::string str() const {
    std::string s;
    s.reserve(w_.size());
    for (int x : w_) s.push_back(static_cast<char>('0' + x));
    return s;
  }

  OrbitWord reversed() const {
    return OrbitWord(std::vector<int>(w_.rbegin(), w_.rend()));
  }

  // Cyclic rotation starting at position k.
  OrbitWord rotatedBy(int k) const {
    int n = length();
    k = ((k % n) + n) % n;
    std::vector<int> out;
    out.reserve(w_.size());
    out.insert(out.end(), w_.begin() + k, w_.end());
    out.insert(out.end(), w_.begin(), w_.begin() + k);
    return OrbitWord(std::move(out));
  }

  friend bool operator==(const OrbitWord&, const OrbitWord&) = default;
  friend bool operator<(const OrbitWord& a, const OrbitWord& b) {
    return a.w_.size() != b.w_.size() ? a.w_.size() < b.w_.size() : a.w_ < b.w_;
  }

 private:
  explicit OrbitWord(std::vector<int> w) : w_(std::move(w)) {}
  std::vector<int> w_;
};

// Dihedral change of edge labels on an E-gon: rotation alone maps letter x to
// (rotation + x) mod E; with reflection, x goes to (rotation + E-1-x) mod E.
inline OrbitWord relabel(const OrbitWord& w, int rotation, bool reflected, int edgeCount) {
  if (edgeCount < 3) throw std::invalid_argument("relabel: edgeCount must be at least 3");
  if (w.maxLetter() >= edgeCount)
    throw std::invalid_argument("relabel: letter exceeds edge count");
  std::vector<int> out;
  out.reserve(static_cast<size_t>(w.length()));
  for (int x : w.letters()) {
    int y = reflected ? edgeCount - 1 - x : x;
    out.push_back((((rotation + y) % edgeCount) + edgeCount) % edgeCount);
  }
  return OrbitWord::fromLetters(std::move(out));
}

// Lexicographically least cyclic rotation; canonical representative of the
// rotation class.
inline OrbitWord canonicalRotation(const OrbitWord& w) {
  OrbitWord best = w;
  for (int k = 1; k < w.length(); ++k) {
    OrbitWord cand = w.rotatedBy(k);
    if (cand.letters() < best.letters()) best = cand;
  }
  return best;
}

}  // namespace qb
