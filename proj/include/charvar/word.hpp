#pragma once

#include <cctype>
#include <cstdint>
#include <functional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace charvar {

// Error with a stable machine-readable code ("Intransitive", "NotInSubgroup", ...).
class Error : public std::runtime_error {
public:
  Error(std::string code, const std::string& what)
      : std::runtime_error(code + ": " + what), code_(std::move(code)) {}
  const std::string& code() const { return code_; }

private:
  std::string code_;
};

// One letter of a free-group word: generator index (1-based) and sign.
struct Letter {
  int gen;   // >= 1
  int sign;  // +1 or -1
  friend bool operator==(const Letter& a, const Letter& b) = default;
};

inline Letter inverse(Letter l) { return Letter{l.gen, -l.sign}; }

// Freely reduced word in free generators. The empty word is the identity.
// Letters are stored in reading order: w = letters[0] letters[1] ... .
class Word {
public:
  Word() = default;
  explicit Word(std::vector<Letter> letters) : letters_(std::move(letters)) { reduce_(); }
  static Word gen(int i, int sign = +1) { return Word({Letter{i, sign}}); }

  const std::vector<Letter>& letters() const { return letters_; }
  bool empty() const { return letters_.empty(); }
  std::size_t size() const { return letters_.size(); }
  const Letter& operator[](std::size_t i) const { return letters_[i]; }

  friend bool operator==(const Word& a, const Word& b) = default;

  // Largest generator index used (0 for the empty word).
  int max_gen() const {
    int m = 0;
    for (const auto& l : letters_) m = std::max(m, l.gen);
    return m;
  }

  int exponent_sum(int gen) const {
    int e = 0;
    for (const auto& l : letters_) if (l.gen == gen) e += l.sign;
    return e;
  }

private:
  void reduce_() {
    std::vector<Letter> out;
    out.reserve(letters_.size());
    for (const auto& l : letters_) {
      if (!out.empty() && out.back().gen == l.gen && out.back().sign == -l.sign)
        out.pop_back();
      else
        out.push_back(l);
    }
    letters_ = std::move(out);
  }

  std::vector<Letter> letters_;
};

inline Word reduce(const Word& w) { return w; }  // Words are reduced on construction.

inline Word concat(const Word& a, const Word& b) {
  std::vector<Letter> ls = a.letters();
  ls.insert(ls.end(), b.letters().begin(), b.letters().end());
  return Word(std::move(ls));
}

inline Word operator*(const Word& a, const Word& b) { return concat(a, b); }

inline Word inverse(const Word& w) {
  std::vector<Letter> ls;
  ls.reserve(w.size());
  for (auto it = w.letters().rbegin(); it != w.letters().rend(); ++it)
    ls.push_back(inverse(*it));
  return Word(std::move(ls));
}

inline Word power(const Word& w, int n) {
  Word base = n < 0 ? inverse(w) : w;
  Word out;
  for (int k = 0; k < std::abs(n); ++k) out = out * base;
  return out;
}

// g w g^{-1}
inline Word conjugate(const Word& g, const Word& w) { return g * w * inverse(g); }

inline Word commutator(const Word& a, const Word& b) {
  return a * b * inverse(a) * inverse(b);
}

struct WordHash {
  std::size_t operator()(const Word& w) const {
    std::size_t h = 1469598103934665603ull;
    for (const auto& l : w.letters()) {
      h = (h ^ static_cast<std::size_t>(l.gen * 2 + (l.sign > 0))) * 1099511628211ull;
    }
    return h;
  }
};

// Token format: space-separated generator names, uppercase first letter = inverse,
// "e" for the empty word. Example with names {a1,b1}: "a1 B1 a1".
inline std::string format_word(const Word& w, const std::vector<std::string>& names) {
  if (w.empty()) return "e";
  std::string out;
  for (const auto& l : w.letters()) {
    if (!out.empty()) out += ' ';
    std::string tok = names.at(static_cast<std::size_t>(l.gen - 1));
    if (l.sign < 0) tok[0] = static_cast<char>(std::toupper(static_cast<unsigned char>(tok[0])));
    out += tok;
  }
  return out;
}

inline Word parse_word(const std::string& text, const std::vector<std::string>& names) {
  std::istringstream in(text);
  std::string tok;
  std::vector<Letter> ls;
  while (in >> tok) {
    if (tok == "e") continue;
    int sign = +1;
    if (std::isupper(static_cast<unsigned char>(tok[0]))) {
      sign = -1;
      tok[0] = static_cast<char>(std::tolower(static_cast<unsigned char>(tok[0])));
    }
    bool found = false;
    for (std::size_t i = 0; i < names.size(); ++i) {
      if (names[i] == tok) {
        ls.push_back(Letter{static_cast<int>(i + 1), sign});
        found = true;
        break;
      }
    }
    if (!found) throw Error("UnknownGenerator", "no generator named '" + tok + "'");
  }
  return Word(std::move(ls));
}

}  // namespace charvar
