// Alphabets and words of the free semigroup (nonempty words only).

#pragma once

#include <cstdint>
#include <iosfwd>
#include <memory>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace prodfree {

/// Malformed input text. `line` and `column` are 1-based; 0 means unknown.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t line, std::size_t column = 0);
  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

inline constexpr std::size_t kMaxAlphabetSize = 16;
/// Largest layer (in words) that may be enumerated or materialized.
inline constexpr std::uint64_t kDefaultEnumerationBudget = std::uint64_t{1} << 28;

/// An ordered list of distinct single-character symbols. Copies share storage.
class Alphabet {
 public:
  /// The default two-letter alphabet "ab".
  Alphabet();
  explicit Alphabet(std::string_view symbols);

  std::size_t size() const { return symbols_->size(); }
  char symbol(std::size_t index) const { return (*symbols_)[index]; }
  std::optional<std::uint8_t> index_of(char c) const;
  const std::string& symbols() const { return *symbols_; }

  friend bool operator==(const Alphabet& a, const Alphabet& b) {
    return a.symbols_ == b.symbols_ || *a.symbols_ == *b.symbols_;
  }

 private:
  std::shared_ptr<const std::string> symbols_;
};

/// A nonempty word, stored as symbol indices.
class Word {
 public:
  Word(Alphabet alphabet, std::vector<std::uint8_t> indices);

  static Word parse(const Alphabet& alphabet, std::string_view text);

  const Alphabet& alphabet() const { return alphabet_; }
  std::size_t size() const { return indices_.size(); }
  std::span<const std::uint8_t> indices() const { return indices_; }
  std::uint8_t operator[](std::size_t i) const { return indices_[i]; }
  std::string str() const;

  /// Subword [pos, pos + len).
  Word slice(std::size_t pos, std::size_t len) const;

  friend bool operator==(const Word& a, const Word& b) {
    return a.indices_ == b.indices_ && a.alphabet_ == b.alphabet_;
  }
  /// Shortlex order: length first, then lexicographic by symbol index.
  friend bool operator<(const Word& a, const Word& b);

 private:
  Alphabet alphabet_;
  std::vector<std::uint8_t> indices_;
};

std::ostream& operator<<(std::ostream& os, const Word& w);

/// x followed by y. Throws std::invalid_argument on alphabet mismatch.
Word concat(const Word& x, const Word& y);

/// True iff w = x . y for some nonempty y (proper prefix).
bool is_prefix(const Word& x, const Word& w);
/// True iff w = y . x for some nonempty y (proper suffix).
bool is_suffix(const Word& x, const Word& w);

/// Number of words of length n, or BudgetExceeded if it exceeds `budget`.
std::uint64_t layer_size(std::size_t q, std::size_t n,
                         std::uint64_t budget = kDefaultEnumerationBudget);

/// All words of length n in lexicographic order.
std::vector<Word> layer_words(const Alphabet& alphabet, std::size_t n,
                              std::uint64_t budget = kDefaultEnumerationBudget);

/// Position of w within its layer: the base-q number spelled by its indices.
std::uint64_t rank(const Word& w);
Word unrank(const Alphabet& alphabet, std::size_t n, std::uint64_t r);

/// Contents of a word-list file.
struct WordList {
  Alphabet alphabet;
  std::optional<std::size_t> horizon;
  std::vector<Word> words;
};

/// Format: an `alphabet: <symbols>` header, an optional `horizon: <N>` line,
/// then one word per line. `#` starts a comment; blank lines are ignored.
WordList read_word_list(std::istream& in);
void write_word_list(std::ostream& out, const WordList& list);

}  // namespace prodfree
