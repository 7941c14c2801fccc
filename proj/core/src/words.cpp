#include "prodfree/words.hpp"

#include <algorithm>
#include <cctype>
#include <istream>
#include <ostream>

#include "prodfree/numeric.hpp"

namespace prodfree {

ParseError::ParseError(const std::string& what, std::size_t line, std::size_t column)
    : std::runtime_error(line == 0 ? what
                         : column == 0
                             ? "line " + std::to_string(line) + ": " + what
                             : "line " + std::to_string(line) + ", column " +
                                   std::to_string(column) + ": " + what),
      line_(line),
      column_(column) {}

Alphabet::Alphabet() : Alphabet("ab") {}

Alphabet::Alphabet(std::string_view symbols)
    : symbols_(std::make_shared<const std::string>(symbols)) {
  if (symbols.empty() || symbols.size() > kMaxAlphabetSize) {
    throw std::invalid_argument("alphabet must have between 1 and 16 symbols");
  }
  for (std::size_t i = 0; i < symbols.size(); ++i) {
    unsigned char c = static_cast<unsigned char>(symbols[i]);
    if (!std::isgraph(c) || c == '#') {
      throw std::invalid_argument(std::string("invalid alphabet symbol '") + symbols[i] + "'");
    }
    if (symbols.find(symbols[i], i + 1) != std::string_view::npos) {
      throw std::invalid_argument(std::string("duplicate alphabet symbol '") + symbols[i] + "'");
    }
  }
}

std::optional<std::uint8_t> Alphabet::index_of(char c) const {
  auto pos = symbols_->find(c);
  if (pos == std::string::npos) return std::nullopt;
  return static_cast<std::uint8_t>(pos);
}

Word::Word(Alphabet alphabet, std::vector<std::uint8_t> indices)
    : alphabet_(std::move(alphabet)), indices_(std::move(indices)) {
  if (indices_.empty()) throw std::invalid_argument("words must be nonempty");
  for (auto i : indices_) {
    if (i >= alphabet_.size()) throw std::invalid_argument("symbol index out of range");
  }
}

Word Word::parse(const Alphabet& alphabet, std::string_view text) {
  if (text.empty()) throw std::invalid_argument("words must be nonempty");
  std::vector<std::uint8_t> indices;
  indices.reserve(text.size());
  for (char c : text) {
    auto idx = alphabet.index_of(c);
    if (!idx) {
      throw std::invalid_argument(std::string("symbol '") + c + "' is not in alphabet \"" +
                                  alphabet.symbols() + "\"");
    }
    indices.push_back(*idx);
  }
  return Word(alphabet, std::move(indices));
}

std::string Word::str() const {
  std::string out;
  out.reserve(indices_.size());
  for (auto i : indices_) out.push_back(alphabet_.symbol(i));
  return out;
}

Word Word::slice(std::size_t pos, std::size_t len) const {
  if (len == 0 || pos + len > indices_.size()) throw std::out_of_range("bad word slice");
  return Word(alphabet_, std::vector<std::uint8_t>(indices_.begin() + static_cast<std::ptrdiff_t>(pos),
                                                   indices_.begin() + static_cast<std::ptrdiff_t>(pos + len)));
}

bool operator<(const Word& a, const Word& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return a.indices_ < b.indices_;
}

std::ostream& operator<<(std::ostream& os, const Word& w) { return os << w.str(); }

Word concat(const Word& x, const Word& y) {
  if (!(x.alphabet() == y.alphabet())) {
    throw std::invalid_argument("cannot concatenate words over different alphabets");
  }
  std::vector<std::uint8_t> indices(x.indices().begin(), x.indices().end());
  indices.insert(indices.end(), y.indices().begin(), y.indices().end());
  return Word(x.alphabet(), std::move(indices));
}

bool is_prefix(const Word& x, const Word& w) {
  if (!(x.alphabet() == w.alphabet())) throw std::invalid_argument("alphabet mismatch");
  if (x.size() >= w.size()) return false;
  return std::equal(x.indices().begin(), x.indices().end(), w.indices().begin());
}

bool is_suffix(const Word& x, const Word& w) {
  if (!(x.alphabet() == w.alphabet())) throw std::invalid_argument("alphabet mismatch");
  if (x.size() >= w.size()) return false;
  return std::equal(x.indices().begin(), x.indices().end(),
                    w.indices().end() - static_cast<std::ptrdiff_t>(x.size()));
}

std::uint64_t layer_size(std::size_t q, std::size_t n, std::uint64_t budget) {
  std::uint64_t size = 1;
  for (std::size_t i = 0; i < n; ++i) {
    if (size > budget / q) {
      throw BudgetExceeded("layer " + std::to_string(n) + " over " + std::to_string(q) +
                           " symbols exceeds the enumeration budget");
    }
    size *= q;
  }
  if (size > budget) throw BudgetExceeded("layer exceeds the enumeration budget");
  return size;
}

std::vector<Word> layer_words(const Alphabet& alphabet, std::size_t n, std::uint64_t budget) {
  if (n == 0) throw std::invalid_argument("layer length must be positive");
  std::uint64_t count = layer_size(alphabet.size(), n, budget);
  std::vector<Word> out;
  out.reserve(count);
  for (std::uint64_t r = 0; r < count; ++r) out.push_back(unrank(alphabet, n, r));
  return out;
}

std::uint64_t rank(const Word& w) {
  const std::uint64_t q = w.alphabet().size();
  checked_pow(q, w.size());
  std::uint64_t r = 0;
  for (auto i : w.indices()) r = r * q + i;
  return r;
}

Word unrank(const Alphabet& alphabet, std::size_t n, std::uint64_t r) {
  if (n == 0) throw std::invalid_argument("words must be nonempty");
  const std::uint64_t q = alphabet.size();
  bool fits = true;
  std::uint64_t total = 1;
  try {
    total = checked_pow(q, n);
  } catch (const BudgetExceeded&) {
    fits = false;
  }
  if (fits && r >= total) {
    throw std::out_of_range("rank " + std::to_string(r) + " out of range for layer " +
                            std::to_string(n));
  }
  std::vector<std::uint8_t> indices(n);
  for (std::size_t i = n; i-- > 0;) {
    indices[i] = static_cast<std::uint8_t>(r % q);
    r /= q;
  }
  return Word(alphabet, std::move(indices));
}

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

std::string_view strip_comment(std::string_view s) {
  if (auto pos = s.find('#'); pos != std::string_view::npos) s = s.substr(0, pos);
  return trim(s);
}

}  // namespace

WordList read_word_list(std::istream& in) {
  std::optional<Alphabet> alphabet;
  std::optional<std::size_t> horizon;
  std::vector<Word> words;
  std::vector<std::size_t> word_lines;
  std::string raw;
  std::size_t line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    std::string_view line = strip_comment(raw);
    if (line.empty()) continue;
    if (line.starts_with("alphabet:")) {
      if (alphabet) throw ParseError("duplicate alphabet header", line_no);
      try {
        alphabet.emplace(trim(line.substr(9)));
      } catch (const std::invalid_argument& e) {
        throw ParseError(e.what(), line_no, 10);
      }
      continue;
    }
    if (line.starts_with("horizon:")) {
      std::string value(trim(line.substr(8)));
      try {
        std::size_t used = 0;
        long long h = std::stoll(value, &used);
        if (used != value.size() || h < 1) throw std::invalid_argument("bad");
        horizon = static_cast<std::size_t>(h);
      } catch (const std::exception&) {
        throw ParseError("horizon must be a positive integer", line_no, 9);
      }
      continue;
    }
    if (!alphabet) throw ParseError("missing 'alphabet:' header before first word", line_no, 1);
    std::size_t offset = static_cast<std::size_t>(line.data() - raw.data());
    for (std::size_t i = 0; i < line.size(); ++i) {
      if (!alphabet->index_of(line[i])) {
        throw ParseError(std::string("symbol '") + line[i] + "' is not in the alphabet", line_no,
                         offset + i + 1);
      }
    }
    words.push_back(Word::parse(*alphabet, line));
    word_lines.push_back(line_no);
  }
  if (!alphabet) throw ParseError("missing 'alphabet:' header", line_no == 0 ? 1 : line_no);
  if (horizon) {
    for (std::size_t i = 0; i < words.size(); ++i) {
      if (words[i].size() > *horizon) {
        throw ParseError("word '" + words[i].str() + "' is longer than the declared horizon",
                         word_lines[i], 1);
      }
    }
  }
  return WordList{*alphabet, horizon, std::move(words)};
}

void write_word_list(std::ostream& out, const WordList& list) {
  out << "alphabet: " << list.alphabet.symbols() << '\n';
  if (list.horizon) out << "horizon: " << *list.horizon << '\n';
  for (const auto& w : list.words) out << w.str() << '\n';
}

}  // namespace prodfree
