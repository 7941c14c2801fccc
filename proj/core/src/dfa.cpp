#include "prodfree/dfa.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <istream>
#include <map>
#include <ostream>
#include <stdexcept>
#include <string>

namespace prodfree {

Dfa::Dfa(Alphabet alphabet, std::size_t num_states, State start, std::vector<bool> accepting,
         std::vector<State> delta)
    : alphabet_(std::move(alphabet)),
      start_(start),
      accepting_(std::move(accepting)),
      delta_(std::move(delta)) {
  if (num_states == 0) throw std::invalid_argument("automaton needs at least one state");
  if (accepting_.size() != num_states) throw std::invalid_argument("accepting flags size mismatch");
  if (delta_.size() != num_states * alphabet_.size()) {
    throw std::invalid_argument("transition table must be complete");
  }
  if (start_ >= num_states) throw std::invalid_argument("start state out of range");
  for (auto t : delta_) {
    if (t >= num_states) throw std::invalid_argument("transition target out of range");
  }
}

Dfa Dfa::empty(const Alphabet& alphabet) {
  return Dfa(alphabet, 1, 0, {false}, std::vector<State>(alphabet.size(), 0));
}

Dfa Dfa::universal(const Alphabet& alphabet) {
  return Dfa(alphabet, 1, 0, {true}, std::vector<State>(alphabet.size(), 0));
}

Dfa Dfa::from_words(const Alphabet& alphabet, std::span<const Word> words) {
  const std::size_t q = alphabet.size();
  constexpr State kUnset = ~State{0};
  // state 0 is the dead state, state 1 the trie root
  std::vector<State> delta(2 * q, kUnset);
  std::vector<bool> accepting{false, false};
  for (const auto& w : words) {
    if (!(w.alphabet() == alphabet)) throw std::invalid_argument("alphabet mismatch");
    State s = 1;
    for (auto c : w.indices()) {
      State& t = delta[s * q + c];
      if (t == kUnset) {
        t = static_cast<State>(accepting.size());
        accepting.push_back(false);
        delta.resize(delta.size() + q, kUnset);
      }
      s = delta[s * q + c];
    }
    accepting[s] = true;
  }
  for (auto& t : delta) {
    if (t == kUnset) t = 0;
  }
  const std::size_t num_states = accepting.size();
  return minimize(Dfa(alphabet, num_states, 1, std::move(accepting), std::move(delta)));
}

State Dfa::run(std::span<const std::uint8_t> indices) const {
  State s = start_;
  for (auto c : indices) s = next(s, c);
  return s;
}

bool Dfa::accepts(const Word& w) const {
  if (!(w.alphabet() == alphabet_)) throw std::invalid_argument("alphabet mismatch");
  return accepting_[run(w.indices())];
}

namespace {

void require_same_alphabet(const Dfa& a, const Dfa& b) {
  if (!(a.alphabet() == b.alphabet())) throw std::invalid_argument("alphabet mismatch");
}

// Renumber reachable states breadth-first from the start.
Dfa canonical_order(const Dfa& d) {
  const std::size_t q = d.alphabet().size();
  constexpr State kUnseen = ~State{0};
  std::vector<State> order;
  std::vector<State> index(d.num_states(), kUnseen);
  index[d.start()] = 0;
  order.push_back(d.start());
  for (std::size_t i = 0; i < order.size(); ++i) {
    for (std::size_t c = 0; c < q; ++c) {
      State t = d.next(order[i], c);
      if (index[t] == kUnseen) {
        index[t] = static_cast<State>(order.size());
        order.push_back(t);
      }
    }
  }
  std::vector<bool> accepting(order.size());
  std::vector<State> delta(order.size() * q);
  for (std::size_t i = 0; i < order.size(); ++i) {
    accepting[i] = d.accepting(order[i]);
    for (std::size_t c = 0; c < q; ++c) delta[i * q + c] = index[d.next(order[i], c)];
  }
  return Dfa(d.alphabet(), order.size(), 0, std::move(accepting), std::move(delta));
}

template <class Op>
Dfa product(const Dfa& a, const Dfa& b, Op op) {
  require_same_alphabet(a, b);
  const std::size_t q = a.alphabet().size();
  std::map<std::pair<State, State>, State> index;
  std::vector<std::pair<State, State>> pairs;
  auto intern = [&](State x, State y) {
    auto [it, inserted] = index.try_emplace({x, y}, static_cast<State>(pairs.size()));
    if (inserted) pairs.emplace_back(x, y);
    return it->second;
  };
  intern(a.start(), b.start());
  std::vector<State> delta;
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    auto [x, y] = pairs[i];
    for (std::size_t c = 0; c < q; ++c) delta.push_back(intern(a.next(x, c), b.next(y, c)));
  }
  std::vector<bool> accepting(pairs.size());
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    accepting[i] = op(a.accepting(pairs[i].first), b.accepting(pairs[i].second));
  }
  return minimize(Dfa(a.alphabet(), pairs.size(), 0, std::move(accepting), std::move(delta)));
}

// Nondeterministic machine with epsilon moves; only used as an intermediate.
struct Nfa {
  std::size_t q = 0;
  std::vector<std::vector<std::vector<State>>> trans;  // [state][symbol] -> targets
  std::vector<std::vector<State>> eps;
  std::vector<bool> accepting;
  std::vector<State> start;

  State add_state(bool accept) {
    trans.emplace_back(q);
    eps.emplace_back();
    accepting.push_back(accept);
    return static_cast<State>(accepting.size() - 1);
  }

  // Copy of d's transition graph; returns the offset of state 0.
  State embed(const Dfa& d, bool keep_accepting) {
    State offset = static_cast<State>(accepting.size());
    for (State s = 0; s < d.num_states(); ++s) add_state(keep_accepting && d.accepting(s));
    for (State s = 0; s < d.num_states(); ++s) {
      for (std::size_t c = 0; c < q; ++c) trans[offset + s][c].push_back(offset + d.next(s, c));
    }
    return offset;
  }

  void closure(std::vector<State>& set) const {
    std::vector<State> stack(set.begin(), set.end());
    std::vector<bool> seen(accepting.size(), false);
    for (auto s : set) seen[s] = true;
    while (!stack.empty()) {
      State s = stack.back();
      stack.pop_back();
      for (auto t : eps[s]) {
        if (!seen[t]) {
          seen[t] = true;
          set.push_back(t);
          stack.push_back(t);
        }
      }
    }
    std::sort(set.begin(), set.end());
    set.erase(std::unique(set.begin(), set.end()), set.end());
  }

  Dfa determinize(const Alphabet& alphabet, std::size_t state_cap) const {
    std::map<std::vector<State>, State> index;
    std::vector<std::vector<State>> subsets;
    auto intern = [&](std::vector<State> set) {
      closure(set);
      auto it = index.find(set);
      if (it != index.end()) return it->second;
      if (subsets.size() >= state_cap) {
        throw BudgetExceeded("subset construction exceeded the state cap of " +
                             std::to_string(state_cap));
      }
      State id = static_cast<State>(subsets.size());
      index.emplace(set, id);
      subsets.push_back(std::move(set));
      return id;
    };
    intern(start);
    std::vector<State> delta;
    for (std::size_t i = 0; i < subsets.size(); ++i) {
      for (std::size_t c = 0; c < q; ++c) {
        std::vector<State> target;
        for (auto s : subsets[i]) {
          const auto& out = trans[s][c];
          target.insert(target.end(), out.begin(), out.end());
        }
        std::sort(target.begin(), target.end());
        target.erase(std::unique(target.begin(), target.end()), target.end());
        State t = intern(std::move(target));
        delta.push_back(t);
      }
    }
    std::vector<bool> accept(subsets.size(), false);
    for (std::size_t i = 0; i < subsets.size(); ++i) {
      accept[i] = std::any_of(subsets[i].begin(), subsets[i].end(),
                              [&](State s) { return accepting[s]; });
    }
    return Dfa(alphabet, subsets.size(), 0, std::move(accept), std::move(delta));
  }
};

}  // namespace

Dfa minimize(const Dfa& d) {
  const std::size_t q = d.alphabet().size();
  const std::size_t n = d.num_states();
  // Fresh non-accepting copy of the start state.
  std::vector<bool> accepting(n + 1);
  std::vector<State> delta((n + 1) * q);
  for (State s = 0; s < n; ++s) {
    accepting[s] = d.accepting(s);
    for (std::size_t c = 0; c < q; ++c) delta[s * q + c] = d.next(s, c);
  }
  accepting[n] = false;
  for (std::size_t c = 0; c < q; ++c) delta[n * q + c] = d.next(d.start(), c);
  Dfa prepared = canonical_order(
      Dfa(d.alphabet(), n + 1, static_cast<State>(n), std::move(accepting), std::move(delta)));

  // Moore partition refinement.
  const std::size_t m = prepared.num_states();
  std::vector<State> cls(m);
  std::size_t num_classes = 0;
  {
    bool any_accept = false, any_reject = false;
    for (State s = 0; s < m; ++s) (prepared.accepting(s) ? any_accept : any_reject) = true;
    for (State s = 0; s < m; ++s) {
      cls[s] = (any_accept && any_reject) ? (prepared.accepting(s) ? 1 : 0) : 0;
    }
    num_classes = (any_accept && any_reject) ? 2 : 1;
  }
  std::vector<State> signature(q + 1);
  while (true) {
    std::map<std::vector<State>, State> ids;
    std::vector<State> next_cls(m);
    for (State s = 0; s < m; ++s) {
      signature[0] = cls[s];
      for (std::size_t c = 0; c < q; ++c) signature[c + 1] = cls[prepared.next(s, c)];
      auto [it, inserted] = ids.try_emplace(signature, static_cast<State>(ids.size()));
      next_cls[s] = it->second;
    }
    cls = std::move(next_cls);
    if (ids.size() == num_classes) break;
    num_classes = ids.size();
  }

  std::vector<bool> min_accepting(num_classes);
  std::vector<State> min_delta(num_classes * q);
  for (State s = 0; s < m; ++s) {
    min_accepting[cls[s]] = prepared.accepting(s);
    for (std::size_t c = 0; c < q; ++c) min_delta[cls[s] * q + c] = cls[prepared.next(s, c)];
  }
  return canonical_order(Dfa(d.alphabet(), num_classes, cls[prepared.start()],
                             std::move(min_accepting), std::move(min_delta)));
}

bool isomorphic(const Dfa& a, const Dfa& b) {
  if (!(a.alphabet() == b.alphabet())) return false;
  const std::size_t q = a.alphabet().size();
  constexpr State kUnset = ~State{0};
  std::vector<State> map_ab(a.num_states(), kUnset);
  std::vector<State> map_ba(b.num_states(), kUnset);
  std::deque<State> queue{a.start()};
  map_ab[a.start()] = b.start();
  map_ba[b.start()] = a.start();
  std::size_t mapped = 1;
  while (!queue.empty()) {
    State x = queue.front();
    queue.pop_front();
    State y = map_ab[x];
    if (a.accepting(x) != b.accepting(y)) return false;
    for (std::size_t c = 0; c < q; ++c) {
      State tx = a.next(x, c), ty = b.next(y, c);
      if (map_ab[tx] == kUnset && map_ba[ty] == kUnset) {
        map_ab[tx] = ty;
        map_ba[ty] = tx;
        ++mapped;
        queue.push_back(tx);
      } else if (map_ab[tx] != ty || map_ba[ty] != tx) {
        return false;
      }
    }
  }
  // Reachable parts must have the same size: b's reachable states are exactly the images.
  std::size_t reachable_b = 0;
  {
    std::vector<bool> seen(b.num_states(), false);
    std::deque<State> bq{b.start()};
    seen[b.start()] = true;
    while (!bq.empty()) {
      State s = bq.front();
      bq.pop_front();
      ++reachable_b;
      for (std::size_t c = 0; c < q; ++c) {
        State t = b.next(s, c);
        if (!seen[t]) {
          seen[t] = true;
          bq.push_back(t);
        }
      }
    }
  }
  return reachable_b == mapped;
}

bool equivalent(const Dfa& a, const Dfa& b) { return minimize(a) == minimize(b); }

Dfa dfa_union(const Dfa& a, const Dfa& b) {
  return product(a, b, [](bool x, bool y) { return x || y; });
}

Dfa dfa_intersect(const Dfa& a, const Dfa& b) {
  return product(a, b, [](bool x, bool y) { return x && y; });
}

Dfa dfa_difference(const Dfa& a, const Dfa& b) {
  return product(a, b, [](bool x, bool y) { return x && !y; });
}

Dfa dfa_complement(const Dfa& a) {
  const std::size_t q = a.alphabet().size();
  std::vector<bool> accepting(a.num_states());
  std::vector<State> delta(a.num_states() * q);
  for (State s = 0; s < a.num_states(); ++s) {
    accepting[s] = !a.accepting(s);
    for (std::size_t c = 0; c < q; ++c) delta[s * q + c] = a.next(s, c);
  }
  return minimize(Dfa(a.alphabet(), a.num_states(), a.start(), std::move(accepting), std::move(delta)));
}

Dfa dfa_concat(const Dfa& a, const Dfa& b, std::size_t state_cap) {
  require_same_alphabet(a, b);
  Nfa nfa;
  nfa.q = a.alphabet().size();
  // Copies of both start states with no incoming edges: the bridge may only be
  // taken after a nonempty first factor, and the second factor must be
  // nonempty too.
  State left = nfa.embed(a, false);
  State left_start = nfa.add_state(false);
  State right = nfa.embed(b, true);
  State right_start = nfa.add_state(false);
  for (std::size_t c = 0; c < nfa.q; ++c) {
    nfa.trans[left_start][c].push_back(left + a.next(a.start(), c));
    nfa.trans[right_start][c].push_back(right + b.next(b.start(), c));
  }
  for (State s = 0; s < a.num_states(); ++s) {
    if (a.accepting(s)) nfa.eps[left + s].push_back(right_start);
  }
  nfa.start = {left_start};
  return minimize(nfa.determinize(a.alphabet(), state_cap));
}

Dfa dfa_length_slice(const Dfa& d, std::size_t n) {
  if (n == 0) throw std::invalid_argument("slice length must be positive");
  const std::size_t q = d.alphabet().size();
  const std::size_t width = n + 2;  // counter 0..n, plus n+1 for "too long"
  const std::size_t total = d.num_states() * width;
  std::vector<bool> accepting(total, false);
  std::vector<State> delta(total * q);
  for (State s = 0; s < d.num_states(); ++s) {
    for (std::size_t k = 0; k < width; ++k) {
      const std::size_t id = s * width + k;
      accepting[id] = (k == n) && d.accepting(s);
      const std::size_t nk = std::min(k + 1, n + 1);
      for (std::size_t c = 0; c < q; ++c) {
        delta[id * q + c] = static_cast<State>(d.next(s, c) * width + nk);
      }
    }
  }
  return minimize(Dfa(d.alphabet(), total, static_cast<State>(d.start() * width),
                      std::move(accepting), std::move(delta)));
}

Dfa dfa_layer(const Alphabet& alphabet, std::size_t n) {
  return dfa_length_slice(Dfa::universal(alphabet), n);
}

std::optional<Word> shortest_word(const Dfa& d) {
  const std::size_t q = d.alphabet().size();
  constexpr State kNone = ~State{0};
  // parent links over states reached by nonempty words; kNone parent == from start
  std::vector<State> parent(d.num_states(), kNone);
  std::vector<std::uint8_t> via(d.num_states(), 0);
  std::vector<bool> seen(d.num_states(), false);
  std::deque<State> queue;
  for (std::size_t c = 0; c < q; ++c) {
    State t = d.next(d.start(), c);
    if (!seen[t]) {
      seen[t] = true;
      via[t] = static_cast<std::uint8_t>(c);
      queue.push_back(t);
    }
  }
  while (!queue.empty()) {
    State s = queue.front();
    queue.pop_front();
    if (d.accepting(s)) {
      std::vector<std::uint8_t> indices;
      for (State cur = s; cur != kNone; cur = parent[cur]) indices.push_back(via[cur]);
      std::reverse(indices.begin(), indices.end());
      return Word(d.alphabet(), std::move(indices));
    }
    for (std::size_t c = 0; c < q; ++c) {
      State t = d.next(s, c);
      if (!seen[t]) {
        seen[t] = true;
        parent[t] = s;
        via[t] = static_cast<std::uint8_t>(c);
        queue.push_back(t);
      }
    }
  }
  return std::nullopt;
}

namespace {

std::vector<BigInt> step_counts(const Dfa& d, const std::vector<BigInt>& counts) {
  const std::size_t q = d.alphabet().size();
  std::vector<BigInt> next(d.num_states(), 0);
  for (State s = 0; s < d.num_states(); ++s) {
    if (counts[s] == 0) continue;
    for (std::size_t c = 0; c < q; ++c) next[d.next(s, c)] += counts[s];
  }
  return next;
}

BigInt accepted_total(const Dfa& d, const std::vector<BigInt>& counts) {
  BigInt total = 0;
  for (State s = 0; s < d.num_states(); ++s) {
    if (d.accepting(s)) total += counts[s];
  }
  return total;
}

}  // namespace

std::vector<LayerCount> dfa_layer_counts(const Dfa& d, std::size_t horizon) {
  std::vector<LayerCount> out;
  out.reserve(horizon);
  std::vector<BigInt> counts(d.num_states(), 0);
  counts[d.start()] = 1;
  BigInt total = 1;
  for (std::size_t n = 1; n <= horizon; ++n) {
    counts = step_counts(d, counts);
    total *= d.alphabet().size();
    out.push_back(LayerCount{n, accepted_total(d, counts), total});
  }
  return out;
}

LayerCount dfa_layer_count(const Dfa& d, std::size_t n) {
  if (n == 0) throw std::invalid_argument("layer length must be positive");
  return dfa_layer_counts(d, n).back();
}

BigInt dfa_refined_count(const Dfa& d, std::size_t n, std::span<const std::size_t> ls) {
  if (n == 0) throw std::invalid_argument("layer length must be positive");
  validate_lsequence(n, ls);
  std::vector<BigInt> counts(d.num_states(), 0);
  counts[d.start()] = 1;
  auto next_cut = ls.begin();
  for (std::size_t step = 1; step <= n; ++step) {
    counts = step_counts(d, counts);
    if (next_cut != ls.end() && *next_cut == step) {
      // words whose length-`step` prefix lies in S are removed from here on
      for (State s = 0; s < d.num_states(); ++s) {
        if (d.accepting(s)) counts[s] = 0;
      }
      ++next_cut;
    }
  }
  return accepted_total(d, counts);
}

Dfa prefix_excluded(const Dfa& d, std::size_t n, std::span<const std::size_t> ls,
                    std::size_t state_cap) {
  if (n == 0) throw std::invalid_argument("layer length must be positive");
  validate_lsequence(n, ls);
  Dfa result = dfa_length_slice(d, n);
  for (auto l : ls) {
    Dfa covered = dfa_concat(dfa_length_slice(d, l), dfa_layer(d.alphabet(), n - l), state_cap);
    result = dfa_difference(result, covered);
  }
  return result;
}

LayeredSet dfa_truncate(const Dfa& d, std::size_t horizon, std::uint64_t budget) {
  LayeredSet out(d.alphabet(), horizon);
  const std::size_t q = d.alphabet().size();
  std::vector<State> current{d.start()};  // state after each word of the previous layer, by rank
  for (std::size_t n = 1; n <= horizon; ++n) {
    std::uint64_t size = layer_size(q, n, budget);
    std::vector<State> next(size);
    for (std::uint64_t r = 0; r < current.size(); ++r) {
      for (std::size_t c = 0; c < q; ++c) next[r * q + c] = d.next(current[r], c);
    }
    for (std::uint64_t r = 0; r < size; ++r) {
      if (d.accepting(next[r])) out.insert(n, r);
    }
    current = std::move(next);
  }
  return out;
}

namespace {

std::string trim_copy(const std::string& s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return s.substr(b, e - b);
}

std::size_t parse_index(const std::string& token, std::size_t line, std::size_t column,
                        const char* what) {
  if (token.empty() || !std::all_of(token.begin(), token.end(),
                                    [](unsigned char c) { return std::isdigit(c); })) {
    throw ParseError(std::string("expected ") + what + ", got '" + token + "'", line, column);
  }
  try {
    return std::stoull(token);
  } catch (const std::exception&) {
    throw ParseError(std::string(what) + " out of range", line, column);
  }
}

struct Token {
  std::string text;
  std::size_t column;
};

std::vector<Token> split_tokens(const std::string& line, std::size_t from) {
  std::vector<Token> tokens;
  std::size_t i = from;
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    if (i >= line.size()) break;
    std::size_t start = i;
    while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    tokens.push_back({line.substr(start, i - start), start + 1});
  }
  return tokens;
}

}  // namespace

Dfa read_dfa(std::istream& in) {
  std::optional<Alphabet> alphabet;
  std::optional<std::size_t> states;
  std::optional<std::size_t> start;
  std::optional<std::vector<std::size_t>> accept;
  std::vector<State> delta;
  std::vector<bool> defined;
  std::string raw;
  std::size_t line_no = 0;

  auto require_header = [&](std::size_t line) {
    if (!alphabet || !states) {
      throw ParseError("'alphabet:' and 'states:' must precede other entries", line, 1);
    }
  };

  while (std::getline(in, raw)) {
    ++line_no;
    std::string line = raw.substr(0, raw.find('#'));
    if (trim_copy(line).empty()) continue;
    std::size_t colon = line.find(':');
    if (colon == std::string::npos) throw ParseError("expected 'key: value'", line_no, 1);
    std::string key = trim_copy(line.substr(0, colon));
    auto tokens = split_tokens(line, colon + 1);

    if (key == "alphabet") {
      if (alphabet) throw ParseError("duplicate alphabet", line_no, 1);
      if (tokens.size() != 1) throw ParseError("expected one alphabet string", line_no, colon + 2);
      try {
        alphabet.emplace(tokens[0].text);
      } catch (const std::invalid_argument& e) {
        throw ParseError(e.what(), line_no, tokens[0].column);
      }
    } else if (key == "states") {
      if (!alphabet) throw ParseError("'alphabet:' must come first", line_no, 1);
      if (states) throw ParseError("duplicate states", line_no, 1);
      if (tokens.size() != 1) throw ParseError("expected a state count", line_no, colon + 2);
      states = parse_index(tokens[0].text, line_no, tokens[0].column, "state count");
      if (*states == 0) throw ParseError("state count must be positive", line_no, tokens[0].column);
      if (*states > (std::size_t{1} << 31)) {
        throw ParseError("state count too large", line_no, tokens[0].column);
      }
      delta.assign(*states * alphabet->size(), 0);
      defined.assign(delta.size(), false);
    } else if (key == "start") {
      require_header(line_no);
      if (start) throw ParseError("duplicate start", line_no, 1);
      if (tokens.size() != 1) throw ParseError("expected one start state", line_no, colon + 2);
      start = parse_index(tokens[0].text, line_no, tokens[0].column, "state id");
      if (*start >= *states) throw ParseError("start state out of range", line_no, tokens[0].column);
    } else if (key == "accept") {
      require_header(line_no);
      if (accept) throw ParseError("duplicate accept", line_no, 1);
      accept.emplace();
      for (const auto& tok : tokens) {
        auto s = parse_index(tok.text, line_no, tok.column, "state id");
        if (s >= *states) throw ParseError("accepting state out of range", line_no, tok.column);
        accept->push_back(s);
      }
    } else if (key == "trans") {
      require_header(line_no);
      if (tokens.size() != 3) {
        throw ParseError("expected 'trans: <from> <symbol> <to>'", line_no, colon + 2);
      }
      auto from = parse_index(tokens[0].text, line_no, tokens[0].column, "state id");
      if (from >= *states) throw ParseError("state out of range", line_no, tokens[0].column);
      if (tokens[1].text.size() != 1 || !alphabet->index_of(tokens[1].text[0])) {
        throw ParseError("unknown symbol '" + tokens[1].text + "'", line_no, tokens[1].column);
      }
      auto symbol = *alphabet->index_of(tokens[1].text[0]);
      auto to = parse_index(tokens[2].text, line_no, tokens[2].column, "state id");
      if (to >= *states) throw ParseError("state out of range", line_no, tokens[2].column);
      std::size_t slot = from * alphabet->size() + symbol;
      if (defined[slot]) throw ParseError("duplicate transition", line_no, tokens[0].column);
      defined[slot] = true;
      delta[slot] = static_cast<State>(to);
    } else {
      throw ParseError("unknown key '" + key + "'", line_no, 1);
    }
  }
  if (!alphabet) throw ParseError("missing 'alphabet:'", line_no);
  if (!states) throw ParseError("missing 'states:'", line_no);
  if (!start) throw ParseError("missing 'start:'", line_no);
  if (!accept) throw ParseError("missing 'accept:'", line_no);
  for (std::size_t slot = 0; slot < defined.size(); ++slot) {
    if (!defined[slot]) {
      throw ParseError("missing transition from state " + std::to_string(slot / alphabet->size()) +
                           " on '" + alphabet->symbol(slot % alphabet->size()) + "'",
                       line_no);
    }
  }
  std::vector<bool> accepting(*states, false);
  for (auto s : *accept) accepting[s] = true;
  return Dfa(*alphabet, *states, static_cast<State>(*start), std::move(accepting), std::move(delta));
}

void write_dfa(std::ostream& out, const Dfa& d) {
  const std::size_t q = d.alphabet().size();
  out << "alphabet: " << d.alphabet().symbols() << '\n';
  out << "states: " << d.num_states() << '\n';
  out << "start: " << d.start() << '\n';
  out << "accept:";
  for (State s = 0; s < d.num_states(); ++s) {
    if (d.accepting(s)) out << ' ' << s;
  }
  out << '\n';
  for (State s = 0; s < d.num_states(); ++s) {
    for (std::size_t c = 0; c < q; ++c) {
      out << "trans: " << s << ' ' << d.alphabet().symbol(c) << ' ' << d.next(s, c) << '\n';
    }
  }
}

}  // namespace prodfree
