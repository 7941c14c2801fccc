#pragma once

#include <set>
#include <string>

#include "prodfree/constructions.hpp"
#include "prodfree/dfa.hpp"
#include "prodfree/layered_set.hpp"

namespace testing {

inline prodfree::Dfa odd_length(const prodfree::Alphabet& a) {
  return prodfree::odd_occurrence(prodfree::GammaSpec(a, a.symbols()));
}

inline prodfree::Dfa odd_a(const prodfree::Alphabet& a = prodfree::Alphabet("ab")) {
  return prodfree::odd_occurrence(prodfree::GammaSpec(a, "a"));
}

inline std::set<std::string> strings_of(const prodfree::LayeredSet& s) {
  std::set<std::string> out;
  for (const auto& w : s.words()) out.insert(w.str());
  return out;
}

inline prodfree::LayeredSet set_of(const prodfree::Alphabet& a,
                                   std::initializer_list<const char*> words, std::size_t horizon) {
  prodfree::LayeredSet s(a, horizon);
  for (const char* w : words) s.insert(prodfree::Word::parse(a, w));
  return s;
}

}  // namespace testing
