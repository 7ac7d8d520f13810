#pragma once
#include <string>
#include <vector>

namespace ncinv {

// A word is a sequence of generator indices; the empty word is the unit.
using Word = std::vector<int>;

struct GenInfo {
  std::string name;
  int degree = 1;
};

int word_degree(const Word& w, const std::vector<GenInfo>& gens);

// Degree-lexicographic order: total degree first, then the index sequence
// (declared generator order), shorter prefixes first.
bool deglex_less(const Word& a, const Word& b, const std::vector<GenInfo>& gens);

Word word_concat(const Word& a, const Word& b);
std::string word_str(const Word& w, const std::vector<GenInfo>& gens);

// All words of exact total degree d, ascending deglex. Throws ErrorKind::Caps
// when more than `cap` words would be produced.
std::vector<Word> words_of_degree(int d, const std::vector<GenInfo>& gens,
                                  std::size_t cap);

}  // namespace ncinv
