#include "ncinv/words.hpp"

#include <sstream>

#include "ncinv/error.hpp"

namespace ncinv {

int word_degree(const Word& w, const std::vector<GenInfo>& gens) {
  int d = 0;
  for (int g : w) d += gens[g].degree;
  return d;
}

bool deglex_less(const Word& a, const Word& b,
                 const std::vector<GenInfo>& gens) {
  int da = word_degree(a, gens), db = word_degree(b, gens);
  if (da != db) return da < db;
  return a < b;  // lexicographic on index sequences, prefix first
}

Word word_concat(const Word& a, const Word& b) {
  Word w = a;
  w.insert(w.end(), b.begin(), b.end());
  return w;
}

std::string word_str(const Word& w, const std::vector<GenInfo>& gens) {
  if (w.empty()) return "1";
  std::ostringstream os;
  for (size_t i = 0; i < w.size(); ++i) {
    if (i) os << "*";
    os << gens[w[i]].name;
  }
  return os.str();
}

namespace {
void enumerate(int d, const std::vector<GenInfo>& gens, Word& cur,
               std::vector<Word>& out, std::size_t cap) {
  if (d == 0) {
    check(out.size() < cap, ErrorKind::Caps, "words-per-degree cap exceeded");
    out.push_back(cur);
    return;
  }
  for (int g = 0; g < static_cast<int>(gens.size()); ++g) {
    if (gens[g].degree > d) continue;
    cur.push_back(g);
    enumerate(d - gens[g].degree, gens, cur, out, cap);
    cur.pop_back();
  }
}
}  // namespace

std::vector<Word> words_of_degree(int d, const std::vector<GenInfo>& gens,
                                  std::size_t cap) {
  std::vector<Word> out;
  Word cur;
  enumerate(d, gens, cur, out, cap);
  std::sort(out.begin(), out.end(),
            [&](const Word& a, const Word& b) { return deglex_less(a, b, gens); });
  return out;
}

}  // namespace ncinv
