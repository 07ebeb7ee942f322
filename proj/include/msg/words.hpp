#ifndef MSG_WORDS_HPP
#define MSG_WORDS_HPP

#include <string>
#include <string_view>
#include <vector>

#include "msg/errors.hpp"

namespace msg {

// One letter of a group word: generator index plus sign (+1 or -1).
struct Letter {
  int gen;
  int sign;
  friend bool operator==(const Letter& a, const Letter& b) {
    return a.gen == b.gen && a.sign == b.sign;
  }
};

// Words are kept freely reduced at all times.
using Word = std::vector<Letter>;

struct Presentation {
  std::vector<std::string> generators;
  std::vector<Word> relators;

  int gen_index(std::string_view name) const;
};

// Finite list of subgroup generator words; empty list = trivial subgroup.
using SubgroupSpec = std::vector<Word>;

Word reduce(Word w);
Word invert(const Word& w);
Word concat(const Word& a, const Word& b);
Word power(const Word& w, int e);

// Grammar:  word := term ('*' term)*   term := atom ('^' int)?
//           atom := generator | '1' | '(' word ')'
// Whitespace is insignificant, '#' starts a comment running to end of line,
// '1' denotes the identity.
Word parse_word(std::string_view text, const std::vector<std::string>& gens);

// Inverse of parse_word up to run compression: parse(print(w)) == w.
std::string print_word(const Word& w, const std::vector<std::string>& gens);

// File format: a "generators:" header followed by comma-separated names
// (same line or following lines), then a "relators:" header followed by one
// word per line.  '#' comments and blank lines are ignored throughout.
Presentation parse_presentation(std::string_view text);

// Semicolon-separated list of words, e.g. "x*y; (x*z)^3".
SubgroupSpec parse_subgroup(std::string_view text, const Presentation& pres);

}  // namespace msg

#endif
