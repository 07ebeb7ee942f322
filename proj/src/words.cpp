#include "msg/words.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace msg {

int Presentation::gen_index(std::string_view name) const {
  for (size_t i = 0; i < generators.size(); ++i)
    if (generators[i] == name) return (int)i;
  throw UnknownGenerator("unknown generator '" + std::string(name) + "'");
}

static void push_reduced(Word& w, Letter l) {
  if (!w.empty() && w.back().gen == l.gen && w.back().sign == -l.sign)
    w.pop_back();
  else
    w.push_back(l);
}

Word reduce(Word w) {
  Word out;
  out.reserve(w.size());
  for (const Letter& l : w) push_reduced(out, l);
  return out;
}

Word invert(const Word& w) {
  Word out;
  out.reserve(w.size());
  for (auto it = w.rbegin(); it != w.rend(); ++it)
    out.push_back({it->gen, -it->sign});
  return out;
}

Word concat(const Word& a, const Word& b) {
  Word out = a;
  out.reserve(a.size() + b.size());
  for (const Letter& l : b) push_reduced(out, l);
  return out;
}

Word power(const Word& w, int e) {
  Word base = e < 0 ? invert(w) : w;
  int n = e < 0 ? -e : e;
  Word out;
  for (int i = 0; i < n; ++i) out = concat(out, base);
  return out;
}

namespace {

struct Scanner {
  std::string_view s;
  size_t pos = 0;

  void skip_ws() {
    while (pos < s.size()) {
      if (std::isspace((unsigned char)s[pos])) {
        ++pos;
      } else if (s[pos] == '#') {
        while (pos < s.size() && s[pos] != '\n') ++pos;
      } else {
        break;
      }
    }
  }
  bool eof() {
    skip_ws();
    return pos >= s.size();
  }
  char peek() {
    skip_ws();
    return pos < s.size() ? s[pos] : '\0';
  }
  char get() {
    skip_ws();
    if (pos >= s.size()) throw SyntaxError("unexpected end of word");
    return s[pos++];
  }
  std::string ident() {
    skip_ws();
    size_t start = pos;
    while (pos < s.size() &&
           (std::isalnum((unsigned char)s[pos]) || s[pos] == '_'))
      ++pos;
    if (pos == start) throw SyntaxError("expected generator name");
    return std::string(s.substr(start, pos - start));
  }
  int integer() {
    skip_ws();
    size_t start = pos;
    if (pos < s.size() && (s[pos] == '-' || s[pos] == '+')) ++pos;
    size_t digits = pos;
    while (pos < s.size() && std::isdigit((unsigned char)s[pos])) ++pos;
    if (pos == digits) throw SyntaxError("expected integer exponent");
    return std::stoi(std::string(s.substr(start, pos - start)));
  }
};

class WordParser {
 public:
  WordParser(std::string_view text, const std::vector<std::string>& gens)
      : sc_{text}, gens_(gens) {}

  Word parse() {
    Word w = word();
    if (!sc_.eof())
      throw SyntaxError("trailing input after word at offset " +
                        std::to_string(sc_.pos));
    return w;
  }

 private:
  Word word() {
    Word w = term();
    while (sc_.peek() == '*') {
      sc_.get();
      w = concat(w, term());
    }
    return w;
  }

  Word term() {
    Word a = atom();
    if (sc_.peek() == '^') {
      sc_.get();
      return power(a, sc_.integer());
    }
    return a;
  }

  Word atom() {
    char c = sc_.peek();
    if (c == '(') {
      sc_.get();
      Word w = word();
      if (sc_.peek() != ')') throw SyntaxError("expected ')'");
      sc_.get();
      return w;
    }
    if (c == '1') {
      sc_.get();
      return {};
    }
    if (std::isalpha((unsigned char)c) || c == '_') {
      std::string name = sc_.ident();
      int idx = -1;
      for (size_t i = 0; i < gens_.size(); ++i)
        if (gens_[i] == name) idx = (int)i;
      if (idx < 0)
        throw UnknownGenerator("unknown generator '" + name + "'");
      return {Letter{idx, +1}};
    }
    throw SyntaxError(std::string("unexpected character '") + c + "' in word");
  }

  Scanner sc_;
  const std::vector<std::string>& gens_;
};

bool valid_gen_name(const std::string& name) {
  if (name.empty()) return false;
  if (!std::isalpha((unsigned char)name[0]) && name[0] != '_') return false;
  if (name == "1") return false;
  for (char c : name)
    if (!std::isalnum((unsigned char)c) && c != '_') return false;
  return true;
}

std::string strip(std::string line) {
  size_t h = line.find('#');
  if (h != std::string::npos) line.erase(h);
  size_t a = line.find_first_not_of(" \t\r\n");
  if (a == std::string::npos) return "";
  size_t b = line.find_last_not_of(" \t\r\n");
  return line.substr(a, b - a + 1);
}

}  // namespace

Word parse_word(std::string_view text, const std::vector<std::string>& gens) {
  return WordParser(text, gens).parse();
}

std::string print_word(const Word& w, const std::vector<std::string>& gens) {
  if (w.empty()) return "1";
  std::string out;
  size_t i = 0;
  while (i < w.size()) {
    size_t j = i;
    while (j < w.size() && w[j] == w[i]) ++j;
    int e = (int)(j - i) * w[i].sign;
    if (!out.empty()) out += "*";
    out += gens.at(w[i].gen);
    if (e != 1) out += "^" + std::to_string(e);
    i = j;
  }
  return out;
}

Presentation parse_presentation(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  Presentation pres;
  enum { kStart, kGens, kRels } state = kStart;
  auto add_names = [&](const std::string& list) {
    std::istringstream ls(list);
    std::string name;
    while (std::getline(ls, name, ',')) {
      name = strip(name);
      if (name.empty()) continue;
      if (!valid_gen_name(name))
        throw SyntaxError("invalid generator name '" + name + "'");
      for (const auto& g : pres.generators)
        if (g == name)
          throw DuplicateGenerator("duplicate generator '" + name + "'");
      pres.generators.push_back(name);
    }
  };
  while (std::getline(in, line)) {
    line = strip(line);
    if (line.empty()) continue;
    if (line.rfind("generators:", 0) == 0) {
      if (state != kStart) throw SyntaxError("misplaced 'generators:' header");
      state = kGens;
      add_names(line.substr(11));
      continue;
    }
    if (line.rfind("relators:", 0) == 0) {
      if (state != kGens) throw SyntaxError("misplaced 'relators:' header");
      state = kRels;
      std::string rest = strip(line.substr(9));
      if (!rest.empty()) pres.relators.push_back(parse_word(rest, pres.generators));
      continue;
    }
    switch (state) {
      case kStart:
        throw SyntaxError("expected 'generators:' header");
      case kGens:
        add_names(line);
        break;
      case kRels:
        pres.relators.push_back(parse_word(line, pres.generators));
        break;
    }
  }
  if (state != kRels) throw SyntaxError("missing 'relators:' header");
  if (pres.generators.empty()) throw SyntaxError("no generators declared");
  return pres;
}

SubgroupSpec parse_subgroup(std::string_view text, const Presentation& pres) {
  SubgroupSpec spec;
  std::string s(text);
  size_t start = 0;
  while (start <= s.size()) {
    size_t end = s.find(';', start);
    std::string part = strip(s.substr(start, end == std::string::npos
                                                 ? std::string::npos
                                                 : end - start));
    if (!part.empty()) spec.push_back(parse_word(part, pres.generators));
    if (end == std::string::npos) break;
    start = end + 1;
  }
  return spec;
}

}  // namespace msg
