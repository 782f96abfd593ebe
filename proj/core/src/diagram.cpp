#include "ntlc/diagram.hpp"

#include "ntlc/rational.hpp"

#include <algorithm>
#include <cstdlib>
#include <set>
#include <sstream>

namespace ntlc {

std::string rational_to_string(const Rational& r) {
  std::ostringstream os;
  os << numerator(r);
  if (denominator(r) != 1) os << '/' << denominator(r);
  return os.str();
}

Rational rational_from_string(const std::string& s) {
  auto parse_int = [](const std::string& t) -> Int {
    if (t.empty()) throw domain_error("empty integer in rational literal");
    std::size_t k = (t[0] == '-' || t[0] == '+') ? 1 : 0;
    if (k == t.size()) throw domain_error("sign without digits in rational literal");
    for (; k < t.size(); ++k)
      if (!std::isdigit(static_cast<unsigned char>(t[k])))
        throw domain_error("malformed rational literal: " + t);
    return Int(t);
  };
  auto slash = s.find('/');
  if (slash == std::string::npos) return Rational(parse_int(s));
  Int num = parse_int(s.substr(0, slash));
  Int den = parse_int(s.substr(slash + 1));
  if (den == 0) throw domain_error("zero denominator in rational literal");
  return Rational(num, den);
}

CoxeterData::CoxeterData(int n) : n_(n) {
  if (n < 2) throw domain_error("diagram rank must be at least 2");
}

CoxeterData build_diagram(int n) { return CoxeterData(n); }

int CoxeterData::bond(int i, int j) const {
  check_letter(i);
  check_letter(j);
  if (i == j) return 1;
  if (std::abs(i - j) > 1) return 2;
  int lo = std::min(i, j);
  if (lo == 0 || lo == n_ - 1) return 4;
  return 3;
}

bool CoxeterData::arrow_toward(int i, int j) const {
  if (bond(i, j) != 4) return false;
  // Arrows point at 0 and at n; the fault-injection mode reverses both.
  bool toward_j = (j == 0 || j == n_);
  return inverted_ ? !toward_j : toward_j;
}

bool CoxeterData::forbidden_triple(int i, int j) const {
  int m = bond(i, j);
  if (m == 3) return true;
  if (m == 4) return arrow_toward(i, j);
  return false;
}

void CoxeterData::check_letter(int i) const {
  if (i < 0 || i > n_)
    throw domain_error("letter " + std::to_string(i) + " out of range 0.." +
                       std::to_string(n_));
}

void check_word(const CoxeterData& d, const Word& w) {
  for (int x : w) d.check_letter(x);
}

Word cf_normal_form(const CoxeterData& d, const Word& w) {
  check_word(d, w);
  Word cur = w;
  std::vector<Word> blocks;
  while (!cur.empty()) {
    // A letter is minimal iff nothing to its right has an equal or adjacent
    // label; such letters commute pairwise, so the block may be sorted.
    std::vector<char> minimal(cur.size(), 1);
    for (std::size_t i = 0; i < cur.size(); ++i)
      for (std::size_t j = i + 1; j < cur.size() && minimal[i]; ++j)
        if (std::abs(cur[i] - cur[j]) <= 1) minimal[i] = 0;
    Word block, rest;
    for (std::size_t i = 0; i < cur.size(); ++i)
      (minimal[i] ? block : rest).push_back(cur[i]);
    std::sort(block.begin(), block.end());
    blocks.push_back(std::move(block));
    cur = std::move(rest);
  }
  Word out;
  out.reserve(w.size());
  for (auto it = blocks.rbegin(); it != blocks.rend(); ++it)
    out.insert(out.end(), it->begin(), it->end());
  return out;
}

std::vector<int> word_support(const Word& w) {
  std::set<int> s(w.begin(), w.end());
  return std::vector<int>(s.begin(), s.end());
}

bool has_full_support(const CoxeterData& d, const Word& w) {
  return static_cast<int>(word_support(w).size()) == d.rank() + 1;
}

std::string word_to_string(const Word& w) {
  std::string s;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(w[i]);
  }
  return s;
}

Word word_from_string(const CoxeterData& d, const std::string& s) {
  Word w;
  if (s.empty()) return w;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) throw domain_error("empty letter in word literal: " + s);
    std::size_t pos = 0;
    int v;
    try {
      v = std::stoi(item, &pos);
    } catch (const std::exception&) {
      throw domain_error("malformed word literal: " + s);
    }
    if (pos != item.size()) throw domain_error("malformed word literal: " + s);
    w.push_back(v);
  }
  check_word(d, w);
  return w;
}

} // namespace ntlc
