#include "britton/words.hpp"

#include <cctype>
#include <ostream>
#include <sstream>

namespace britton {

bool is_generator_symbol(char c) {
  return kAlphabet.find(c) != std::string_view::npos;
}

void Word::append_run(char sym, const Int& exp) {
  if (exp == 0) return;
  if (!runs_.empty() && runs_.back().sym == sym) {
    runs_.back().exp += exp;
    if (runs_.back().exp == 0) runs_.pop_back();
    return;
  }
  runs_.push_back(Run{sym, exp});
}

Word::Word(std::vector<Run> runs) {
  for (const auto& r : runs) {
    if (!is_generator_symbol(r.sym))
      throw DomainError(std::string("unknown generator '") + r.sym + "'");
    append_run(r.sym, r.exp);
  }
}

Word Word::power(char sym, Int exp) {
  return Word({Run{sym, std::move(exp)}});
}

Word Word::parse(std::string_view text) {
  Word w;
  std::size_t i = 0;
  const std::size_t n = text.size();
  while (i < n) {
    if (std::isspace(static_cast<unsigned char>(text[i]))) {
      ++i;
      continue;
    }
    const std::size_t tok_start = i;
    const char sym = text[i];
    if (!is_generator_symbol(sym))
      throw ParseError(tok_start, std::string("unknown letter '") + sym + "'");
    ++i;
    Int exp = 1;
    if (i < n && text[i] == '^') {
      ++i;
      const std::size_t exp_start = i;
      std::string digits;
      if (i < n && (text[i] == '-' || text[i] == '+')) digits += text[i++];
      while (i < n && std::isdigit(static_cast<unsigned char>(text[i])))
        digits += text[i++];
      if (digits.empty() || digits == "-" || digits == "+")
        throw ParseError(exp_start, "malformed exponent");
      if (digits.front() == '+') digits.erase(0, 1);
      exp = Int(digits);
    }
    if (i < n && !std::isspace(static_cast<unsigned char>(text[i])))
      throw ParseError(i, std::string("unexpected character '") + text[i] +
                              "' inside token");
    w.append_run(sym, exp);
  }
  return w;
}

Word Word::inverse() const {
  Word r;
  r.runs_.reserve(runs_.size());
  for (auto it = runs_.rbegin(); it != runs_.rend(); ++it)
    r.runs_.push_back(Run{it->sym, -it->exp});
  return r;  // inverse of a reduced word is reduced
}

Word operator*(const Word& lhs, const Word& rhs) {
  Word r = lhs;
  for (const auto& run : rhs.runs_) r.append_run(run.sym, run.exp);
  return r;
}

Word Word::pow(const Int& n) const {
  if (n == 0 || runs_.empty()) return Word();
  if (runs_.size() == 1) return power(runs_.front().sym, runs_.front().exp * n);
  if (abs(n) > 1'000'000)
    throw BudgetError("word power too large to materialize: n = " + n.str());
  const Word base = n > 0 ? *this : inverse();
  Word r;
  for (Int i = 0; i < abs(n); ++i) r = r * base;
  return r;
}

Int Word::exponent_sum(char sym) const {
  Int total = 0;
  for (const auto& r : runs_)
    if (r.sym == sym) total += r.exp;
  return total;
}

Int Word::length() const {
  Int total = 0;
  for (const auto& r : runs_) total += abs(r.exp);
  return total;
}

std::string Word::str() const {
  std::ostringstream os;
  bool first = true;
  for (const auto& r : runs_) {
    if (!first) os << ' ';
    first = false;
    os << r.sym;
    if (r.exp != 1) os << '^' << r.exp;
  }
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const Word& w) {
  return os << w.str();
}

}  // namespace britton
