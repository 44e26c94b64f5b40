#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace britton {

using Int = boost::multiprecision::cpp_int;

/// The eleven generator symbols, in tower order.
inline constexpr std::string_view kAlphabet = "bcstefauvxy";

bool is_generator_symbol(char c);

struct ParseError : std::runtime_error {
  std::size_t position;
  ParseError(std::size_t pos, const std::string& what)
      : std::runtime_error(what + " (at position " + std::to_string(pos) + ")"),
        position(pos) {}
};

struct DomainError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Raised when an operation would materialize an unreasonably large object
/// (e.g. expanding a stable-letter power of astronomical exponent).
struct BudgetError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Generator {
  char symbol;
  int sign;  // +1 or -1
};

/// A freely reduced word over {b,c,s,t,e,f,a,u,v,x,y}, stored as maximal
/// runs g^k with k != 0 and adjacent runs over distinct symbols. The empty
/// word is the identity. Exponents are arbitrary-precision: elements such
/// as s^(3^40) round-trip through words exactly.
class Word {
 public:
  struct Run {
    char sym;
    Int exp;  // nonzero
    bool operator==(const Run& o) const { return sym == o.sym && exp == o.exp; }
  };

  Word() = default;
  explicit Word(std::vector<Run> runs);

  /// Parses the wire grammar: whitespace-separated tokens, each
  /// `letter['^'signed-int]`. `g^-n` denotes (g^-1)^n.
  static Word parse(std::string_view text);

  /// Single-run convenience: g^exp.
  static Word power(char sym, Int exp);

  Word inverse() const;
  Word pow(const Int& n) const;

  friend Word operator*(const Word& lhs, const Word& rhs);

  Int exponent_sum(char sym) const;

  /// Number of letters, counted with multiplicity (sum of |exponents|).
  Int length() const;
  bool empty() const { return runs_.empty(); }

  /// Prints in the wire grammar, collapsing runs into powers. The empty
  /// word prints as the empty string.
  std::string str() const;

  const std::vector<Run>& runs() const { return runs_; }

  /// Letter-level equality of freely reduced forms (not group equality).
  bool operator==(const Word& o) const { return runs_ == o.runs_; }
  bool operator!=(const Word& o) const { return !(*this == o); }

 private:
  void append_run(char sym, const Int& exp);

  std::vector<Run> runs_;
};

std::ostream& operator<<(std::ostream& os, const Word& w);

}  // namespace britton
