#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <vector>

namespace sphex {

struct error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Exact rational scalar. All values are kept canonical (lowest terms,
// positive denominator); construction from raw integer pairs or strings
// must go through the helpers below, which canonicalize.
using Rat = mpq_class;
using QVec = std::vector<Rat>;

inline Rat rat(long num, long den = 1) {
  if (den == 0) throw error("rational with zero denominator");
  Rat q(num, den);
  q.canonicalize();
  return q;
}

// Accepts "p", "-p", "p/q" with decimal digits; rejects everything else.
Rat rat_from_string(const std::string& s);
std::string rat_to_string(const Rat& q);

bool is_zero(const QVec& v);
QVec scale(const QVec& v, const Rat& c);
QVec add(const QVec& a, const QVec& b);
QVec sub(const QVec& a, const QVec& b);
Rat dot(const QVec& a, const QVec& b);

// Integer vector proportional to v with content 1; direction (sign) is kept.
QVec primitive(const QVec& v);

// Lexicographic order on coordinate vectors.
bool lex_less(const QVec& a, const QVec& b);

}  // namespace sphex
