#pragma once

#include <gmpxx.h>

#include <map>
#include <string>
#include <string_view>

namespace ncdef {

using Rational = mpq_class;

/// Sparse vector keyed by coordinate index; zero entries are never stored.
using SparseVector = std::map<int, Rational>;

/// Canonical text form: "p" for integers, "p/q" otherwise.
std::string to_string(const Rational& q);

/// Parses INT ['/' INT]; throws std::invalid_argument on malformed input or zero denominator.
Rational parse_rational(std::string_view text);

/// v += c * w, dropping entries that cancel.
void axpy(SparseVector& v, const Rational& c, const SparseVector& w);

}  // namespace ncdef
