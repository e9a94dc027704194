#pragma once

#include <stdexcept>
#include <string>

namespace ncdef {

/// A computation needed words beyond the degree up to which results are certified.
/// The fix is always to raise the degree bound (or the algebra's `truncate`).
class TruncationExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A relation is not admissible: non-parallel terms, degree below 2, or zero.
class AdmissibilityError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class NotSimpleCollection : public std::runtime_error {
 public:
  NotSimpleCollection(int i, int j, std::size_t dim)
      : std::runtime_error("not a simple collection: dim Hom(F" + std::to_string(i + 1) + ",F" +
                           std::to_string(j + 1) + ") = " + std::to_string(dim)),
        i_(i), j_(j), dim_(dim) {}
  int i() const { return i_; }
  int j() const { return j_; }
  std::size_t dimension() const { return dim_; }

 private:
  int i_, j_;
  std::size_t dim_;
};

}  // namespace ncdef
