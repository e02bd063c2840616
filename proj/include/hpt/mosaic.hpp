#pragma once

#include <stdexcept>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace hpt {

using BigInt = boost::multiprecision::cpp_int;

// Mosaic parameter q of the regular square mosaic {4,q}.
// q = 4 is the Euclidean (classical Pascal) case; q >= 5 is hyperbolic.
class Mosaic {
 public:
  explicit Mosaic(int q) : q_(q) {
    if (q < 4)
      throw std::invalid_argument("mosaic {4,q} requires q >= 4, got q=" +
                                  std::to_string(q));
  }

  int q() const { return q_; }
  bool even_q() const { return q_ % 2 == 0; }
  bool hyperbolic() const { return q_ >= 5; }

 private:
  int q_;
};

}  // namespace hpt
