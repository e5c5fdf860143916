#ifndef TRADEBLOC_NUMERIC_HPP
#define TRADEBLOC_NUMERIC_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <cmath>
#include <cstdint>
#include <string>
#include <vector>

namespace tradebloc {

// Exact backend for the closed forms; every quantity in the model is rational
// in a, lambda and the integer counts.
using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

enum class NumericMode { kFloat64, kExactRational };

template <class Scalar>
struct NumericTraits;

template <>
struct NumericTraits<double> {
  static constexpr NumericMode mode = NumericMode::kFloat64;
  static constexpr const char* name = "float64";
  static double default_tolerance() { return 1e-12; }
};

template <>
struct NumericTraits<Rational> {
  static constexpr NumericMode mode = NumericMode::kExactRational;
  static constexpr const char* name = "exact_rational";
  static Rational default_tolerance() {
    return Rational(1, BigInt("1000000000000"));
  }
};

inline double to_double(double x) { return x; }
inline double to_double(const Rational& x) { return x.template convert_to<double>(); }

inline double abs_value(double x) { return std::fabs(x); }
inline Rational abs_value(const Rational& x) { return x < 0 ? Rational(-x) : x; }

// Scalar from an integer ratio, exact in rational mode.
template <class Scalar>
Scalar scalar_ratio(long long num, long long den) {
  if constexpr (NumericTraits<Scalar>::mode == NumericMode::kExactRational) {
    return Rational(num, den);
  } else {
    return static_cast<double>(num) / static_cast<double>(den);
  }
}

template <class Scalar>
class SquareMatrix {
 public:
  SquareMatrix() = default;
  explicit SquareMatrix(int size) : size_(size), cells_(static_cast<size_t>(size) * size, Scalar(0)) {}

  int size() const { return size_; }
  Scalar& at(int row, int col) { return cells_[static_cast<size_t>(row) * size_ + col]; }
  const Scalar& at(int row, int col) const { return cells_[static_cast<size_t>(row) * size_ + col]; }

  Scalar max_abs() const {
    Scalar best(0);
    for (const Scalar& c : cells_) {
      Scalar a = abs_value(c);
      if (a > best) best = a;
    }
    return best;
  }

 private:
  int size_ = 0;
  std::vector<Scalar> cells_;
};

}  // namespace tradebloc

#endif  // TRADEBLOC_NUMERIC_HPP
