#ifndef TRADEBLOC_TARIFF_PROFILE_HPP
#define TRADEBLOC_TARIFF_PROFILE_HPP

#include <string>
#include <vector>

#include "tradebloc/errors.hpp"
#include "tradebloc/numeric.hpp"

namespace tradebloc {

// t(i, j) is the tariff country i imposes on imports of country j's export
// good. The diagonal is identically zero.
template <class Scalar>
class TariffProfile {
 public:
  TariffProfile() = default;
  explicit TariffProfile(int world_size)
      : world_size_(world_size),
        cells_(static_cast<size_t>(world_size) * world_size, Scalar(0)) {}

  static TariffProfile zeros(int world_size) { return TariffProfile(world_size); }

  static TariffProfile common(int world_size, const Scalar& tariff) {
    TariffProfile p(world_size);
    for (int i = 0; i < world_size; ++i)
      for (int j = 0; j < world_size; ++j)
        if (i != j) p.at(i, j) = tariff;
    return p;
  }

  int world_size() const { return world_size_; }

  Scalar& at(int i, int j) { return cells_[static_cast<size_t>(i) * world_size_ + j]; }
  const Scalar& at(int i, int j) const { return cells_[static_cast<size_t>(i) * world_size_ + j]; }

  // Sum over importers k != exporter of t(k, exporter).
  Scalar column_sum(int exporter) const {
    Scalar s(0);
    for (int k = 0; k < world_size_; ++k)
      if (k != exporter) s += at(k, exporter);
    return s;
  }

  Scalar max_abs_difference(const TariffProfile& other) const {
    Scalar best(0);
    for (int i = 0; i < world_size_; ++i)
      for (int j = 0; j < world_size_; ++j) {
        Scalar d = abs_value(Scalar(at(i, j) - other.at(i, j)));
        if (d > best) best = d;
      }
    return best;
  }

  // Shape invariants only; non-prohibitiveness needs an equilibrium solve and
  // is checked there.
  void validate() const {
    for (int i = 0; i < world_size_; ++i) {
      if (!(at(i, i) == Scalar(0))) {
        throw InvalidProfileError("tariff profile diagonal must be exactly zero at country " +
                                  std::to_string(i + 1));
      }
      for (int j = 0; j < world_size_; ++j) {
        if (at(i, j) < Scalar(0)) {
          throw InvalidProfileError("negative tariff t(" + std::to_string(i + 1) + "," +
                                    std::to_string(j + 1) + ")");
        }
      }
    }
  }

  bool operator==(const TariffProfile& other) const = default;

 private:
  int world_size_ = 0;
  std::vector<Scalar> cells_;
};

}  // namespace tradebloc

#endif  // TRADEBLOC_TARIFF_PROFILE_HPP
