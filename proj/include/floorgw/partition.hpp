#pragma once

#include <string>
#include <vector>

namespace floorgw {

/// Weakly decreasing list of positive integers.
class Partition {
 public:
  Partition() = default;
  /// Accepts parts in any order; throws DomainError on a non-positive part.
  explicit Partition(std::vector<int> parts);

  const std::vector<int>& parts() const { return parts_; }
  int size() const;                     // |mu|
  int length() const { return static_cast<int>(parts_.size()); }  // l(mu)
  int multiplicity(int part) const;     // mu_l
  int largest() const { return parts_.empty() ? 0 : parts_.front(); }
  bool empty() const { return parts_.empty(); }

  std::string str() const;

  friend bool operator==(const Partition&, const Partition&) = default;
  friend auto operator<=>(const Partition&, const Partition&) = default;

 private:
  std::vector<int> parts_;
};

}  // namespace floorgw
