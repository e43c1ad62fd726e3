#pragma once

#include <string>
#include <vector>

namespace floorgw {

struct Vec2 {
  int x = 0;
  int y = 0;
  friend bool operator==(const Vec2&, const Vec2&) = default;
  friend auto operator<=>(const Vec2&, const Vec2&) = default;
};

enum class Family { P2, Hirzebruch, General };

/// An h-transverse balanced collection of vectors Delta, kept as a multiset.
///
/// Vertical members (0, -1) and (0, 1) become the d_b incoming and d_t
/// outgoing unbounded edges of a floor diagram. Members with x = -1 form
/// Delta_l and members with x = +1 form Delta_r; a floor takes one of each,
/// and the only thing a floor diagram sees of that choice is the divergence
/// v_l(V)_y + v_r(V)_y.
class HTransverseDegree {
 public:
  static HTransverseDegree p2(int d);
  /// Hirzebruch surface F_k: d + kh copies of (0,-1), d of (0,1), h of (-1,0), h of (1,k).
  static HTransverseDegree hirzebruch(int k, int h, int d);
  /// Arbitrary h-transverse balanced collection; validated.
  static HTransverseDegree general(std::vector<Vec2> vectors);

  Family family() const { return family_; }
  int d_b() const { return d_b_; }
  int d_t() const { return d_t_; }
  int height() const { return static_cast<int>(left_y_.size()); }
  int size() const { return d_b_ + d_t_ + 2 * height(); }

  // Family parameters. Meaningful for P2 (degree) and Hirzebruch (k, h, d).
  int param_k() const { return k_; }
  int param_d() const { return d_; }

  std::vector<Vec2> vectors() const;
  const std::vector<int>& left_heights() const { return left_y_; }
  const std::vector<int>& right_heights() const { return right_y_; }

  /// Every distinct assignment of divergences to floors listed bottom to top,
  /// sorted lexicographically. For P2 and Hirzebruch there is exactly one.
  const std::vector<std::vector<int>>& divergence_sequences() const { return sequences_; }

  /// Largest weight any bounded edge can carry: d_b + sum over floors of max(-divergence, 0),
  /// maximized over divergence assignments.
  int flow_bound() const;

  std::string describe() const;

  friend bool operator==(const HTransverseDegree& a, const HTransverseDegree& b) {
    return a.family_ == b.family_ && a.vectors() == b.vectors();
  }

 private:
  HTransverseDegree() = default;
  void finish();

  Family family_ = Family::General;
  int k_ = 0;
  int d_ = 0;
  int d_b_ = 0;
  int d_t_ = 0;
  std::vector<int> left_y_;   // sorted
  std::vector<int> right_y_;  // sorted
  std::vector<std::vector<int>> sequences_;
};

/// g_{Delta,n} = n + 1 - |Delta|; may be negative.
int genus_for_points(const HTransverseDegree& delta, int n);
/// n = g - 1 + |Delta|. Requires g >= 0.
int points_for_genus(const HTransverseDegree& delta, int g);

}  // namespace floorgw
