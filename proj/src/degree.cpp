#include "floorgw/degree.hpp"

#include <algorithm>
#include <set>

#include "floorgw/errors.hpp"

namespace floorgw {

HTransverseDegree HTransverseDegree::p2(int d) {
  if (d < 1) throw DomainError("P2 degree must be >= 1, got " + std::to_string(d));
  HTransverseDegree delta;
  delta.family_ = Family::P2;
  delta.d_ = d;
  delta.d_b_ = d;
  delta.d_t_ = 0;
  delta.left_y_.assign(static_cast<std::size_t>(d), 0);
  delta.right_y_.assign(static_cast<std::size_t>(d), 1);
  delta.finish();
  return delta;
}

HTransverseDegree HTransverseDegree::hirzebruch(int k, int h, int d) {
  if (k < 0 || h < 0 || d < 0) {
    throw DomainError("Hirzebruch parameters must be nonnegative (k=" + std::to_string(k) +
                      ", h=" + std::to_string(h) + ", d=" + std::to_string(d) + ")");
  }
  if (d + k * h < 0) throw DomainError("Hirzebruch degree requires d + kh >= 0");
  if (h + d < 1) throw DomainError("Hirzebruch degree requires h + d >= 1");
  HTransverseDegree delta;
  delta.family_ = Family::Hirzebruch;
  delta.k_ = k;
  delta.d_ = d;
  delta.d_b_ = d + k * h;
  delta.d_t_ = d;
  delta.left_y_.assign(static_cast<std::size_t>(h), 0);
  delta.right_y_.assign(static_cast<std::size_t>(h), k);
  delta.finish();
  return delta;
}

HTransverseDegree HTransverseDegree::general(std::vector<Vec2> vectors) {
  if (vectors.empty()) throw DomainError("an h-transverse collection must be nonempty");
  HTransverseDegree delta;
  delta.family_ = Family::General;
  Vec2 total;
  for (const Vec2& v : vectors) {
    total.x += v.x;
    total.y += v.y;
    if (v.x == 0) {
      if (v.y == -1) ++delta.d_b_;
      else if (v.y == 1) ++delta.d_t_;
      else throw DomainError("vertical vectors must be (0,1) or (0,-1)");
    } else if (v.x == -1) {
      delta.left_y_.push_back(v.y);
    } else if (v.x == 1) {
      delta.right_y_.push_back(v.y);
    } else {
      throw DomainError("h-transverse vectors need horizontal component in {-1, 0, 1}");
    }
  }
  if (total.x != 0 || total.y != 0) throw DomainError("vectors must sum to zero");
  if (delta.left_y_.size() != delta.right_y_.size()) throw DomainError("|Delta_l| != |Delta_r|");
  delta.finish();
  return delta;
}

void HTransverseDegree::finish() {
  std::sort(left_y_.begin(), left_y_.end());
  std::sort(right_y_.begin(), right_y_.end());
  std::set<std::vector<int>> seen;
  std::vector<int> lefts = left_y_;
  do {
    std::vector<int> rights = right_y_;
    do {
      std::vector<int> seq(lefts.size());
      for (std::size_t i = 0; i < seq.size(); ++i) seq[i] = lefts[i] + rights[i];
      seen.insert(std::move(seq));
    } while (std::next_permutation(rights.begin(), rights.end()));
  } while (std::next_permutation(lefts.begin(), lefts.end()));
  sequences_.assign(seen.begin(), seen.end());
}

std::vector<Vec2> HTransverseDegree::vectors() const {
  std::vector<Vec2> out;
  out.insert(out.end(), static_cast<std::size_t>(d_b_), Vec2{0, -1});
  out.insert(out.end(), static_cast<std::size_t>(d_t_), Vec2{0, 1});
  for (int y : left_y_) out.push_back({-1, y});
  for (int y : right_y_) out.push_back({1, y});
  std::sort(out.begin(), out.end());
  return out;
}

int HTransverseDegree::flow_bound() const {
  int best = 0;
  for (const auto& seq : sequences_) {
    int deficit = 0;
    for (int div : seq) deficit += std::max(-div, 0);
    best = std::max(best, deficit);
  }
  return std::max(1, d_b_ + best);
}

std::string HTransverseDegree::describe() const {
  switch (family_) {
    case Family::P2:
      return "P2(d=" + std::to_string(d_) + ")";
    case Family::Hirzebruch:
      return "F" + std::to_string(k_) + "(h=" + std::to_string(height()) + ", d=" + std::to_string(d_) + ")";
    case Family::General:
      break;
  }
  std::string out = "General[";
  bool first = true;
  for (const Vec2& v : vectors()) {
    if (!first) out += " ";
    first = false;
    out += "(" + std::to_string(v.x) + "," + std::to_string(v.y) + ")";
  }
  return out + "]";
}

int genus_for_points(const HTransverseDegree& delta, int n) { return n + 1 - delta.size(); }

int points_for_genus(const HTransverseDegree& delta, int g) {
  if (g < 0) throw DomainError("genus must be nonnegative, got " + std::to_string(g));
  return g - 1 + delta.size();
}

}  // namespace floorgw
