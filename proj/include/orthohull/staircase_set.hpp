#pragma once

// Ordered staircase of one quadrant class under rotation. Points are keyed
// by x' - y' in the class frame at a movable reference angle; along a
// staircase that key is strictly decreasing at every angle where the
// membership is fixed, so moving the reference between events never
// invalidates the order.

#include <cmath>
#include <memory>
#include <optional>
#include <set>
#include <vector>

#include "geometry.hpp"

namespace orthohull {

class KineticStaircase {
 public:
  KineticStaircase(const PointSet& ps, int quadrant_class)
      : ps_(&ps), frame_(std::make_shared<Frame>()), set_(Cmp{&ps, frame_}), k_(quadrant_class),
        where_(ps.size()), present_(ps.size(), 0) {
    set_reference(0.0);
  }
  KineticStaircase(const KineticStaircase&) = delete;
  KineticStaircase& operator=(const KineticStaircase&) = delete;
  KineticStaircase(KineticStaircase&&) = default;

  void set_reference(double theta) {
    const double phi = theta + k_ * kHalfPi;
    frame_->c = std::cos(phi);
    frame_->s = std::sin(phi);
  }

  bool contains(int id) const { return present_[static_cast<std::size_t>(id)] != 0; }
  std::size_t size() const { return set_.size(); }
  bool empty() const { return set_.empty(); }

  void insert(int id) {
    if (contains(id)) throw InternalError("staircase insertion of a present point");
    auto [it, ok] = set_.insert(id);
    if (!ok) throw InternalError("staircase key collision");
    where_[static_cast<std::size_t>(id)] = it;
    present_[static_cast<std::size_t>(id)] = 1;
  }
  void erase(int id) {
    if (!contains(id)) throw InternalError("staircase deletion of an absent point");
    set_.erase(where_[static_cast<std::size_t>(id)]);
    present_[static_cast<std::size_t>(id)] = 0;
  }

  std::optional<int> prev(int id) const {
    auto it = where_[static_cast<std::size_t>(id)];
    if (it == set_.begin()) return std::nullopt;
    return *std::prev(it);
  }
  std::optional<int> next(int id) const {
    auto it = std::next(where_[static_cast<std::size_t>(id)]);
    if (it == set_.end()) return std::nullopt;
    return *it;
  }
  std::optional<int> first() const {
    if (set_.empty()) return std::nullopt;
    return *set_.begin();
  }
  std::optional<int> last() const {
    if (set_.empty()) return std::nullopt;
    return *set_.rbegin();
  }
  /// Last member at or before `id` in staircase order (id need not be a member).
  std::optional<int> at_or_before(int id) const {
    auto it = set_.upper_bound(id);
    if (it == set_.begin()) return std::nullopt;
    return *std::prev(it);
  }
  /// Whether a and b are present and adjacent with a first.
  bool consecutive(int a, int b) const {
    if (!contains(a) || !contains(b)) return false;
    auto n = next(a);
    return n && *n == b;
  }

  std::vector<int> ordered() const { return {set_.begin(), set_.end()}; }

 private:
  struct Frame {
    double c = 1.0, s = 0.0;
  };
  struct Cmp {
    const PointSet* ps;
    std::shared_ptr<Frame> f;
    double key(int id) const {
      const Point& p = (*ps)[static_cast<std::size_t>(id)];
      return p.x * (f->c + f->s) + p.y * (f->s - f->c);
    }
    bool operator()(int a, int b) const {
      const double ka = key(a), kb = key(b);
      if (ka != kb) return ka > kb;
      return a < b;
    }
  };

  const PointSet* ps_;
  std::shared_ptr<Frame> frame_;
  std::set<int, Cmp> set_;
  int k_;
  std::vector<std::set<int, Cmp>::iterator> where_;
  std::vector<char> present_;
};

}  // namespace orthohull
