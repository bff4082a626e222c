#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "cyclomul/ground_field.hpp"

namespace cyclomul::detail {

// Running sums over a fixed number of lanes.
//
// An empty lane takes its first term by assignment; only later terms cost an
// addition. A sum of k terms therefore costs k - 1 additions, and a lane that
// is known to be zero never pays for being added to.
class LaneSums {
 public:
  LaneSums(const GroundField& field, std::size_t lanes) : field_(field), lanes_(lanes) {}

  void accumulate(std::size_t lane, Coord term, OpCount& count) {
    auto& slot = lanes_[lane];
    slot = slot ? field_.add(*slot, term, count) : term;
  }

  void broadcast(Coord term, OpCount& count) {
    for (std::size_t i = 0; i < lanes_.size(); ++i) accumulate(i, term, count);
  }

  // Doubles every lane. In characteristic 2 the lanes become structurally zero.
  void double_all(OpCount& count) {
    for (auto& slot : lanes_) {
      if (!slot) continue;
      if (field_.doubling_vanishes()) {
        slot.reset();
      } else {
        slot = field_.dbl(*slot, count);
      }
    }
  }

  Coord value(std::size_t lane) const { return lanes_[lane].value_or(Coord{0}); }

  std::vector<Coord> values() const {
    std::vector<Coord> out(lanes_.size());
    for (std::size_t i = 0; i < lanes_.size(); ++i) out[i] = value(i);
    return out;
  }

  std::size_t size() const { return lanes_.size(); }

 private:
  const GroundField& field_;
  std::vector<std::optional<Coord>> lanes_;
};

// Single running sum with the same assignment-first rule.
class ScalarSum {
 public:
  explicit ScalarSum(const GroundField& field) : lanes_(field, 1) {}
  void add(Coord term, OpCount& count) { lanes_.accumulate(0, term, count); }
  Coord value() const { return lanes_.value(0); }

 private:
  LaneSums lanes_;
};

}  // namespace cyclomul::detail
