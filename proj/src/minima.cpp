#include "minklat/minima.hpp"

#include <algorithm>
#include <stdexcept>

namespace minklat {

namespace {

// Incremental exact rank tracker: row-reduce candidates against the
// accepted set.
class RankTracker {
 public:
  explicit RankTracker(int n) : n_(n) {}
  int rank() const { return static_cast<int>(rows_.size()); }

  bool try_add(const RatVector& v) {
    RatVector w = v;
    for (size_t k = 0; k < rows_.size(); ++k) {
      if (w[piv_[k]] == 0) continue;
      Rational f = w[piv_[k]] / rows_[k][piv_[k]];
      w -= f * rows_[k];
    }
    for (int j = 0; j < n_; ++j)
      if (w[j] != 0) {
        rows_.push_back(w);
        piv_.push_back(j);
        return true;
      }
    return false;
  }

 private:
  int n_;
  std::vector<RatVector> rows_;
  std::vector<int> piv_;
};

}  // namespace

SuccessiveMinima successive_minima(const Polytope& k, const Lattice& l,
                                   const EnumerationOptions& opts) {
  if (!k.has_interior_origin())
    throw std::invalid_argument("successive_minima: origin not interior");
  if (k.dim() != l.dim())
    throw std::invalid_argument("successive_minima: dimension mismatch");
  const int n = k.dim();

  for (Rational radius = 1;; radius *= 2) {
    if (radius > Rational(Int(1) << 40))
      throw BudgetExceeded("successive_minima: radius blow-up");
    std::vector<std::pair<Rational, RatVector>> pts;
    for (auto& z : enumerate_points(k.scaled(radius), l, opts)) {
      if (z.is_zero()) continue;
      pts.emplace_back(k.gauge(z), std::move(z));
    }
    std::sort(pts.begin(), pts.end(), [](const auto& a, const auto& b) {
      if (a.first != b.first) return a.first < b.first;
      return a.second < b.second;
    });

    SuccessiveMinima sm;
    RankTracker tracker(n);
    for (auto& [g, z] : pts) {
      if (tracker.try_add(z)) {
        sm.values.push_back(g);
        sm.witnesses.push_back(z);
        if (tracker.rank() == n) return sm;
      }
    }
  }
}

}  // namespace minklat
