#include "posetkit/lattice.hpp"

#include <atomic>
#include <string>

#include "posetkit/errors.hpp"

namespace posetkit {

LatticeView::LatticeView(FinitePoset p, Exec exec) : poset_(std::move(p)) {
  const std::size_t n = poset_.size();
  if (n == 0) throw NotALattice("empty poset is not a lattice");
  join_.assign(n * n, 0);
  meet_.assign(n * n, 0);
  std::atomic<bool> ok{true};
  kernels::for_each_index(
      n,
      [&](std::size_t a) {
        for (ElementId b = 0; b < n; ++b) {
          const auto j = join_of(poset_, a, b);
          const auto m = meet_of(poset_, a, b);
          if (!j || !m) {
            ok = false;
            return;
          }
          join_[a * n + b] = *j;
          meet_[a * n + b] = *m;
        }
      },
      exec);
  if (!ok) throw NotALattice();
}

}  // namespace posetkit
