#include "posetkit/closure.hpp"

#include <atomic>

#include "posetkit/errors.hpp"

namespace posetkit {

ElementSet closure(const FinitePoset& p, const ElementSet& s) { return p.lower_cone(p.upper_cone(s)); }

std::optional<std::size_t> DMLattice::index_of(const ElementSet& s) const {
  auto it = index_.find(s);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::optional<ElementId> DMLattice::embedded_element(std::size_t i) const { return embedded_[i]; }

std::size_t DMLattice::join(std::size_t i, std::size_t j) const {
  return index_.at(closure(base_, sets_[i] | sets_[j]));
}

std::size_t DMLattice::meet(std::size_t i, std::size_t j) const { return index_.at(sets_[i] & sets_[j]); }

std::size_t DMLattice::star(std::size_t i) const {
  if (!star_) throw MissingInvolution("completion carries no involution");
  return (*star_)[i];
}

std::string DMLattice::label(std::size_t i) const {
  if (embedded_[i]) return base_.name(*embedded_[i]);
  const ElementSet& x = sets_[i];
  std::string out = "sup(";
  bool first = true;
  x.for_each([&](ElementId m) {
    ElementSet above = base_.up_set(m) & x;
    above.erase(m);
    if (!above.empty()) return;
    if (!first) out += ',';
    out += base_.name(m);
    first = false;
  });
  return out + ")";
}

FinitePoset DMLattice::as_poset(Exec exec) const {
  const std::size_t s = size();
  std::vector<std::string> names(s);
  std::vector<ElementSet> rows(s, ElementSet(s));
  kernels::for_each_index(
      s,
      [&](std::size_t i) {
        names[i] = label(i);
        for (std::size_t j = 0; j < s; ++j)
          if (sets_[i].is_subset_of(sets_[j])) rows[i].insert(j);
      },
      exec);
  return FinitePoset::from_relation(std::move(names), std::move(rows), star_);
}

namespace {

void assert_involution_laws(const DMLattice& d, const std::vector<std::size_t>& star, Exec exec) {
  const std::size_t s = d.size();
  for (std::size_t i = 0; i < s; ++i)
    if (star[star[i]] != i) throw InvariantViolation("induced involution is not involutive at " + d.label(i));
  const FinitePoset& p = d.base();
  for (ElementId x = 0; x < p.size(); ++x)
    if (star[d.embed(x)] != d.embed(p.prime(x)))
      throw InvariantViolation("induced involution does not extend ' at " + p.name(x));
  auto bad = kernels::first_pair(
      s, s,
      [&](std::size_t i, std::size_t j) {
        return d.includes(i, j) && !d.includes(star[j], star[i]);
      },
      exec);
  if (bad)
    throw InvariantViolation("induced involution is not antitone at " + d.label((*bad)[0]) + " <= " +
                             d.label((*bad)[1]));
}

}  // namespace

DMLattice complete(const FinitePoset& p, const CompletionOptions& options) {
  DMLattice d;
  d.base_ = p;
  const std::size_t n = p.size();
  const ElementSet full = p.all();

  auto record = [&](const ElementSet& a) {
    if (d.sets_.size() >= options.max_closed_sets)
      throw SizeLimitExceeded("completion has more than " + std::to_string(options.max_closed_sets) +
                              " closed sets");
    d.index_.emplace(a, d.sets_.size());
    d.sets_.push_back(a);
  };

  // NextClosure: the lectic successor of A is LU((A & {0..i-1}) | {i}) for
  // the largest i not in A whose closure adds nothing below i.
  ElementSet a = closure(p, p.empty_set());
  record(a);
  while (!(a == full)) {
    bool advanced = false;
    for (std::size_t k = n; k-- > 0;) {
      if (a.contains(k)) continue;
      ElementSet seed = a.prefix(k);
      seed.insert(k);
      ElementSet b = closure(p, seed);
      if (b.agrees_below(a, k)) {
        a = std::move(b);
        advanced = true;
        break;
      }
    }
    if (!advanced) throw InvariantViolation("lectic enumeration stalled before reaching the full set");
    record(a);
  }

  d.embed_.resize(n);
  d.embedded_.assign(d.sets_.size(), std::nullopt);
  for (ElementId x = 0; x < n; ++x) {
    d.embed_[x] = d.index_.at(p.down_set(x));
    d.embedded_[d.embed_[x]] = x;
  }
  d.bottom_ = 0;  // closure(empty) is the lectic minimum
  d.top_ = d.sets_.size() - 1;

  if (p.has_involution() && is_antitone_involution(p)) {
    std::vector<std::size_t> star(d.sets_.size());
    for (std::size_t i = 0; i < d.sets_.size(); ++i) {
      auto idx = d.index_of(p.lower_cone(p.prime_image(d.sets_[i])));
      if (!idx) throw InvariantViolation("X* is not closed");
      star[i] = *idx;
    }
    assert_involution_laws(d, star, options.exec);
    d.star_ = std::move(star);
  }
  return d;
}

ElementSet dm_join(const DMLattice& d, const ElementSet& x, const ElementSet& y) {
  return closure(d.base(), x | y);
}

ElementSet dm_meet(const DMLattice&, const ElementSet& x, const ElementSet& y) { return x & y; }

std::vector<std::size_t> induced_involution(const DMLattice& d) {
  if (!d.has_involution()) throw MissingInvolution("base poset has no antitone involution");
  return *d.involution();
}

CheckReport check_join_meet_density(const FinitePoset& p, const DMLattice& d) {
  for (std::size_t i = 0; i < d.size(); ++i) {
    std::size_t join = d.bottom();
    std::size_t meet = d.top();
    for (ElementId x = 0; x < p.size(); ++x) {
      const std::size_t e = d.embed(x);
      if (d.includes(e, i)) join = d.join(join, e);
      if (d.includes(i, e)) meet = d.meet(meet, e);
    }
    if (join != i || meet != i) {
      auto r = failed("join-meet-density", join != i ? "not a join of embedded elements"
                                                     : "not a meet of embedded elements");
      r.witness_ids = {i};
      r.witness = {d.label(i)};
      return r;
    }
  }
  return passed("join-meet-density");
}

}  // namespace posetkit
