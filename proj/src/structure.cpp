#include "posetkit/structure.hpp"

#include <string>

#include "posetkit/errors.hpp"

namespace posetkit {

namespace {

void require_complemented(const FinitePoset& p) {
  if (!p.has_involution()) throw MissingInvolution();
  if (!is_complementation(p)) throw NotComplemented();
}

CheckReport pair_failure(const FinitePoset& p, std::string property, std::string details, ElementId x,
                         ElementId y) {
  auto r = failed(std::move(property), std::move(details));
  r.witness_ids = {x, y};
  r.witness = {p.name(x), p.name(y)};
  return r;
}

void assert_agreement(bool a, bool b, const std::string& what) {
  if (a != b) throw InvariantViolation("equivalent forms of " + what + " disagree");
}

}  // namespace

CheckReport is_distributive_poset(const FinitePoset& p, Exec exec) {
  const std::size_t n = p.size();
  auto lower_form_fails = [&](ElementId x, ElementId y, ElementId z) {
    ElementSet lhs_arg = p.upper_cone({x, y});
    lhs_arg.insert(z);
    const ElementSet lhs = p.lower_cone(lhs_arg);
    const ElementSet rhs = closure(p, p.lower_cone({x, z}) | p.lower_cone({y, z}));
    return !(lhs == rhs);
  };
  auto upper_form_fails = [&](ElementId x, ElementId y, ElementId z) {
    ElementSet lhs_arg = p.lower_cone({x, y});
    lhs_arg.insert(z);
    const ElementSet lhs = p.upper_cone(lhs_arg);
    const ElementSet rhs = p.upper_cone(p.lower_cone(p.upper_cone({x, z}) | p.upper_cone({y, z})));
    return !(lhs == rhs);
  };
  const auto first = kernels::first_triple(n, lower_form_fails, exec);
  const auto second = kernels::first_triple(n, upper_form_fails, exec);
  assert_agreement(first.has_value(), second.has_value(), "the distributive law");
  if (!first) return passed("distributive");
  const auto [x, y, z] = *first;
  auto r = failed("distributive", "L(U(x,y),z) != LU(L(x,z),L(y,z))");
  r.witness_ids = {x, y, z};
  r.witness = {p.name(x), p.name(y), p.name(z)};
  return r;
}

CheckReport is_boolean_poset(const FinitePoset& p, Exec exec) {
  if (!p.has_involution()) throw MissingInvolution();
  auto comp = is_complementation(p);
  if (!comp) {
    comp.property = "boolean";
    comp.details = "not complemented: " + comp.details;
    return comp;
  }
  auto dist = is_distributive_poset(p, exec);
  if (!dist) {
    dist.property = "boolean";
    dist.details = "not distributive: " + dist.details;
    return dist;
  }
  return passed("boolean");
}

CheckReport is_orthomodular_poset(const FinitePoset& p, Exec exec) {
  require_complemented(p);
  const std::size_t n = p.size();
  const std::string scope =
      "identity evaluated where x^y=(x'vy')' exists; other pairs skipped";

  const auto orth = kernels::first_pair(
      n, n, [&](ElementId x, ElementId y) { return p.leq(x, p.prime(y)) && !join_of(p, x, y); }, exec);
  if (orth) {
    auto r = pair_failure(p, "orthomodular-poset", "orthogonal pair x <= y' without a join", (*orth)[0],
                          (*orth)[1]);
    r.details += "; " + scope;
    return r;
  }

  enum class Outcome { ok, skipped, missing, violated };
  auto evaluate = [&](ElementId x, ElementId y) {
    const auto dual = join_of(p, p.prime(x), p.prime(y));
    if (!dual) return Outcome::skipped;
    const ElementId m = p.prime(*dual);  // x ^ y
    const auto t = join_of(p, m, p.prime(y));
    if (!t) return Outcome::missing;
    const auto u = join_of(p, p.prime(*t), p.prime(y));  // t ^ y = (t' v y')'
    if (!u) return Outcome::missing;
    return p.prime(*u) == m ? Outcome::ok : Outcome::violated;
  };
  const auto bad = kernels::first_pair(
      n, n,
      [&](ElementId x, ElementId y) {
        const auto o = evaluate(x, y);
        return o == Outcome::missing || o == Outcome::violated;
      },
      exec);
  if (!bad) return passed("orthomodular-poset", scope);
  const auto [x, y] = *bad;
  auto r = pair_failure(p, "orthomodular-poset",
                        evaluate(x, y) == Outcome::missing ? "a required join in ((x^y)vy')^y does not exist"
                                                           : "((x^y)vy')^y != x^y",
                        x, y);
  r.details += "; " + scope;
  return r;
}

CheckReport is_orthomodular_lattice(const LatticeView& l, Exec exec) {
  const FinitePoset& p = l.poset();
  require_complemented(p);
  const std::size_t n = l.size();
  const auto identity = kernels::first_pair(
      n, n,
      [&](ElementId x, ElementId y) {
        const ElementId j = l.join(x, y);
        return l.join(l.meet(j, l.prime(y)), y) != j;
      },
      exec);
  const auto kalmbach = kernels::first_pair(
      n, n,
      [&](ElementId x, ElementId y) {
        return x != y && l.leq(x, y) && l.meet(l.prime(x), y) == l.bottom();
      },
      exec);
  assert_agreement(identity.has_value(), kalmbach.has_value(), "the orthomodular law");
  if (!identity) return passed("orthomodular-lattice");
  return pair_failure(p, "orthomodular-lattice", "x v y != ((x v y) ^ y') v y", (*identity)[0],
                      (*identity)[1]);
}

CheckReport is_orthomodular_lattice(const FinitePoset& l, Exec exec) {
  return is_orthomodular_lattice(LatticeView(l, exec), exec);
}

CheckReport is_orthomodular_lattice(const DMLattice& d, Exec exec) {
  return is_orthomodular_lattice(LatticeView(d.as_poset(exec), exec), exec);
}

CheckReport is_pseudo_orthomodular(const FinitePoset& p, Exec exec) {
  require_complemented(p);
  const std::size_t n = p.size();
  auto lower_form_fails = [&](ElementId x, ElementId y) {
    const ElementSet lxy = p.lower_cone({x, y});
    ElementSet inner = lxy;
    inner.insert(p.prime(y));
    ElementSet outer = p.upper_cone(inner);
    outer.insert(y);
    return !(p.lower_cone(outer) == lxy);
  };
  auto upper_form_fails = [&](ElementId x, ElementId y) {
    const ElementSet uxy = p.upper_cone({x, y});
    ElementSet inner = uxy;
    inner.insert(p.prime(y));
    ElementSet outer = p.lower_cone(inner);
    outer.insert(y);
    return !(p.upper_cone(outer) == uxy);
  };
  const auto first = kernels::first_pair(n, n, lower_form_fails, exec);
  const auto second = kernels::first_pair(n, n, upper_form_fails, exec);
  assert_agreement(first.has_value(), second.has_value(), "pseudo-orthomodularity");
  if (!first) return passed("pseudo-orthomodular");
  return pair_failure(p, "pseudo-orthomodular", "L(U(L(x,y),y'),y) != L(x,y)", (*first)[0], (*first)[1]);
}

namespace {

const char* kSdcReading = "meet condition read as L(C | B') = {0}";

struct SdcOutcome {
  bool lhs;  // L(C | B') = {0}
  bool rhs;  // every lower bound of C is below every upper bound of B
};

SdcOutcome evaluate_sdc(const FinitePoset& p, const ElementSet& b, const ElementSet& c) {
  const ElementSet zero = p.set_of({p.zero()});
  const bool lhs = p.lower_cone(c | p.prime_image(b)) == zero;
  const ElementSet lower_c = p.lower_cone(c);
  const ElementSet upper_b = p.upper_cone(b);
  bool rhs = true;
  lower_c.for_each([&](ElementId a) {
    if (rhs && !upper_b.is_subset_of(p.up_set(a))) rhs = false;
  });
  return {lhs, rhs};
}

CheckReport sdc_failure(const FinitePoset& p, const ElementSet& b, const ElementSet& c, std::string what) {
  auto r = failed("strongly-d-continuous", std::move(what) + "; " + kSdcReading);
  r.witness_sets = {b, c};
  r.witness = {"B=" + p.format(b), "C=" + p.format(c)};
  return r;
}

}  // namespace

CheckReport is_strongly_d_continuous(const FinitePoset& p, const DMLattice& d, Exec exec) {
  require_complemented(p);
  const std::size_t s = d.size();
  auto outcome = [&](std::size_t i, std::size_t j) {
    const ElementSet& b = d.closed_set(i);
    return evaluate_sdc(p, b, p.upper_cone(d.closed_set(j)));
  };
  const auto bad = kernels::first_pair(
      s, s,
      [&](std::size_t i, std::size_t j) {
        if (!d.includes(i, j)) return false;
        const auto o = outcome(i, j);
        if (o.rhs && !o.lhs)
          throw InvariantViolation("SDC: lower bounds below upper bounds but L(C | B') != {0}");
        return o.lhs != o.rhs;
      },
      exec);
  if (!bad) return passed("strongly-d-continuous", kSdcReading);
  const auto [i, j] = *bad;
  return sdc_failure(p, d.closed_set(i), p.upper_cone(d.closed_set(j)),
                     "L(C | B') = {0} but some lower bound of C is not below some upper bound of B");
}

CheckReport is_strongly_d_continuous(const FinitePoset& p, const CompletionOptions& options) {
  require_complemented(p);
  return is_strongly_d_continuous(p, complete(p, options), options.exec);
}

CheckReport is_strongly_d_continuous_naive(const FinitePoset& p) {
  require_complemented(p);
  const std::size_t n = p.size();
  if (n > 16) throw SizeLimitExceeded("naive SDC check is limited to 16 elements");
  auto from_mask = [&](std::uint32_t mask) {
    ElementSet s(n);
    for (std::size_t k = 0; k < n; ++k)
      if (mask >> k & 1u) s.insert(k);
    return s;
  };
  const std::uint32_t limit = std::uint32_t{1} << n;
  for (std::uint32_t cm = 0; cm < limit; ++cm) {
    const ElementSet c = from_mask(cm);
    const ElementSet lower_c = p.lower_cone(c);
    for (std::uint32_t bm = 0; bm < limit; ++bm) {
      const ElementSet b = from_mask(bm);
      if (!b.is_subset_of(lower_c)) continue;  // B <= C
      const auto o = evaluate_sdc(p, b, c);
      if (o.rhs && !o.lhs)
        throw InvariantViolation("SDC: lower bounds below upper bounds but L(C | B') != {0}");
      if (o.lhs != o.rhs)
        return sdc_failure(p, b, c, "L(C | B') = {0} but some lower bound of C is not below some upper bound of B");
    }
  }
  return passed("strongly-d-continuous", kSdcReading);
}

CheckReport finch_criterion(const FinitePoset& p, const DMLattice& d) {
  require_complemented(p);
  for (std::size_t i = 0; i < d.size(); ++i) {
    const ElementSet& z = d.closed_set(i);
    if (z.empty()) continue;
    std::optional<ElementSet> bad;
    for_each_maximal_orthogonal_subset(p, z, [&](const ElementSet& s) {
      if (!(closure(p, s) == z)) {
        bad = s;
        return false;
      }
      return true;
    });
    if (bad) {
      auto r = failed("finch", "maximal orthogonal S inside closed Z with LU(S) != Z");
      r.witness_ids = {i};
      r.witness_sets = {z, *bad};
      r.witness = {"Z=" + p.format(z), "S=" + p.format(*bad)};
      return r;
    }
  }
  return passed("finch");
}

CheckReport finch_criterion(const FinitePoset& p, const CompletionOptions& options) {
  require_complemented(p);
  return finch_criterion(p, complete(p, options));
}

CheckReport is_complement_closed_doubly_dense(const FinitePoset& l, const ElementSet& x) {
  if (!l.has_involution()) throw MissingInvolution();
  if (!is_lattice(l)) throw NotALattice();
  const std::string property = "complement-closed-doubly-dense";
  for (ElementId a = 0; a < l.size(); ++a) {
    const auto j = join_of(l, l.down_set(a) & x);
    const auto m = meet_of(l, l.up_set(a) & x);
    if (!j || *j != a || !m || *m != a) {
      auto r = failed(property, (!j || *j != a) ? "(i) a != join(L(a) & X)" : "(i) a != meet(U(a) & X)");
      r.witness_ids = {a};
      r.witness = {l.name(a)};
      return r;
    }
  }
  for (ElementId a = 0; a < l.size(); ++a) {
    if (x.contains(a) && !x.contains(l.prime(a))) {
      auto r = failed(property, "(ii) X is not closed under '");
      r.witness_ids = {a};
      r.witness = {l.name(a)};
      return r;
    }
  }
  if (!x.contains(l.zero()) || !x.contains(l.one())) return failed(property, "(iii) 0 or 1 missing from X");
  return passed(property);
}

std::optional<std::array<ElementId, 3>> find_modular_violation(const LatticeView& l, Exec exec) {
  return kernels::first_triple(
      l.size(),
      [&](ElementId x, ElementId y, ElementId z) {
        return l.leq(x, z) && l.join(x, l.meet(y, z)) != l.meet(l.join(x, y), z);
      },
      exec);
}

}  // namespace posetkit
