#include "posetkit/residuation.hpp"

#include <stdexcept>

#include "posetkit/errors.hpp"

namespace posetkit {

std::string to_string(OperatorKind kind) {
  switch (kind) {
    case OperatorKind::boolean: return "boolean";
    case OperatorKind::relpseudo: return "relpseudo";
    case OperatorKind::pseudo_om: return "pseudo_om";
    case OperatorKind::custom: return "custom";
  }
  return "custom";
}

std::optional<OperatorKind> parse_operator_kind(std::string_view text) {
  if (text == "boolean") return OperatorKind::boolean;
  if (text == "relpseudo") return OperatorKind::relpseudo;
  if (text == "pseudo_om" || text == "pseudo-om") return OperatorKind::pseudo_om;
  if (text == "custom") return OperatorKind::custom;
  return std::nullopt;
}

std::optional<ElementId> relative_pseudocomplement(const FinitePoset& p, ElementId a, ElementId b) {
  const ElementSet below_b = p.down_set(b);
  ElementSet candidates(p.size());
  for (ElementId c = 0; c < p.size(); ++c)
    if (p.lower_cone({a, c}).is_subset_of(below_b)) candidates.insert(c);
  std::optional<ElementId> greatest;
  candidates.for_each([&](ElementId c) {
    if (!greatest && candidates.is_subset_of(p.down_set(c))) greatest = c;
  });
  return greatest;
}

namespace {

std::vector<ElementId> relpseudo_table(const FinitePoset& p, Exec exec) {
  const std::size_t n = p.size();
  std::vector<ElementId> table(n * n, n);
  kernels::for_each_index(
      n,
      [&](std::size_t a) {
        for (ElementId b = 0; b < n; ++b)
          if (auto c = relative_pseudocomplement(p, a, b)) table[a * n + b] = *c;
      },
      exec);
  for (std::size_t k = 0; k < n * n; ++k)
    if (table[k] == n) {
      const ElementId a = k / n, b = k % n;
      throw NoRelativePseudocomplement(a, b, "no relative pseudocomplement of '" + p.name(a) +
                                                 "' with respect to '" + p.name(b) + "'");
    }
  return table;
}

}  // namespace

OperatorPair operator_pair(const FinitePoset& p, OperatorKind kind, Exec exec) {
  const std::size_t n = p.size();
  OperatorPair pair;
  pair.kind = kind;
  pair.n = n;
  pair.multiply.assign(n * n, p.empty_set());
  pair.residuum.assign(n * n, p.empty_set());

  switch (kind) {
    case OperatorKind::boolean:
    case OperatorKind::pseudo_om: {
      if (!p.has_involution()) throw MissingInvolution();
      pair.negation = *p.involution();
      const bool boolean = kind == OperatorKind::boolean;
      kernels::for_each_index(
          n,
          [&](std::size_t x) {
            const ElementId xp = p.prime(x);
            for (ElementId y = 0; y < n; ++y) {
              const ElementId yp = p.prime(y);
              if (boolean) {
                pair.multiply[x * n + y] = p.lower_cone({x, y});
                pair.residuum[x * n + y] = p.lower_cone(p.upper_cone({xp, y}));
              } else {
                ElementSet m_arg = p.upper_cone({x, yp});
                m_arg.insert(y);
                pair.multiply[x * n + y] = p.lower_cone(m_arg);
                ElementSet r_arg = p.lower_cone({x, y});
                r_arg.insert(xp);
                pair.residuum[x * n + y] = closure(p, r_arg);
              }
            }
          },
          exec);
      break;
    }
    case OperatorKind::relpseudo: {
      const ElementId zero = p.zero();
      const auto star = relpseudo_table(p, exec);
      pair.negation.resize(n);
      for (ElementId x = 0; x < n; ++x) {
        pair.negation[x] = star[x * n + zero];
        for (ElementId y = 0; y < n; ++y) {
          pair.multiply[x * n + y] = p.lower_cone({x, y});
          pair.residuum[x * n + y] = p.down_set(star[x * n + y]);
        }
      }
      break;
    }
    case OperatorKind::custom:
      throw std::invalid_argument("use custom_operator_pair for custom operators");
  }
  return pair;
}

OperatorPair custom_operator_pair(const FinitePoset& p, const SetOperator& m, const SetOperator& r) {
  if (!p.has_involution()) throw MissingInvolution();
  const std::size_t n = p.size();
  OperatorPair pair;
  pair.kind = OperatorKind::custom;
  pair.n = n;
  pair.negation = *p.involution();
  pair.multiply.reserve(n * n);
  pair.residuum.reserve(n * n);
  for (ElementId x = 0; x < n; ++x)
    for (ElementId y = 0; y < n; ++y) {
      pair.multiply.push_back(m(x, y));
      pair.residuum.push_back(r(x, y));
    }
  return pair;
}

CheckReport verify_operator_left_residuation(const FinitePoset& p, const OperatorPair& pair, Exec exec) {
  const std::size_t n = p.size();
  if (pair.n != n) throw std::invalid_argument("operator pair does not match the poset size");
  const ElementId zero = p.zero();
  const ElementId one = p.one();
  const ElementSet everything = p.all();

  const auto axiom1 = kernels::first_index(
      n,
      [&](ElementId x) { return !(pair.m(x, one) == p.down_set(x)) || !(pair.m(one, x) == p.down_set(x)); },
      exec);
  const auto axiom2 = kernels::first_triple(
      n,
      [&](ElementId x, ElementId y, ElementId z) {
        return pair.m(x, y).is_subset_of(p.down_set(z)) != p.down_set(x).is_subset_of(pair.r(y, z));
      },
      exec);
  const auto axiom3 = kernels::first_index(
      n, [&](ElementId x) { return !(pair.r(x, zero) == p.down_set(pair.negation[x])); }, exec);
  const auto derived = kernels::first_pair(
      n, n, [&](ElementId x, ElementId y) { return (pair.r(x, y) == everything) != p.leq(x, y); }, exec);

  if (!axiom1 && !axiom2 && !axiom3 && !derived) return passed("operator-left-residuation");

  std::string failures;
  auto note = [&](const std::string& what) {
    if (!failures.empty()) failures += "; ";
    failures += what;
  };
  if (axiom1) note("M(x,1) = M(1,x) = L(x) fails");
  if (axiom2) note("M(x,y) <= L(z) iff L(x) <= R(y,z) fails");
  if (axiom3) note("R(x,0) = L(x') fails");
  if (derived) note("R(x,y) = P iff x <= y fails");
  auto r = failed("operator-left-residuation", failures);
  if (axiom1) {
    r.witness_ids = {*axiom1};
  } else if (axiom2) {
    r.witness_ids = {(*axiom2)[0], (*axiom2)[1], (*axiom2)[2]};
  } else if (axiom3) {
    r.witness_ids = {*axiom3};
  } else {
    r.witness_ids = {(*derived)[0], (*derived)[1]};
  }
  for (auto id : r.witness_ids) r.witness.push_back(p.name(id));
  return r;
}

std::vector<std::size_t> star_on_dm(const DMLattice& d, Exec exec) {
  const FinitePoset& p = d.base();
  const std::size_t n = p.size();
  const std::size_t s = d.size();
  const auto star = relpseudo_table(p, exec);
  std::vector<std::size_t> table(s * s);
  kernels::for_each_index(
      s,
      [&](std::size_t i) {
        const ElementSet& x = d.closed_set(i);
        for (std::size_t j = 0; j < s; ++j) {
          const ElementSet upper = p.upper_cone(d.closed_set(j));
          ElementSet acc = p.all();
          x.for_each([&](ElementId a) {
            upper.for_each([&](ElementId b) { acc &= p.down_set(star[a * n + b]); });
          });
          auto idx = d.index_of(acc);
          if (!idx) throw InvariantViolation("X (*) Y is not a closed set");
          table[i * s + j] = *idx;
        }
      },
      exec);
  // X (*) Y must be the greatest W with X ^ W <= Y.
  const auto bad = kernels::first_triple(
      s,
      [&](std::size_t x, std::size_t y, std::size_t w) {
        return d.includes(d.meet(x, w), y) != d.includes(w, table[x * s + y]);
      },
      exec);
  if (bad) throw InvariantViolation("(*) is not the relative pseudocomplement of the completion");
  return table;
}

ResiduatedOps lattice_transform(const LatticeView& l, OperatorKind kind) {
  const std::size_t n = l.size();
  ResiduatedOps ops;
  ops.kind = kind;
  ops.n = n;
  ops.odot.resize(n * n);
  ops.arrow.resize(n * n);
  std::vector<ElementId> star;
  if (kind == OperatorKind::relpseudo) star = relpseudo_table(l.poset(), Exec::serial);
  for (ElementId x = 0; x < n; ++x)
    for (ElementId y = 0; y < n; ++y) {
      switch (kind) {
        case OperatorKind::boolean:
          ops.odot[x * n + y] = l.meet(x, y);
          ops.arrow[x * n + y] = l.join(l.prime(x), y);
          break;
        case OperatorKind::relpseudo:
          ops.odot[x * n + y] = l.meet(x, y);
          ops.arrow[x * n + y] = star[x * n + y];
          break;
        case OperatorKind::pseudo_om:
          ops.odot[x * n + y] = l.meet(l.join(x, l.prime(y)), y);
          ops.arrow[x * n + y] = l.join(l.meet(x, y), l.prime(x));
          break;
        case OperatorKind::custom:
          throw std::invalid_argument("custom kind has no lattice transform");
      }
    }
  return ops;
}

ResiduatedOps bdm_transform(const DMLattice& d, OperatorKind kind, Exec exec) {
  if (kind == OperatorKind::relpseudo) {
    const std::size_t s = d.size();
    ResiduatedOps ops;
    ops.kind = kind;
    ops.n = s;
    ops.arrow = star_on_dm(d, exec);
    ops.odot.resize(s * s);
    for (std::size_t i = 0; i < s; ++i)
      for (std::size_t j = 0; j < s; ++j) ops.odot[i * s + j] = d.meet(i, j);
    return ops;
  }
  if (!d.has_involution()) throw MissingInvolution("completion carries no involution");
  return lattice_transform(LatticeView(d.as_poset(exec), exec), kind);
}

ResiduationVerdict verify_left_residuated_lattice(const LatticeView& l, const ResiduatedOps& ops, Exec exec) {
  const std::size_t n = l.size();
  if (ops.n != n) throw std::invalid_argument("operation tables do not match the lattice size");
  const ElementId one = l.top();
  ResiduationVerdict v;

  const auto unit = kernels::first_index(
      n, [&](ElementId x) { return ops.mul(x, one) != x || ops.mul(one, x) != x; }, exec);
  const auto adjunction = kernels::first_triple(
      n,
      [&](ElementId x, ElementId y, ElementId z) { return l.leq(ops.mul(x, y), z) != l.leq(x, ops.imp(y, z)); },
      exec);
  if (unit) {
    v.left_residuated = failed("left-residuated", "x.1 = x = 1.x fails");
    v.left_residuated.witness_ids = {*unit};
  } else if (adjunction) {
    v.left_residuated = failed("left-residuated", "x.y <= z iff x <= y->z fails");
    v.left_residuated.witness_ids = {(*adjunction)[0], (*adjunction)[1], (*adjunction)[2]};
  } else {
    v.left_residuated = passed("left-residuated");
  }
  for (auto id : v.left_residuated.witness_ids) v.left_residuated.witness.push_back(l.name(id));

  const auto noncommuting = kernels::first_pair(
      n, n, [&](ElementId x, ElementId y) { return ops.mul(x, y) != ops.mul(y, x); }, exec);
  if (noncommuting) {
    v.commutative = failed("commutative", "x.y != y.x");
    v.commutative.witness_ids = {(*noncommuting)[0], (*noncommuting)[1]};
    for (auto id : v.commutative.witness_ids) v.commutative.witness.push_back(l.name(id));
  } else {
    v.commutative = passed("commutative");
  }

  const auto nonassoc = kernels::first_triple(
      n,
      [&](ElementId x, ElementId y, ElementId z) {
        return ops.mul(ops.mul(x, y), z) != ops.mul(x, ops.mul(y, z));
      },
      exec);
  if (nonassoc) {
    v.associative = failed("associative", "(x.y).z != x.(y.z)");
    v.associative.witness_ids = {(*nonassoc)[0], (*nonassoc)[1], (*nonassoc)[2]};
    for (auto id : v.associative.witness_ids) v.associative.witness.push_back(l.name(id));
  } else {
    v.associative = passed("associative");
  }
  return v;
}

}  // namespace posetkit
