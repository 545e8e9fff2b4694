#include "germ/basis.hpp"

#include <algorithm>
#include <set>
#include <tuple>

namespace germ {

MonomialOrder MonomialOrder::global(std::vector<int> vars) {
  return MonomialOrder{Kind::GlobalDegRevLex, std::move(vars)};
}

MonomialOrder MonomialOrder::local(std::vector<int> vars) {
  return MonomialOrder{Kind::LocalNegDegRevLex, std::move(vars)};
}

bool MonomialOrder::less(const Monomial& a, const Monomial& b) const {
  int da = a.degree(), db = b.degree();
  if (da != db) return kind == Kind::LocalNegDegRevLex ? da > db : da < db;
  auto rend = priority.rend();
  if (kind == Kind::HomogenizedLocal) {
    int ta = a.exponent(priority.front()), tb = b.exponent(priority.front());
    if (ta != tb) return ta < tb;
    --rend;  // t handled; revlex runs over the x variables only
  }
  // reverse lex tie-break: scan from the lowest-priority variable; the one
  // with the larger exponent there is smaller.
  for (auto it = priority.rbegin(); it != rend; ++it) {
    int ea = a.exponent(*it), eb = b.exponent(*it);
    if (ea != eb) return ea > eb;
  }
  return false;
}

IdealPresentation::IdealPresentation(std::vector<Polynomial> gens, std::vector<int> vars)
    : ambient_vars(std::move(vars)) {
  for (auto& g : gens)
    if (!g.is_zero()) generators.push_back(std::move(g));
  for (const auto& g : generators)
    for (int v : g.variables())
      if (std::find(ambient_vars.begin(), ambient_vars.end(), v) == ambient_vars.end())
        throw InputError("generator uses variable " + variable_name(v) +
                         " outside the ambient ring");
}

namespace {

struct Term {
  Monomial mono;
  Rational coef;
};

// Terms sorted descending under the active order.
struct OrderedPoly {
  std::vector<Term> terms;

  bool zero() const { return terms.empty(); }
  const Monomial& lm() const { return terms.front().mono; }
  const Rational& lc() const { return terms.front().coef; }
  int max_degree() const {
    int d = 0;
    for (auto& t : terms) d = std::max(d, t.mono.degree());
    return d;
  }
  int ecart() const { return max_degree() - lm().degree(); }
};

OrderedPoly to_ordered(const Polynomial& p, const MonomialOrder& ord) {
  OrderedPoly r;
  for (auto& [m, c] : p.terms()) r.terms.push_back({m, c});
  std::sort(r.terms.begin(), r.terms.end(),
            [&](const Term& a, const Term& b) { return ord.less(b.mono, a.mono); });
  return r;
}

Polynomial from_ordered(const OrderedPoly& p) {
  Polynomial r;
  for (auto& t : p.terms) r.add_term(t.coef, t.mono);
  return r;
}

void make_monic(OrderedPoly& p) {
  if (p.zero() || p.lc() == 1) return;
  Rational inv = 1 / p.lc();
  for (auto& t : p.terms) t.coef *= inv;
}

// h - c * m * g, merging sorted term lists.
OrderedPoly subtract_scaled(const OrderedPoly& h, const Rational& c, const Monomial& m,
                            const OrderedPoly& g, const MonomialOrder& ord) {
  OrderedPoly r;
  r.terms.reserve(h.terms.size() + g.terms.size());
  std::size_t i = 0, j = 0;
  while (i < h.terms.size() || j < g.terms.size()) {
    if (j == g.terms.size()) {
      r.terms.push_back(h.terms[i++]);
      continue;
    }
    Monomial gm = g.terms[j].mono * m;
    if (i == h.terms.size()) {
      r.terms.push_back({gm, -(c * g.terms[j].coef)});
      ++j;
    } else if (ord.less(gm, h.terms[i].mono)) {
      r.terms.push_back(h.terms[i++]);
    } else if (ord.less(h.terms[i].mono, gm)) {
      r.terms.push_back({gm, -(c * g.terms[j].coef)});
      ++j;
    } else {
      Rational nc = h.terms[i].coef - c * g.terms[j].coef;
      if (nc != 0) r.terms.push_back({h.terms[i].mono, nc});
      ++i;
      ++j;
    }
  }
  // drop trailing zero coefficients already handled; remove exact zeros
  r.terms.erase(std::remove_if(r.terms.begin(), r.terms.end(),
                               [](const Term& t) { return t.coef == 0; }),
                r.terms.end());
  return r;
}

OrderedPoly reduce_lead(const OrderedPoly& h, const OrderedPoly& g, const MonomialOrder& ord) {
  Rational c = h.lc() / g.lc();
  Monomial m = h.lm().divide_by(g.lm());
  return subtract_scaled(h, c, m, g, ord);
}

// Mora weak normal form with the ecart trick; for a standard basis G, the
// result is zero iff f is in the ideal in the local ring.
OrderedPoly nf_mora(OrderedPoly h, const std::vector<OrderedPoly>& basis,
                    const MonomialOrder& ord) {
  std::vector<OrderedPoly> T(basis);
  while (!h.zero()) {
    const OrderedPoly* best = nullptr;
    for (auto& g : T) {
      if (!g.lm().divides(h.lm())) continue;
      if (!best || g.ecart() < best->ecart()) best = &g;
    }
    if (!best) break;
    OrderedPoly chosen = *best;  // survives growth of T
    if (chosen.ecart() > h.ecart()) T.push_back(h);
    h = reduce_lead(h, chosen, ord);
  }
  return h;
}

// Classic reduced normal form for global orders.
OrderedPoly nf_global(OrderedPoly h, const std::vector<OrderedPoly>& basis,
                      const MonomialOrder& ord) {
  OrderedPoly result;
  while (!h.zero()) {
    const OrderedPoly* red = nullptr;
    for (auto& g : basis) {
      if (g.lm().divides(h.lm())) {
        red = &g;
        break;
      }
    }
    if (red) {
      h = reduce_lead(h, *red, ord);
    } else {
      result.terms.push_back(h.terms.front());
      h.terms.erase(h.terms.begin());
    }
  }
  return result;
}

OrderedPoly nf(OrderedPoly h, const std::vector<OrderedPoly>& basis, const MonomialOrder& ord) {
  return ord.is_global() ? nf_global(std::move(h), basis, ord)
                         : nf_mora(std::move(h), basis, ord);
}

OrderedPoly spoly(const OrderedPoly& a, const OrderedPoly& b, const MonomialOrder& ord) {
  Monomial l = Monomial::lcm(a.lm(), b.lm());
  OrderedPoly s = subtract_scaled(
      OrderedPoly{}, -(Rational(1) / a.lc()), l.divide_by(a.lm()), a, ord);
  return subtract_scaled(s, Rational(1) / b.lc(), l.divide_by(b.lm()), b, ord);
}

struct PairKey {
  int deg;
  Monomial lcm;
  std::size_t i, j;
  bool operator<(const PairKey& o) const {
    if (deg != o.deg) return deg < o.deg;
    if (!(lcm == o.lcm)) return lcm < o.lcm;
    return std::tie(i, j) < std::tie(o.i, o.j);
  }
};

std::vector<OrderedPoly> buchberger(const IdealPresentation& ideal, const MonomialOrder& ord,
                                    const BasisOptions& opts) {
  std::vector<OrderedPoly> basis;
  for (auto& g : ideal.generators) {
    OrderedPoly p = to_ordered(g, ord);
    make_monic(p);
    basis.push_back(std::move(p));
  }
  // deterministic starting order
  std::sort(basis.begin(), basis.end(), [&](const OrderedPoly& a, const OrderedPoly& b) {
    return ord.less(a.lm(), b.lm());
  });

  std::set<PairKey> queue;
  auto push_pairs = [&](std::size_t j) {
    for (std::size_t i = 0; i < j; ++i) {
      Monomial l = Monomial::lcm(basis[i].lm(), basis[j].lm());
      queue.insert(PairKey{l.degree(), l, i, j});
    }
    if (queue.size() > opts.max_pairs)
      throw ResourceLimitError("standard_basis: pair queue exceeded max_pairs");
  };
  for (std::size_t j = 1; j < basis.size(); ++j) push_pairs(j);

  auto pending = [&](std::size_t a, std::size_t b) {
    if (a > b) std::swap(a, b);
    Monomial l = Monomial::lcm(basis[a].lm(), basis[b].lm());
    return queue.count(PairKey{l.degree(), l, a, b}) > 0;
  };

  while (!queue.empty()) {
    PairKey pk = *queue.begin();
    queue.erase(queue.begin());
    const OrderedPoly &a = basis[pk.i], &b = basis[pk.j];
    if (a.lm().coprime(b.lm())) continue;  // product criterion
    bool chained = false;                  // chain criterion
    for (std::size_t k = 0; k < basis.size() && !chained; ++k) {
      if (k == pk.i || k == pk.j) continue;
      if (basis[k].lm().divides(pk.lcm) && !pending(pk.i, k) && !pending(pk.j, k))
        chained = true;
    }
    if (chained) continue;
    OrderedPoly h = nf(spoly(a, b, ord), basis, ord);
    if (h.zero()) continue;
    make_monic(h);
    basis.push_back(std::move(h));
    push_pairs(basis.size() - 1);
  }
  return basis;
}

std::vector<OrderedPoly> minimalize(std::vector<OrderedPoly> basis, const MonomialOrder& ord) {
  std::vector<OrderedPoly> out;
  // ascending leading monomials so smaller ones knock out multiples
  std::sort(basis.begin(), basis.end(), [&](const OrderedPoly& a, const OrderedPoly& b) {
    return ord.less(a.lm(), b.lm());
  });
  if (!ord.is_global())
    std::reverse(basis.begin(), basis.end());  // local: "largest" is the smallest degree
  // keep an element only if no previously kept leading monomial divides it
  for (auto& g : basis) {
    bool redundant = false;
    for (auto& k : out)
      if (k.lm().divides(g.lm())) {
        redundant = true;
        break;
      }
    if (!redundant) out.push_back(std::move(g));
  }
  return out;
}

std::vector<Polynomial> finalize_basis(std::vector<OrderedPoly> basis, const MonomialOrder& ord) {
  basis = minimalize(std::move(basis), ord);
  // A unit in the (local) ring generates everything.
  for (auto& g : basis)
    if (g.lm().is_one()) return {Polynomial::constant(1)};
  if (ord.is_global()) {
    // reduced Groebner basis: tail-reduce each element against the others
    for (std::size_t i = 0; i < basis.size(); ++i) {
      std::vector<OrderedPoly> others;
      for (std::size_t j = 0; j < basis.size(); ++j)
        if (j != i) others.push_back(basis[j]);
      basis[i] = nf_global(std::move(basis[i]), others, ord);
    }
  }
  std::sort(basis.begin(), basis.end(), [&](const OrderedPoly& a, const OrderedPoly& b) {
    return ord.less(b.lm(), a.lm());
  });
  std::vector<Polynomial> out;
  for (auto& g : basis) out.push_back(from_ordered(g));
  return out;
}

Polynomial homogenize(const Polynomial& f, int t) {
  int d = f.total_degree();
  Polynomial out;
  for (auto& [m, c] : f.terms())
    out.add_term(c, m * Monomial::variable(t, d - m.degree()));
  return out;
}

// Lazard's method: the Groebner basis of the homogenized generators under
// the degree-then-t order dehomogenizes to a standard basis for the local
// order. Mora's weak normal form alone can wander through huge degrees, so
// the basis itself is always computed this way.
std::vector<OrderedPoly> local_buchberger(const IdealPresentation& ideal,
                                          const MonomialOrder& order,
                                          const BasisOptions& opts) {
  static const int t = intern_variable("@t");
  std::vector<Polynomial> hgens;
  for (auto& g : ideal.generators) {
    if (g.degree_in(t) > 0) throw InputError("variable @t is reserved");
    hgens.push_back(homogenize(g, t));
  }
  std::vector<int> hvars{t};
  hvars.insert(hvars.end(), order.priority.begin(), order.priority.end());
  MonomialOrder hord{MonomialOrder::Kind::HomogenizedLocal, hvars};
  std::vector<OrderedPoly> out;
  for (auto& g : buchberger(IdealPresentation(hgens, hvars), hord, opts)) {
    Polynomial p = from_ordered(g).substitute({{t, Polynomial::constant(1)}});
    if (!p.is_zero()) out.push_back(to_ordered(p, order));
  }
  return out;
}

}  // namespace

std::vector<Polynomial> standard_basis(const IdealPresentation& ideal,
                                       const MonomialOrder& order, const BasisOptions& opts) {
  if (ideal.generators.empty()) return {};
  if (order.kind == MonomialOrder::Kind::LocalNegDegRevLex)
    return finalize_basis(local_buchberger(ideal, order, opts), order);
  return finalize_basis(buchberger(ideal, order, opts), order);
}

Polynomial normal_form(const Polynomial& f, const std::vector<Polynomial>& basis,
                       const MonomialOrder& order) {
  std::vector<OrderedPoly> b;
  for (auto& g : basis)
    if (!g.is_zero()) b.push_back(to_ordered(g, order));
  return from_ordered(nf(to_ordered(f, order), b, order));
}

bool basis_contains_unit(const std::vector<Polynomial>& basis) {
  for (auto& g : basis)
    if (g.is_unit()) return true;
  return false;
}

namespace {

QuotientDimension count_staircase(const std::vector<Polynomial>& basis,
                                  const std::vector<int>& vars, const MonomialOrder& ord) {
  QuotientDimension q;
  if (basis_contains_unit(basis)) {
    q.finite = true;
    q.value = 0;
    return q;
  }
  if (basis.empty()) return q;  // zero ideal: infinite (or the whole field if no vars)

  std::vector<Monomial> leads;
  for (auto& g : basis) {
    // leading monomial under ord
    const Monomial* lm = nullptr;
    for (auto& [m, c] : g.terms())
      if (!lm || ord.less(*lm, m)) lm = &m;
    leads.push_back(*lm);
  }
  // finite iff every ambient variable has a pure power among the leads
  std::vector<int> bound(vars.size(), -1);
  for (std::size_t i = 0; i < vars.size(); ++i)
    for (auto& l : leads)
      if (l.is_pure_power_of(vars[i]) || l.is_one()) {
        int e = l.exponent(vars[i]);
        if (bound[i] < 0 || e < bound[i]) bound[i] = e;
      }
  for (int b : bound)
    if (b < 0) return q;  // infinite

  // enumerate monomials under the staircase
  std::vector<int> exps(vars.size(), 0);
  std::vector<Monomial> standard;
  auto divisible = [&](const Monomial& m) {
    for (auto& l : leads)
      if (l.divides(m)) return true;
    return false;
  };
  // odometer over [0,bound)
  while (true) {
    Monomial m;
    for (std::size_t i = 0; i < vars.size(); ++i)
      m = m * Monomial::variable(vars[i], exps[i]);
    if (!divisible(m)) standard.push_back(m);
    std::size_t i = 0;
    while (i < vars.size()) {
      if (++exps[i] < bound[i]) break;
      exps[i] = 0;
      ++i;
    }
    if (i == vars.size()) break;
  }
  q.finite = true;
  q.value = static_cast<long>(standard.size());
  std::sort(standard.begin(), standard.end());
  q.staircase = std::move(standard);
  return q;
}

}  // namespace

QuotientDimension local_quotient_dim(const IdealPresentation& ideal, const BasisOptions& opts) {
  if (ideal.ambient_vars.empty()) {
    QuotientDimension q;
    q.finite = true;
    q.value = ideal.generators.empty() ? 1 : 0;
    if (q.value == 1) q.staircase.push_back(Monomial());
    return q;
  }
  MonomialOrder ord = MonomialOrder::local(ideal.ambient_vars);
  auto basis = standard_basis(ideal, ord, opts);
  return count_staircase(basis, ideal.ambient_vars, ord);
}

QuotientDimension global_quotient_dim(const IdealPresentation& ideal, const BasisOptions& opts) {
  if (ideal.ambient_vars.empty()) {
    QuotientDimension q;
    q.finite = true;
    q.value = ideal.generators.empty() ? 1 : 0;
    if (q.value == 1) q.staircase.push_back(Monomial());
    return q;
  }
  MonomialOrder ord = MonomialOrder::global(ideal.ambient_vars);
  auto basis = standard_basis(ideal, ord, opts);
  return count_staircase(basis, ideal.ambient_vars, ord);
}

bool is_zero_dim_at_origin(const IdealPresentation& ideal, const BasisOptions& opts) {
  return local_quotient_dim(ideal, opts).finite;
}

}  // namespace germ
