#include "borel/decomposition.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "borel/errors.hpp"

namespace borel {

namespace {

void require_proper_nonzero(const MonomialIdeal& j) {
  if (j.is_zero()) throw InvalidArgument("ideal is zero");
  if (j.is_unit()) throw InvalidArgument("ideal is the unit ideal");
}

// Index of a variable x_i with x_i | g and g ≠ x_i^{g_i}, if any.
std::optional<std::size_t> mixed_support_variable(const Monomial& g) {
  std::optional<std::size_t> first;
  for (std::size_t i = 0; i < g.nvars(); ++i) {
    if (g[i] == 0) continue;
    if (first) return first;
    first = i;
  }
  return std::nullopt;
}

void split(const MonomialIdeal& j, std::set<IrreducibleComponent>& out) {
  for (const auto& g : j.generators()) {
    auto var = mixed_support_variable(g);
    if (!var) continue;
    std::vector<Exponent> pure(g.nvars(), 0);
    pure[*var] = g[*var];
    Monomial power(std::move(pure));
    Monomial rest = divide(g, power);
    split(j + MonomialIdeal::principal(power), out);
    split(j + MonomialIdeal::principal(rest), out);
    return;
  }
  IrreducibleComponent c{std::vector<Exponent>(j.nvars(), 0)};
  for (const auto& g : j.generators()) {
    for (std::size_t i = 0; i < g.nvars(); ++i) {
      if (g[i] > 0) c.bounds[i] = g[i];
    }
  }
  out.insert(std::move(c));
}

// a ⊆ b for irreducible components.
bool component_contained(const IrreducibleComponent& a, const IrreducibleComponent& b) {
  for (std::size_t i = 0; i < a.bounds.size(); ++i) {
    if (a.bounds[i] == 0) continue;
    if (b.bounds[i] == 0 || b.bounds[i] > a.bounds[i]) return false;
  }
  return true;
}

// Visits every exponent vector in the box [0, bounds], in canonical
// (descending lex) order.
template <typename F>
void for_each_in_box(const std::vector<Exponent>& bounds, F&& visit) {
  std::vector<Exponent> e(bounds);
  for (;;) {
    visit(Monomial(e));
    std::size_t i = e.size();
    while (i > 0) {
      --i;
      if (e[i] > 0) {
        --e[i];
        for (std::size_t k = i + 1; k < e.size(); ++k) e[k] = bounds[k];
        break;
      }
      if (i == 0) return;
    }
    if (e.empty()) return;
  }
}

}  // namespace

MonomialPrime::MonomialPrime(std::size_t nvars, std::vector<std::size_t> vars)
    : nvars_(nvars), vars_(std::move(vars)) {
  std::sort(vars_.begin(), vars_.end());
  vars_.erase(std::unique(vars_.begin(), vars_.end()), vars_.end());
  for (std::size_t v : vars_) {
    if (v < 1 || v > nvars_) throw InvalidArgument("prime variable out of range");
  }
}

MonomialPrime MonomialPrime::initial_segment(std::size_t nvars, std::size_t r) {
  std::vector<std::size_t> vars(r);
  for (std::size_t i = 0; i < r; ++i) vars[i] = i + 1;
  return MonomialPrime(nvars, std::move(vars));
}

bool MonomialPrime::is_initial_segment() const noexcept {
  for (std::size_t i = 0; i < vars_.size(); ++i) {
    if (vars_[i] != i + 1) return false;
  }
  return true;
}

bool MonomialPrime::is_subset_of(const MonomialPrime& other) const {
  return std::includes(other.vars_.begin(), other.vars_.end(), vars_.begin(),
                       vars_.end());
}

MonomialIdeal MonomialPrime::ideal() const { return MonomialIdeal::variables(nvars_, vars_); }

std::string to_string(const MonomialPrime& p) {
  std::string out;
  for (std::size_t v : p.vars()) {
    if (!out.empty()) out += ',';
    out += 'x' + std::to_string(v);
  }
  return out;
}

std::optional<MonomialPrime> as_prime(const MonomialIdeal& ideal) {
  std::vector<std::size_t> vars;
  for (const auto& g : ideal.generators()) {
    if (g.degree() != 1) return std::nullopt;
    for (std::size_t i = 0; i < g.nvars(); ++i) {
      if (g[i] == 1) vars.push_back(i + 1);
    }
  }
  return MonomialPrime(ideal.nvars(), std::move(vars));
}

MonomialIdeal IrreducibleComponent::ideal() const {
  std::vector<Monomial> gens;
  for (std::size_t i = 0; i < bounds.size(); ++i) {
    if (bounds[i] == 0) continue;
    std::vector<Exponent> e(bounds.size(), 0);
    e[i] = bounds[i];
    gens.emplace_back(std::move(e));
  }
  return MonomialIdeal(bounds.size(), std::move(gens));
}

MonomialPrime IrreducibleComponent::radical() const {
  std::vector<std::size_t> vars;
  for (std::size_t i = 0; i < bounds.size(); ++i) {
    if (bounds[i] > 0) vars.push_back(i + 1);
  }
  return MonomialPrime(bounds.size(), std::move(vars));
}

std::vector<IrreducibleComponent> irreducible_decomposition(const MonomialIdeal& j) {
  require_proper_nonzero(j);
  std::set<IrreducibleComponent> all;
  split(j, all);
  std::vector<IrreducibleComponent> candidates(all.begin(), all.end());
  std::vector<IrreducibleComponent> out;
  // A component is redundant when it contains another one.
  for (std::size_t a = 0; a < candidates.size(); ++a) {
    bool redundant = false;
    for (std::size_t b = 0; b < candidates.size() && !redundant; ++b) {
      redundant = a != b && component_contained(candidates[b], candidates[a]);
    }
    if (!redundant) out.push_back(candidates[a]);
  }
  return out;
}

std::vector<MonomialPrime> associated_primes_cyclic(const MonomialIdeal& j) {
  std::set<MonomialPrime> primes;
  for (const auto& c : irreducible_decomposition(j)) primes.insert(c.radical());
  return {primes.begin(), primes.end()};
}

std::vector<AssociatedPrime> associated_primes_with_witnesses(const Subquotient& m) {
  if (m.is_zero()) throw ZeroModule("associated primes of the zero module");
  const auto& num = m.numerator();
  const auto& den = m.denominator();
  std::vector<Exponent> box = num.exponent_bounds();
  std::vector<Exponent> den_box = den.exponent_bounds();
  for (std::size_t i = 0; i < box.size(); ++i) box[i] = std::max(box[i], den_box[i]);

  std::map<MonomialPrime, Monomial> found;
  for_each_in_box(box, [&](const Monomial& cand) {
    if (!num.contains(cand) || den.contains(cand)) return;
    auto p = as_prime(colon(den, cand));
    if (!p) return;
    found.try_emplace(*p, cand);
  });
  std::vector<AssociatedPrime> out;
  out.reserve(found.size());
  for (auto& [p, w] : found) out.push_back({p, w});
  return out;
}

std::vector<MonomialPrime> associated_primes_subquotient(const Subquotient& m) {
  std::vector<MonomialPrime> out;
  for (auto& ap : associated_primes_with_witnesses(m)) out.push_back(std::move(ap.prime));
  return out;
}

std::vector<MonomialPrime> minimal_primes(const std::vector<MonomialPrime>& primes) {
  std::vector<MonomialPrime> out;
  for (const auto& p : primes) {
    bool minimal = std::none_of(primes.begin(), primes.end(), [&](const MonomialPrime& q) {
      return q != p && q.is_subset_of(p);
    });
    if (minimal && std::find(out.begin(), out.end(), p) == out.end()) out.push_back(p);
  }
  std::sort(out.begin(), out.end());
  return out;
}

int krull_dim(const Subquotient& m) {
  if (m.is_zero()) return -1;
  int dim = -1;
  for (const auto& p : associated_primes_subquotient(m)) dim = std::max(dim, p.dimension());
  return dim;
}

std::vector<PrimaryComponent> primary_decomposition(const MonomialIdeal& j) {
  std::map<MonomialPrime, MonomialIdeal> groups;
  for (const auto& c : irreducible_decomposition(j)) {
    auto radical = c.radical();
    auto it = groups.find(radical);
    if (it == groups.end()) {
      groups.emplace(std::move(radical), c.ideal());
    } else {
      it->second = intersect(it->second, c.ideal());
    }
  }
  std::vector<PrimaryComponent> out;
  for (auto& [p, q] : groups) out.push_back({p, q});
  return out;
}

MonomialIdeal schenzel_dimension_filtration(const MonomialIdeal& j, int i) {
  auto components = primary_decomposition(j);
  int dim = -1;
  for (const auto& c : components) dim = std::max(dim, c.radical.dimension());
  if (i < 0 || i > dim) {
    throw InvalidArgument("filtration index " + std::to_string(i) + " outside 0.." +
                          std::to_string(dim));
  }
  MonomialIdeal out = MonomialIdeal::unit(j.nvars());
  for (const auto& c : components) {
    if (c.radical.dimension() > i) out = intersect(out, c.ideal);
  }
  return out;
}

}  // namespace borel
