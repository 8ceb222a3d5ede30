#include "borel/monomial.hpp"

#include <algorithm>
#include <charconv>
#include <limits>
#include <numeric>

#include "borel/errors.hpp"

namespace borel {

namespace {

void require_same_nvars(std::size_t a, std::size_t b) {
  if (a != b) {
    throw DimensionMismatch("variable count mismatch: " + std::to_string(a) +
                            " vs " + std::to_string(b));
  }
}

Exponent checked_add(Exponent a, Exponent b) {
  Exponent out;
  if (__builtin_add_overflow(a, b, &out)) {
    throw ExponentOverflow("exponent overflow");
  }
  return out;
}

std::string_view trim(std::string_view s) {
  auto is_space = [](char c) { return c == ' ' || c == '\t' || c == '\r'; };
  while (!s.empty() && is_space(s.front())) s.remove_prefix(1);
  while (!s.empty() && is_space(s.back())) s.remove_suffix(1);
  return s;
}

// Sorts by degree, drops anything divisible by an earlier survivor, then
// restores canonical order.
std::vector<Monomial> minimalize(std::vector<Monomial> gens) {
  std::sort(gens.begin(), gens.end(), [](const Monomial& a, const Monomial& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    return a < b;
  });
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  std::vector<Monomial> kept;
  kept.reserve(gens.size());
  for (auto& g : gens) {
    bool redundant = std::any_of(kept.begin(), kept.end(),
                                 [&](const Monomial& k) { return divides(k, g); });
    if (!redundant) kept.push_back(std::move(g));
  }
  std::sort(kept.begin(), kept.end());
  return kept;
}

}  // namespace

Monomial::Monomial(std::vector<Exponent> exponents) : exps_(std::move(exponents)) {
  for (Exponent e : exps_) {
    if (e < 0) throw InvalidArgument("negative exponent");
  }
}

Monomial Monomial::unit(std::size_t nvars) {
  return Monomial(std::vector<Exponent>(nvars, 0));
}

Monomial Monomial::variable(std::size_t nvars, std::size_t var) {
  if (var < 1 || var > nvars) {
    throw InvalidArgument("variable index x" + std::to_string(var) +
                          " out of range");
  }
  std::vector<Exponent> e(nvars, 0);
  e[var - 1] = 1;
  return Monomial(std::move(e));
}

Exponent Monomial::degree() const noexcept {
  Exponent d = 0;
  for (Exponent e : exps_) d += e;
  return d;
}

bool Monomial::is_unit() const noexcept {
  return std::all_of(exps_.begin(), exps_.end(), [](Exponent e) { return e == 0; });
}

bool divides(const Monomial& a, const Monomial& b) {
  require_same_nvars(a.nvars(), b.nvars());
  for (std::size_t i = 0; i < a.nvars(); ++i) {
    if (a[i] > b[i]) return false;
  }
  return true;
}

Monomial lcm(const Monomial& a, const Monomial& b) {
  require_same_nvars(a.nvars(), b.nvars());
  std::vector<Exponent> e(a.nvars());
  for (std::size_t i = 0; i < e.size(); ++i) e[i] = std::max(a[i], b[i]);
  return Monomial(std::move(e));
}

Monomial gcd(const Monomial& a, const Monomial& b) {
  require_same_nvars(a.nvars(), b.nvars());
  std::vector<Exponent> e(a.nvars());
  for (std::size_t i = 0; i < e.size(); ++i) e[i] = std::min(a[i], b[i]);
  return Monomial(std::move(e));
}

Monomial multiply(const Monomial& a, const Monomial& b) {
  require_same_nvars(a.nvars(), b.nvars());
  std::vector<Exponent> e(a.nvars());
  for (std::size_t i = 0; i < e.size(); ++i) e[i] = checked_add(a[i], b[i]);
  return Monomial(std::move(e));
}

Monomial divide(const Monomial& b, const Monomial& a) {
  if (!divides(a, b)) {
    throw InvalidArgument(to_string(a) + " does not divide " + to_string(b));
  }
  std::vector<Exponent> e(a.nvars());
  for (std::size_t i = 0; i < e.size(); ++i) e[i] = b[i] - a[i];
  return Monomial(std::move(e));
}

std::pair<Monomial, std::size_t> radical_and_min_support(const Monomial& u) {
  if (u.is_unit()) throw InvalidArgument("unit monomial has no support");
  std::vector<Exponent> e(u.nvars(), 0);
  std::size_t first = 0;
  for (std::size_t i = 0; i < u.nvars(); ++i) {
    if (u[i] > 0) {
      e[i] = 1;
      if (first == 0) first = i + 1;
    }
  }
  return {Monomial(std::move(e)), first};
}

std::string to_string(const Monomial& m) {
  std::string out;
  for (std::size_t i = 0; i < m.nvars(); ++i) {
    if (m[i] == 0) continue;
    if (!out.empty()) out += '*';
    out += 'x';
    out += std::to_string(i + 1);
    if (m[i] > 1) {
      out += '^';
      out += std::to_string(m[i]);
    }
  }
  return out.empty() ? "1" : out;
}

Monomial parse_monomial(std::string_view text, std::size_t nvars) {
  text = trim(text);
  if (text.empty()) throw InvalidArgument("empty monomial");
  std::vector<Exponent> e(nvars, 0);
  if (text == "1") return Monomial(std::move(e));

  auto parse_uint = [&](std::string_view s, const char* what) {
    std::uint64_t v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc{} || ptr != s.data() + s.size() || s.empty()) {
      throw InvalidArgument(std::string("bad ") + what + " in '" +
                            std::string(text) + "'");
    }
    return v;
  };

  while (!text.empty()) {
    auto star = text.find('*');
    std::string_view factor = trim(text.substr(0, star));
    text = star == std::string_view::npos ? std::string_view{}
                                          : text.substr(star + 1);
    if (star != std::string_view::npos && trim(text).empty()) {
      throw InvalidArgument("dangling '*'");
    }
    if (factor.size() < 2 || factor.front() != 'x') {
      throw InvalidArgument("expected variable, got '" + std::string(factor) + "'");
    }
    auto caret = factor.find('^');
    std::uint64_t var = parse_uint(trim(factor.substr(1, caret - 1)), "variable index");
    std::uint64_t power = 1;
    if (caret != std::string_view::npos) {
      power = parse_uint(trim(factor.substr(caret + 1)), "exponent");
    }
    if (var < 1 || var > nvars) {
      throw InvalidArgument("variable x" + std::to_string(var) +
                            " outside x1..x" + std::to_string(nvars));
    }
    if (power > static_cast<std::uint64_t>(std::numeric_limits<Exponent>::max())) {
      throw ExponentOverflow("exponent too large");
    }
    e[var - 1] = checked_add(e[var - 1], static_cast<Exponent>(power));
  }
  return Monomial(std::move(e));
}

MonomialIdeal::MonomialIdeal(std::size_t nvars, std::vector<Monomial> generators)
    : nvars_(nvars) {
  for (const auto& g : generators) require_same_nvars(nvars, g.nvars());
  gens_ = minimalize(std::move(generators));
}

MonomialIdeal MonomialIdeal::zero(std::size_t nvars) { return MonomialIdeal(nvars, {}); }

MonomialIdeal MonomialIdeal::unit(std::size_t nvars) {
  return MonomialIdeal(nvars, {Monomial::unit(nvars)});
}

MonomialIdeal MonomialIdeal::principal(const Monomial& m) {
  return MonomialIdeal(m.nvars(), {m});
}

MonomialIdeal MonomialIdeal::variables(std::size_t nvars,
                                       std::span<const std::size_t> vars) {
  std::vector<Monomial> gens;
  gens.reserve(vars.size());
  for (std::size_t v : vars) gens.push_back(Monomial::variable(nvars, v));
  return MonomialIdeal(nvars, std::move(gens));
}

MonomialIdeal MonomialIdeal::variable_range(std::size_t nvars, std::size_t first,
                                            std::size_t last) {
  std::vector<Monomial> gens;
  for (std::size_t v = first; v <= last; ++v) gens.push_back(Monomial::variable(nvars, v));
  return MonomialIdeal(nvars, std::move(gens));
}

bool MonomialIdeal::is_unit() const noexcept {
  return gens_.size() == 1 && gens_.front().is_unit();
}

bool MonomialIdeal::contains(const Monomial& m) const {
  require_same_nvars(nvars_, m.nvars());
  return std::any_of(gens_.begin(), gens_.end(),
                     [&](const Monomial& g) { return divides(g, m); });
}

bool MonomialIdeal::contains(const MonomialIdeal& other) const {
  require_same_nvars(nvars_, other.nvars_);
  return std::all_of(other.gens_.begin(), other.gens_.end(),
                     [&](const Monomial& g) { return contains(g); });
}

std::vector<Exponent> MonomialIdeal::exponent_bounds() const {
  std::vector<Exponent> b(nvars_, 0);
  for (const auto& g : gens_) {
    for (std::size_t i = 0; i < nvars_; ++i) b[i] = std::max(b[i], g[i]);
  }
  return b;
}

Exponent MonomialIdeal::max_generator_degree() const noexcept {
  Exponent d = 0;
  for (const auto& g : gens_) d = std::max(d, g.degree());
  return d;
}

MonomialIdeal operator+(const MonomialIdeal& a, const MonomialIdeal& b) {
  require_same_nvars(a.nvars(), b.nvars());
  std::vector<Monomial> gens(a.generators().begin(), a.generators().end());
  gens.insert(gens.end(), b.generators().begin(), b.generators().end());
  return MonomialIdeal(a.nvars(), std::move(gens));
}

MonomialIdeal intersect(const MonomialIdeal& a, const MonomialIdeal& b) {
  require_same_nvars(a.nvars(), b.nvars());
  std::vector<Monomial> gens;
  gens.reserve(a.size() * b.size());
  for (const auto& g : a.generators()) {
    for (const auto& h : b.generators()) gens.push_back(lcm(g, h));
  }
  return MonomialIdeal(a.nvars(), std::move(gens));
}

MonomialIdeal product(const MonomialIdeal& a, const MonomialIdeal& b) {
  require_same_nvars(a.nvars(), b.nvars());
  std::vector<Monomial> gens;
  gens.reserve(a.size() * b.size());
  for (const auto& g : a.generators()) {
    for (const auto& h : b.generators()) gens.push_back(multiply(g, h));
  }
  return MonomialIdeal(a.nvars(), std::move(gens));
}

MonomialIdeal colon(const MonomialIdeal& ideal, const Monomial& g) {
  require_same_nvars(ideal.nvars(), g.nvars());
  std::vector<Monomial> gens;
  gens.reserve(ideal.size());
  for (const auto& m : ideal.generators()) gens.push_back(divide(lcm(m, g), g));
  return MonomialIdeal(ideal.nvars(), std::move(gens));
}

MonomialIdeal colon(const MonomialIdeal& ideal, const MonomialIdeal& by) {
  require_same_nvars(ideal.nvars(), by.nvars());
  if (by.is_zero()) throw InvalidArgument("colon by the zero ideal");
  auto gens = by.generators();
  MonomialIdeal out = colon(ideal, gens.front());
  for (std::size_t k = 1; k < gens.size(); ++k) out = intersect(out, colon(ideal, gens[k]));
  return out;
}

MonomialIdeal saturate(const MonomialIdeal& ideal, const MonomialIdeal& by) {
  if (by.is_zero()) throw InvalidArgument("saturation by the zero ideal");
  MonomialIdeal current = ideal;
  for (;;) {
    MonomialIdeal next = colon(current, by);
    if (next == current) return current;
    current = std::move(next);
  }
}

std::vector<Monomial> monomials_of_degree(std::size_t nvars, Exponent d) {
  if (nvars < 1) throw InvalidArgument("need at least one variable");
  if (d < 0) throw InvalidArgument("negative degree");
  std::vector<Monomial> out;
  std::vector<Exponent> e(nvars, 0);
  // Walk exponent vectors in descending lex order: fill greedily from the
  // left, then repeatedly move one unit rightwards.
  auto emit = [&](auto&& self, std::size_t pos, Exponent remaining) -> void {
    if (pos + 1 == nvars) {
      e[pos] = remaining;
      out.emplace_back(e);
      return;
    }
    for (Exponent k = remaining; k >= 0; --k) {
      e[pos] = k;
      self(self, pos + 1, remaining - k);
    }
    e[pos] = 0;
  };
  emit(emit, 0, d);
  return out;
}

std::string to_string(const MonomialIdeal& ideal) {
  std::string out;
  for (const auto& g : ideal.generators()) {
    out += to_string(g);
    out += '\n';
  }
  return out;
}

}  // namespace borel
