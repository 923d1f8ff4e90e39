#include "eil/monomial.hpp"

#include <algorithm>
#include <set>

namespace eil {

Monomial::Monomial(std::vector<Term> terms) {
  std::sort(terms.begin(), terms.end());
  for (const auto& [x, e] : terms) {
    if (e == 0) continue;
    if (!terms_.empty() && terms_.back().first == x) {
      terms_.back().second += e;
    } else {
      terms_.emplace_back(x, e);
    }
  }
}

Monomial Monomial::product_of(Variable a, Variable b) { return Monomial({{a, 1}, {b, 1}}); }

std::uint32_t Monomial::exponent(Variable x) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), Term{x, 0});
  return it != terms_.end() && it->first == x ? it->second : 0;
}

std::size_t Monomial::degree() const {
  std::size_t d = 0;
  for (const auto& t : terms_) d += t.second;
  return d;
}

bool Monomial::is_squarefree() const {
  return std::all_of(terms_.begin(), terms_.end(), [](const Term& t) { return t.second == 1; });
}

bool Monomial::divides(const Monomial& other) const {
  auto it = other.terms_.begin();
  for (const auto& [x, e] : terms_) {
    while (it != other.terms_.end() && it->first < x) ++it;
    if (it == other.terms_.end() || it->first != x || it->second < e) return false;
  }
  return true;
}

Mask Monomial::support_mask() const {
  Mask m = 0;
  for (const auto& t : terms_) {
    if (t.first >= 64) throw ResourceError("support_mask: variable id exceeds 63");
    m |= bit(t.first);
  }
  return m;
}

Monomial operator*(const Monomial& a, const Monomial& b) {
  std::vector<Monomial::Term> t = a.terms_;
  t.insert(t.end(), b.terms_.begin(), b.terms_.end());
  return Monomial(std::move(t));
}

Monomial lcm(const Monomial& a, const Monomial& b) {
  std::vector<Monomial::Term> out;
  auto i = a.terms_.begin();
  auto j = b.terms_.begin();
  while (i != a.terms_.end() || j != b.terms_.end()) {
    if (j == b.terms_.end() || (i != a.terms_.end() && i->first < j->first)) {
      out.push_back(*i++);
    } else if (i == a.terms_.end() || j->first < i->first) {
      out.push_back(*j++);
    } else {
      out.emplace_back(i->first, std::max(i->second, j->second));
      ++i;
      ++j;
    }
  }
  Monomial m;
  m.terms_ = std::move(out);
  return m;
}

bool MonomialIdeal::is_squarefree() const {
  return std::all_of(generators.begin(), generators.end(), [](const Monomial& m) { return m.is_squarefree(); });
}

std::vector<std::uint32_t> MonomialIdeal::max_exponents() const {
  std::vector<std::uint32_t> out(variables.size(), 0);
  for (const Monomial& m : generators) {
    for (const auto& [x, e] : m.terms()) {
      if (x >= out.size()) throw InputError("monomial ideal: generator uses an undeclared variable");
      out[x] = std::max(out[x], e);
    }
  }
  return out;
}

bool MonomialIdeal::contains(const Monomial& m) const {
  return std::any_of(generators.begin(), generators.end(), [&](const Monomial& g) { return g.divides(m); });
}

std::vector<Monomial> minimal_generators(std::vector<Monomial> gens) {
  auto by_degree = [](const Monomial& a, const Monomial& b) {
    const auto da = a.degree();
    const auto db = b.degree();
    return da != db ? da < db : a < b;
  };
  std::sort(gens.begin(), gens.end(), by_degree);
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  std::vector<Monomial> kept;
  for (Monomial& m : gens) {
    const bool redundant = std::any_of(kept.begin(), kept.end(), [&](const Monomial& k) { return k.divides(m); });
    if (!redundant) kept.push_back(std::move(m));
  }
  return kept;
}

MonomialIdeal edge_ideal(const Graph& g) {
  MonomialIdeal ideal;
  for (std::size_t v = 0; v < g.order(); ++v) ideal.variables.push_back("x" + std::to_string(v));
  for (const Edge& e : g.edges()) ideal.generators.push_back(Monomial::product_of(e.u, e.v));
  ideal.generators = minimal_generators(std::move(ideal.generators));
  return ideal;
}

MonomialIdeal ideal_power(const MonomialIdeal& ideal, std::size_t s, const Budget& budget) {
  if (s == 0) throw InputError("ideal_power: the exponent must be positive");
  MonomialIdeal out = ideal;
  for (std::size_t k = 2; k <= s; ++k) {
    std::set<Monomial> products;
    for (const Monomial& a : out.generators) {
      for (const Monomial& b : ideal.generators) {
        products.insert(a * b);
        if (products.size() > budget.generators) {
          throw ResourceError("ideal_power: more than " + std::to_string(budget.generators) +
                              " products at power " + std::to_string(k));
        }
      }
    }
    out.generators = minimal_generators({products.begin(), products.end()});
  }
  return out;
}

Polarization polarize(const MonomialIdeal& ideal) {
  const auto maxe = ideal.max_exponents();
  Polarization p;
  std::vector<Variable> first(maxe.size(), 0);
  for (Variable x = 0; x < maxe.size(); ++x) {
    first[x] = static_cast<Variable>(p.origin.size());
    for (std::uint32_t c = 1; c <= maxe[x]; ++c) {
      p.origin.emplace_back(x, c);
      p.ideal.variables.push_back(maxe[x] == 1 ? ideal.variables[x]
                                               : ideal.variables[x] + "_" + std::to_string(c));
    }
  }
  for (const Monomial& m : ideal.generators) {
    std::vector<Monomial::Term> t;
    for (const auto& [x, e] : m.terms()) {
      for (std::uint32_t c = 0; c < e; ++c) t.emplace_back(first[x] + c, 1);
    }
    p.ideal.generators.emplace_back(std::move(t));
  }
  p.ideal.generators = minimal_generators(std::move(p.ideal.generators));
  return p;
}

std::string to_string(const Monomial& m, const std::vector<std::string>& names) {
  if (m.is_one()) return "1";
  std::string out;
  for (const auto& [x, e] : m.terms()) {
    if (!out.empty()) out += '*';
    out += x < names.size() ? names[x] : "?" + std::to_string(x);
    if (e > 1) out += "^" + std::to_string(e);
  }
  return out;
}

}  // namespace eil
