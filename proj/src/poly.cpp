#include "vfm/poly.hpp"

#include <algorithm>
#include <numeric>

#include "vfm/errors.hpp"

namespace vfm {

bool GrlexGreater::operator()(const Exponent& a, const Exponent& b) const {
  const unsigned da = total_degree(a);
  const unsigned db = total_degree(b);
  if (da != db) return da > db;
  return std::lexicographical_compare(b.begin(), b.end(), a.begin(), a.end());
}

unsigned total_degree(const Exponent& e) { return std::accumulate(e.begin(), e.end(), 0u); }

std::vector<std::string> merge_vars(const std::vector<std::string>& a,
                                    const std::vector<std::string>& b) {
  if (a == b) return a;
  std::vector<std::string> out = a;
  for (const auto& name : b) {
    if (std::find(out.begin(), out.end(), name) == out.end()) out.push_back(name);
  }
  return out;
}

void unify(Poly& a, Poly& b) {
  if (a.vars() == b.vars()) return;
  auto vars = merge_vars(a.vars(), b.vars());
  if (a.vars() != vars) a = a.with_vars(vars);
  if (b.vars() != vars) b = b.with_vars(vars);
}

std::vector<std::string> z_vars(int first, int last) {
  std::vector<std::string> out;
  for (int k = first; k <= last; ++k) out.push_back("z" + std::to_string(k));
  return out;
}

Poly Poly::constant(std::vector<std::string> vars, const ExactScalar& c) {
  Poly p(std::move(vars));
  p.add_term(Exponent(p.vars_.size(), 0), c);
  return p;
}

Poly Poly::variable(std::vector<std::string> vars, std::size_t index) {
  Poly p(std::move(vars));
  if (index >= p.vars_.size()) throw InvalidArgument("variable index out of range");
  Exponent e(p.vars_.size(), 0);
  e[index] = 1;
  p.add_term(e, ExactScalar(1));
  return p;
}

Poly Poly::variable(std::vector<std::string> vars, const std::string& name) {
  auto it = std::find(vars.begin(), vars.end(), name);
  if (it == vars.end()) throw InvalidArgument("unknown variable " + name);
  const auto index = static_cast<std::size_t>(it - vars.begin());
  return variable(std::move(vars), index);
}

Poly Poly::monomial(std::vector<std::string> vars, Exponent e, const ExactScalar& c) {
  Poly p(std::move(vars));
  if (e.size() != p.vars_.size()) throw InvalidArgument("exponent length mismatch");
  p.add_term(e, c);
  return p;
}

bool Poly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && total_degree(terms_.begin()->first) == 0);
}

ExactScalar Poly::constant_value() const {
  return coefficient(Exponent(vars_.size(), 0));
}

int Poly::degree() const {
  if (terms_.empty()) return -1;
  return static_cast<int>(total_degree(terms_.begin()->first));
}

int Poly::degree_in(std::size_t index) const {
  if (terms_.empty()) return -1;
  unsigned d = 0;
  for (const auto& [e, c] : terms_) d = std::max(d, e[index]);
  return static_cast<int>(d);
}

bool Poly::is_homogeneous() const {
  if (terms_.empty()) return true;
  const unsigned d = total_degree(terms_.begin()->first);
  return std::all_of(terms_.begin(), terms_.end(),
                     [d](const auto& t) { return total_degree(t.first) == d; });
}

bool Poly::uses_variable(std::size_t index) const {
  return std::any_of(terms_.begin(), terms_.end(),
                     [index](const auto& t) { return t.first[index] != 0; });
}

ExactScalar Poly::coefficient(const Exponent& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? ExactScalar() : it->second;
}

int Poly::var_index(const std::string& name) const {
  auto it = std::find(vars_.begin(), vars_.end(), name);
  return it == vars_.end() ? -1 : static_cast<int>(it - vars_.begin());
}

Poly Poly::with_vars(const std::vector<std::string>& vars) const {
  if (vars == vars_) return *this;
  std::vector<int> target(vars_.size(), -1);
  for (std::size_t k = 0; k < vars_.size(); ++k) {
    auto it = std::find(vars.begin(), vars.end(), vars_[k]);
    if (it != vars.end()) target[k] = static_cast<int>(it - vars.begin());
  }
  Poly out(vars);
  for (const auto& [e, c] : terms_) {
    Exponent f(vars.size(), 0);
    for (std::size_t k = 0; k < e.size(); ++k) {
      if (e[k] == 0) continue;
      if (target[k] < 0) throw InvalidArgument("variable " + vars_[k] + " dropped from ring");
      f[static_cast<std::size_t>(target[k])] = e[k];
    }
    out.terms_.emplace(std::move(f), c);
  }
  return out;
}

void Poly::add_term(const Exponent& e, const ExactScalar& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

Poly Poly::operator-() const {
  Poly out = *this;
  for (auto& [e, c] : out.terms_) c = -c;
  return out;
}

Poly& Poly::operator+=(const Poly& o) {
  if (o.vars_ != vars_) {
    Poly b = o;
    unify(*this, b);
    return *this += b;
  }
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  if (o.vars_ != vars_) {
    Poly b = o;
    unify(*this, b);
    return *this -= b;
  }
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
  if (a.vars_ != b.vars_) {
    Poly x = a;
    Poly y = b;
    unify(x, y);
    return x * y;
  }
  Poly out(a.vars_);
  Exponent e(a.vars_.size());
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      for (std::size_t k = 0; k < e.size(); ++k) e[k] = ea[k] + eb[k];
      out.add_term(e, ca * cb);
    }
  }
  return out;
}

Poly& Poly::operator*=(const Poly& o) {
  *this = *this * o;
  return *this;
}

Poly& Poly::operator*=(const ExactScalar& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, v] : terms_) v *= c;
  return *this;
}

Poly& Poly::operator/=(const ExactScalar& c) {
  for (auto& [e, v] : terms_) v /= c;
  return *this;
}

bool operator==(const Poly& a, const Poly& b) {
  if (a.vars_ == b.vars_) return a.terms_ == b.terms_;
  return (a - b).is_zero();
}

Poly Poly::pow(unsigned k) const {
  Poly result = constant(vars_, ExactScalar(1));
  Poly base = *this;
  while (k > 0) {
    if (k & 1u) result *= base;
    k >>= 1u;
    if (k > 0) base = base * base;
  }
  return result;
}

Poly Poly::derivative(std::size_t index) const {
  Poly out(vars_);
  if (index >= vars_.size()) return out;
  for (const auto& [e, c] : terms_) {
    if (e[index] == 0) continue;
    Exponent f = e;
    f[index] -= 1;
    out.add_term(f, c * ExactScalar(static_cast<long>(e[index])));
  }
  return out;
}

Poly Poly::derivative(const std::string& name) const {
  const int index = var_index(name);
  if (index < 0) return Poly(vars_);
  return derivative(static_cast<std::size_t>(index));
}

Poly Poly::shifted(const Exponent& shift) const {
  Poly out(vars_);
  for (const auto& [e, c] : terms_) {
    Exponent f = e;
    for (std::size_t k = 0; k < f.size(); ++k) f[k] += shift[k];
    out.terms_.emplace(std::move(f), c);
  }
  return out;
}

Poly Poly::monic() const {
  if (terms_.empty()) return *this;
  return *this / leading_coefficient();
}

Poly Poly::substitute(std::size_t index, const Poly& value) const {
  Poly v = value.with_vars(merge_vars(vars_, value.vars()));
  Poly out(v.vars());
  std::map<unsigned, Poly> powers;
  for (const auto& [e, c] : terms_) {
    Exponent rest(out.vars().size(), 0);
    for (std::size_t k = 0; k < e.size(); ++k) rest[k] = e[k];
    const unsigned d = rest[index];
    rest[index] = 0;
    auto it = powers.find(d);
    if (it == powers.end()) it = powers.emplace(d, v.pow(d)).first;
    out += it->second.shifted(rest) * c;
  }
  return out;
}

Poly Poly::compose(const std::vector<Poly>& values) const {
  if (values.size() != vars_.size()) throw InvalidArgument("compose: arity mismatch");
  std::vector<std::string> vars;
  for (const auto& v : values) vars = merge_vars(vars, v.vars());
  std::vector<Poly> vs;
  for (const auto& v : values) vs.push_back(v.with_vars(vars));
  Poly out(vars);
  for (const auto& [e, c] : terms_) {
    Poly term = constant(vars, c);
    for (std::size_t k = 0; k < e.size(); ++k) {
      if (e[k] > 0) term *= vs[k].pow(e[k]);
    }
    out += term;
  }
  return out;
}

std::complex<double> Poly::evaluate(std::span<const std::complex<double>> point) const {
  if (point.size() != vars_.size()) throw InvalidArgument("evaluate: point dimension mismatch");
  std::complex<double> sum = 0.0;
  for (const auto& [e, c] : terms_) {
    std::complex<double> term = c.to_complex();
    for (std::size_t k = 0; k < e.size(); ++k) {
      for (unsigned j = 0; j < e[k]; ++j) term *= point[k];
    }
    sum += term;
  }
  return sum;
}

ExactScalar Poly::evaluate(std::span<const ExactScalar> point) const {
  if (point.size() != vars_.size()) throw InvalidArgument("evaluate: point dimension mismatch");
  ExactScalar sum;
  for (const auto& [e, c] : terms_) {
    ExactScalar term = c;
    for (std::size_t k = 0; k < e.size(); ++k) {
      for (unsigned j = 0; j < e[k]; ++j) term *= point[k];
    }
    sum += term;
  }
  return sum;
}

namespace {

std::string monomial_str(const Exponent& e, const std::vector<std::string>& vars) {
  std::string out;
  for (std::size_t k = 0; k < e.size(); ++k) {
    if (e[k] == 0) continue;
    if (!out.empty()) out += "*";
    out += vars[k];
    if (e[k] > 1) out += "^" + std::to_string(e[k]);
  }
  return out;
}

}  // namespace

std::string Poly::str() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    const std::string mono = monomial_str(e, vars_);
    std::string term;
    if (mono.empty()) {
      term = c.str();
    } else if (c.is_one()) {
      term = mono;
    } else if (c == ExactScalar(-1)) {
      term = "-" + mono;
    } else {
      term = c.str() + "*" + mono;
    }
    if (first) {
      out = term;
      first = false;
    } else if (term.front() == '-') {
      out += " - " + term.substr(1);
    } else {
      out += " + " + term;
    }
  }
  return out;
}

}  // namespace vfm
