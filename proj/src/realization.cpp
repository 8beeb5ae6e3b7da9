#include "cga/realization.hpp"

#include <algorithm>

#include "cga/kernels.hpp"

namespace cga {

VarSet VarSet::for_spec(const AlgebraSpec& spec) {
  spec.validate();
  VarSet v;
  const int l2 = spec.two_ell();
  auto add = [&v](std::string name) {
    v.names.push_back(std::move(name));
    return static_cast<int>(v.names.size() - 1);
  };
  v.t = add("t");
  if (spec.d == 1) {
    const int h = (l2 - 1) / 2;
    for (int j = 0; j <= h; ++j) v.x.push_back(add("x" + std::to_string(j)));
  } else {
    const int l = l2 / 2;
    for (int j = 0; j <= l; ++j) v.x.push_back(add("x" + std::to_string(j)));
    for (int j = 0; j < l; ++j) v.y.push_back(add("y" + std::to_string(j)));
  }
  v.n_vars = v.names.size();
  v.delta = add("delta");
  if (spec.d == 1) {
    v.m = add("m");
  } else {
    v.r = add("r");
    v.theta = add("theta");
  }
  if (v.names.size() > kMaxSlots) throw InvalidSpec("ell too large for the realization slot limit");
  return v;
}

Poly Poly::constant(const Rational& c) {
  Poly p;
  p.add_term(Exponents{}, c);
  return p;
}

Poly Poly::slot(int s, const Rational& c, int power) {
  Exponents e{};
  e[static_cast<std::size_t>(s)] = static_cast<std::uint8_t>(power);
  Poly p;
  p.add_term(e, c);
  return p;
}

void Poly::add_term(const Exponents& e, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Poly& Poly::operator+=(const Poly& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
  Poly out;
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      Exponents e;
      for (std::size_t i = 0; i < kMaxSlots; ++i) e[i] = static_cast<std::uint8_t>(ea[i] + eb[i]);
      out.add_term(e, ca * cb);
    }
  }
  return out;
}

bool Poly::is_parameter_only(const VarSet& vars) const {
  for (const auto& [e, c] : terms_) {
    for (std::size_t i = 0; i < vars.n_vars; ++i)
      if (e[i]) return false;
  }
  return true;
}

namespace {

std::string format_monomial(const Exponents& e, const VarSet& vars, std::size_t first,
                            std::size_t last, const char* prefix) {
  std::string s;
  for (std::size_t i = first; i < last; ++i) {
    if (!e[i]) continue;
    if (!s.empty()) s += ' ';
    s += prefix + vars.names[i];
    if (e[i] > 1) s += "^" + std::to_string(e[i]);
  }
  return s;
}

void append_term(std::string& s, const Rational& c, const std::string& body) {
  Rational mag = abs(c);
  if (s.empty()) {
    if (c < 0) s += "-";
  } else {
    s += c < 0 ? " - " : " + ";
  }
  if (body.empty()) {
    s += to_string(mag);
  } else {
    if (mag != 1) s += to_string(mag) + " ";
    s += body;
  }
}

}  // namespace

std::string Poly::format(const VarSet& vars) const {
  std::string s;
  for (const auto& [e, c] : terms_) append_term(s, c, format_monomial(e, vars, 0, vars.n_slots(), ""));
  return s.empty() ? "0" : s;
}

DiffOp DiffOp::identity() { return multiplication(Poly::constant(1)); }

DiffOp DiffOp::multiplication(const Poly& p) {
  DiffOp op;
  for (const auto& [e, c] : p.terms()) op.add_term(Key{e, Exponents{}}, c);
  return op;
}

DiffOp DiffOp::derivative(int slot, const Poly& coeff) {
  DiffOp op;
  Exponents d{};
  d[static_cast<std::size_t>(slot)] = 1;
  for (const auto& [e, c] : coeff.terms()) op.add_term(Key{e, d}, c);
  return op;
}

void DiffOp::add_term(const Key& k, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(k, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

DiffOp& DiffOp::operator+=(const DiffOp& o) {
  for (const auto& [k, c] : o.terms_) add_term(k, c);
  return *this;
}

DiffOp& DiffOp::operator-=(const DiffOp& o) {
  for (const auto& [k, c] : o.terms_) add_term(k, -c);
  return *this;
}

DiffOp& DiffOp::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [k, v] : terms_) v *= c;
  return *this;
}

std::string DiffOp::format(const VarSet& vars) const {
  std::string s;
  for (const auto& [k, c] : terms_) {
    std::string body = format_monomial(k.mult, vars, 0, vars.n_slots(), "");
    std::string d = format_monomial(k.deriv, vars, 0, vars.n_vars, "∂_");
    if (!d.empty()) body += (body.empty() ? "" : " ") + d;
    append_term(s, c, body);
  }
  return s.empty() ? "0" : s;
}

DiffOp compose(const DiffOp& a, const DiffOp& b) {
  // (x^p d^alpha)(x^q d^beta) = sum_gamma prod_i C(alpha_i, gamma_i) q_i!/(q_i-gamma_i)!
  //                              x^(p+q-gamma) d^(alpha-gamma+beta)
  DiffOp out;
  std::vector<std::size_t> active;
  std::vector<std::uint8_t> limit, gamma;
  for (const auto& [ka, ca] : a.terms()) {
    for (const auto& [kb, cb] : b.terms()) {
      active.clear();
      limit.clear();
      for (std::size_t i = 0; i < kMaxSlots; ++i) {
        std::uint8_t lim = std::min(ka.deriv[i], kb.mult[i]);
        if (lim) {
          active.push_back(i);
          limit.push_back(lim);
        }
      }
      gamma.assign(active.size(), 0);
      const Rational base = ca * cb;
      while (true) {
        DiffOp::Key k;
        Integer weight = 1;
        for (std::size_t i = 0; i < kMaxSlots; ++i) {
          k.mult[i] = static_cast<std::uint8_t>(ka.mult[i] + kb.mult[i]);
          k.deriv[i] = static_cast<std::uint8_t>(ka.deriv[i] + kb.deriv[i]);
        }
        for (std::size_t j = 0; j < active.size(); ++j) {
          const std::size_t i = active[j];
          const std::uint8_t g = gamma[j];
          if (!g) continue;
          weight *= binomial(ka.deriv[i], g);
          weight *= factorial(kb.mult[i]) / factorial(kb.mult[i] - g);
          k.mult[i] = static_cast<std::uint8_t>(k.mult[i] - g);
          k.deriv[i] = static_cast<std::uint8_t>(k.deriv[i] - g);
        }
        out.add_term(k, base * weight);
        std::size_t j = 0;
        while (j < active.size() && gamma[j] == limit[j]) gamma[j++] = 0;
        if (j == active.size()) break;
        ++gamma[j];
      }
    }
  }
  return out;
}

ScalarCheck is_parameter_scalar(const DiffOp& op, const VarSet& vars) {
  ScalarCheck out;
  for (const auto& [k, c] : op.terms()) {
    bool offending = false;
    for (std::size_t i = 0; i < vars.n_vars; ++i) {
      if (k.deriv[i] || k.mult[i]) {
        offending = true;
        break;
      }
    }
    if (offending) out.residual.add_term(k, c);
  }
  out.scalar = out.residual.is_zero();
  return out;
}

namespace {

Poly var(int slot, const Rational& c = 1, int power = 1) { return Poly::slot(slot, c, power); }

Poly monomial_t(const VarSet& v, int tpow, const Rational& c) {
  return tpow == 0 ? Poly::constant(c) : var(v.t, c, tpow);
}

DiffOp realize_d1(const AlgebraSpec& spec, const VarSet& v, const GeneratorId& g) {
  const int l2 = spec.two_ell();
  const int h = (l2 - 1) / 2;  // ell - 1/2
  auto dilation = [&] {
    DiffOp D = DiffOp::multiplication(var(v.delta));
    D += DiffOp::derivative(v.t, var(v.t, -2));
    for (int j = 0; j <= h; ++j) D += DiffOp::derivative(v.x[j], var(v.x[j], -(l2 - 2 * j)));
    return D;
  };
  switch (g.kind) {
    case GenKind::M: return DiffOp::multiplication(var(v.m));
    case GenKind::H: return DiffOp::derivative(v.t, Poly::constant(-1));
    case GenKind::D: return dilation();
    case GenKind::C: {
      DiffOp C = compose(DiffOp::multiplication(var(v.t)), dilation());
      C += DiffOp::derivative(v.t, var(v.t, 1, 2));
      Integer f = factorial(h + 1);
      C += DiffOp::multiplication(var(v.m) * var(v.x[h], Rational(f * f) / 2, 2));
      for (int j = 0; j < h; ++j) C += DiffOp::derivative(v.x[j + 1], var(v.x[j], -(l2 - j)));
      return C;
    }
    case GenKind::P: {
      const int k = g.index;
      DiffOp P;
      if (k > h) {
        Poly mult;
        for (int j = l2 - k; j <= h; ++j) {
          Rational c(binomial(k, l2 - j) * central_coefficient(spec, l2 - j));
          mult += var(v.m) * monomial_t(v, k - l2 + j, c) * var(v.x[j]);
        }
        P += DiffOp::multiplication(mult);
      }
      for (int j = 0; j <= std::min(k, h); ++j)
        P += DiffOp::derivative(v.x[j], monomial_t(v, k - j, -Rational(binomial(k, j))));
      return P;
    }
    default: break;
  }
  throw std::logic_error("unexpected generator for d=1");
}

DiffOp realize_d2(const AlgebraSpec& spec, const VarSet& v, const GeneratorId& g) {
  const int l2 = spec.two_ell();
  const int l = l2 / 2;
  auto dilation = [&] {
    DiffOp D = DiffOp::multiplication(var(v.delta));
    D += DiffOp::derivative(v.t, var(v.t, -2));
    for (int n = 0; n < l; ++n) {
      D += DiffOp::derivative(v.x[n], var(v.x[n], -2 * (l - n)));
      D += DiffOp::derivative(v.y[n], var(v.y[n], -2 * (l - n)));
    }
    return D;
  };
  switch (g.kind) {
    case GenKind::Theta: return DiffOp::multiplication(var(v.theta, -1));
    case GenKind::H: return DiffOp::derivative(v.t, Poly::constant(-1));
    case GenKind::D: return dilation();
    case GenKind::J: {
      DiffOp J = DiffOp::multiplication(var(v.r));
      for (int n = 0; n <= l; ++n) J += DiffOp::derivative(v.x[n], var(v.x[n], -1));
      for (int n = 0; n < l; ++n) J += DiffOp::derivative(v.y[n], var(v.y[n], 1));
      return J;
    }
    case GenKind::C: {
      DiffOp C = compose(DiffOp::multiplication(var(v.t)), dilation());
      C += DiffOp::derivative(v.t, var(v.t, 1, 2));
      Rational c = -l * Rational(central_coefficient(spec, l + 1));
      C += DiffOp::multiplication(var(v.theta, c) * var(v.x[l]) * var(v.y[l - 1]));
      for (int n = 0; n < l; ++n) C += DiffOp::derivative(v.x[n + 1], var(v.x[n], -(l2 - n)));
      for (int n = 0; n + 1 < l; ++n) C += DiffOp::derivative(v.y[n + 1], var(v.y[n], -(l2 - n)));
      return C;
    }
    case GenKind::Q: {
      const int n = g.index;
      DiffOp Q;
      if (n > l) {
        Poly mult;
        for (int k = 0; k <= n - l - 1; ++k) {
          Rational c = -Rational(binomial(n, k) * central_coefficient(spec, n - k));
          mult += var(v.theta) * monomial_t(v, k, c) * var(v.y[l2 - n + k]);
        }
        Q += DiffOp::multiplication(mult);
      }
      for (int k = std::max(0, n - l); k <= n; ++k)
        Q += DiffOp::derivative(v.x[n - k], monomial_t(v, k, -Rational(binomial(n, k))));
      return Q;
    }
    case GenKind::P: {
      const int n = g.index;
      DiffOp P;
      if (n >= l) {
        Poly mult;
        for (int k = 0; k <= n - l; ++k) {
          Rational c(binomial(n, k) * central_coefficient(spec, n - k));
          mult += var(v.theta) * monomial_t(v, k, c) * var(v.x[l2 - n + k]);
        }
        P += DiffOp::multiplication(mult);
      }
      for (int k = std::max(0, n - l + 1); k <= n; ++k)
        P += DiffOp::derivative(v.y[n - k], monomial_t(v, k, -Rational(binomial(n, k))));
      return P;
    }
    default: break;
  }
  throw std::logic_error("unexpected generator for d=2");
}

}  // namespace

DiffOp realize_generator(const AlgebraSpec& spec, const VarSet& vars, const GeneratorId& g) {
  return spec.d == 1 ? realize_d1(spec, vars, g) : realize_d2(spec, vars, g);
}

Realization::Realization(const LieAlgebra& alg) : alg_(alg) {
  if (!alg.spec()) throw std::invalid_argument("realization requires a conformal Galilei algebra");
  vars_ = VarSet::for_spec(*alg.spec());
  for (const auto& g : alg.basis()) images_.push_back(realize_generator(*alg.spec(), vars_, g));
}

void Realization::specialize(const std::string& name, const Rational& value) {
  auto it = std::find(vars_.names.begin(), vars_.names.end(), name);
  if (it == vars_.names.end() || vars_.is_variable(static_cast<std::size_t>(it - vars_.names.begin())))
    throw std::invalid_argument("no realization parameter named '" + name + "'");
  int slot = static_cast<int>(it - vars_.names.begin());
  for (auto& img : images_) img = substitute(img, slot, value);
}

DiffOp substitute(const DiffOp& op, int slot, const Rational& value) {
  DiffOp out;
  for (const auto& [key, coeff] : op.terms()) {
    auto k = key;
    Rational c = coeff;
    auto& e = k.mult[static_cast<std::size_t>(slot)];
    for (int i = 0; i < e; ++i) c *= value;
    e = 0;
    out.add_term(k, c);
  }
  return out;
}

DiffOp Realization::realize_word(const Word& w) const {
  DiffOp acc = DiffOp::identity();
  for (auto p : w) acc = compose(acc, image(p));
  return acc;
}

DiffOp Realization::realize(const UEAElement& a) const {
  DiffOp out;
  for (const auto& [m, c] : a.terms()) out += realize_word(m.word()) * c;
  return out;
}

std::vector<RealizationFailure> verify_realization(const Realization& rho, Exec exec) {
  return kernels::realization_bracket_failures(rho, exec);
}

}  // namespace cga
