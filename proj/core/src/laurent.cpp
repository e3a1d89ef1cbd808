#include "bspin/laurent.hpp"

#include <string>
#include <utility>

namespace bspin {

TorusPoint::TorusPoint(std::vector<BigRat> v) : y(std::move(v)) {
  if (y.empty()) throw ValidationError("TorusPoint: needs at least one coordinate");
  for (const auto& yi : y) {
    if (yi <= 0) throw ValidationError("TorusPoint: coordinates must be > 0");
  }
}

TorusPoint TorusPoint::ones(int n) {
  return TorusPoint(std::vector<BigRat>(static_cast<std::size_t>(n), BigRat(1)));
}

LaurentPoly::LaurentPoly(int vars) : vars_(vars) {
  if (vars < 1) throw ValidationError("LaurentPoly: needs at least one variable");
}

LaurentPoly LaurentPoly::constant(int vars, BigInt c) {
  LaurentPoly p(vars);
  if (c != 0) p.terms_.emplace(ExpVec(static_cast<std::size_t>(vars), 0), std::move(c));
  return p;
}

LaurentPoly LaurentPoly::monomial(ExpVec exps, BigInt c) {
  LaurentPoly p(static_cast<int>(exps.size()));
  if (c != 0) p.terms_.emplace(std::move(exps), std::move(c));
  return p;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
  if (o.vars_ != vars_) throw ValidationError("LaurentPoly: variable count mismatch");
  for (const auto& [e, c] : o.terms_) {
    auto it = terms_.find(e);
    if (it == terms_.end()) {
      terms_.emplace(e, c);
    } else {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }
  return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.vars_ != b.vars_) throw ValidationError("LaurentPoly: variable count mismatch");
  LaurentPoly out(a.vars_);
  LaurentPoly::ExpVec e(static_cast<std::size_t>(a.vars_));
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      for (int i = 0; i < a.vars_; ++i) e[i] = ea[i] + eb[i];
      auto it = out.terms_.find(e);
      if (it == out.terms_.end()) {
        out.terms_.emplace(e, ca * cb);
      } else {
        it->second += ca * cb;
        if (it->second == 0) out.terms_.erase(it);
      }
    }
  }
  return out;
}

LaurentPoly LaurentPoly::pow(unsigned long long N) const {
  LaurentPoly result = constant(vars_, 1);
  LaurentPoly base = *this;
  while (N > 0) {
    if (N & 1ull) result = result * base;
    base = base * base;
    N >>= 1;
  }
  return result;
}

BigRat LaurentPoly::eval(const TorusPoint& pt) const {
  if (pt.vars() != vars_) throw ValidationError("LaurentPoly::eval: point rank mismatch");
  for (const auto& yi : pt.y) {
    if (yi == 0) throw ValidationError("LaurentPoly::eval: zero coordinate");
  }
  BigRat total = 0;
  for (const auto& [e, c] : terms_) {
    BigRat term(c);
    for (int i = 0; i < vars_; ++i) term *= rat_pow(pt.y[i], e[i]);
    total += term;
  }
  return total;
}

}  // namespace bspin
