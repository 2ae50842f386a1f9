/*
Copyright 2026 The thetaq Authors

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
*/
#include "thetaq/series.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

#include "thetaq/errors.hpp"

namespace thetaq {

PiSeries::PiSeries(const CyclotomicField& field, int grade, Rat trunc)
    : field_(&field), grade_(grade), trunc_(std::move(trunc)) {}

PiSeries::PiSeries(const CyclotomicField* field, int grade, Rat trunc, std::vector<Term> terms)
    : field_(field), grade_(grade), trunc_(std::move(trunc)), terms_(std::move(terms)) {}

PiSeries PiSeries::from_terms(const CyclotomicField& field, int grade, Rat trunc,
                              std::vector<Term> terms) {
  std::stable_sort(terms.begin(), terms.end(),
                   [](const Term& a, const Term& b) { return a.exponent < b.exponent; });
  std::vector<Term> merged;
  merged.reserve(terms.size());
  for (auto& t : terms) {
    if (&t.coeff.field() != &field) throw OrderMismatchError("term coefficient from another field");
    if (t.exponent >= trunc) break;
    if (!merged.empty() && merged.back().exponent == t.exponent) {
      merged.back().coeff += t.coeff;
    } else {
      merged.push_back(std::move(t));
    }
  }
  std::erase_if(merged, [](const Term& t) { return t.coeff.is_zero(); });
  return PiSeries(&field, grade, std::move(trunc), std::move(merged));
}

PiSeries PiSeries::monomial(const Cyc& c, Rat exponent, int grade, Rat trunc) {
  std::vector<Term> terms;
  terms.push_back({std::move(exponent), c});
  return from_terms(c.field(), grade, std::move(trunc), std::move(terms));
}

PiSeries PiSeries::constant(const Cyc& c, int grade, Rat trunc) {
  return monomial(c, Rat(0), grade, std::move(trunc));
}

std::optional<Rat> PiSeries::valuation() const {
  if (terms_.empty()) return std::nullopt;
  return terms_.front().exponent;
}

Cyc PiSeries::coeff(const Rat& e) const {
  if (e >= trunc_) {
    throw PrecisionError("coefficient of q^" + e.get_str() + " requested from a series known below q^" +
                         trunc_.get_str());
  }
  auto it = std::lower_bound(terms_.begin(), terms_.end(), e,
                             [](const Term& t, const Rat& x) { return t.exponent < x; });
  if (it != terms_.end() && it->exponent == e) return it->coeff;
  return field_->zero();
}

PiSeries PiSeries::truncated(const Rat& t) const {
  if (t >= trunc_) return *this;
  std::vector<Term> kept;
  for (const auto& term : terms_) {
    if (term.exponent >= t) break;
    kept.push_back(term);
  }
  return PiSeries(field_, grade_, t, std::move(kept));
}

void PiSeries::check_same_field(const PiSeries& o) const {
  if (field_ != o.field_) {
    throw OrderMismatchError("series over Q(zeta_" + std::to_string(field_->order()) +
                             ") and Q(zeta_" + std::to_string(o.field_->order()) + ") mixed");
  }
}

PiSeries PiSeries::operator-() const {
  PiSeries out = *this;
  for (auto& t : out.terms_) t.coeff = -t.coeff;
  return out;
}

PiSeries& PiSeries::operator+=(const PiSeries& o) {
  check_same_field(o);
  if (!empty() && !o.empty() && grade_ != o.grade_) {
    throw GradeMismatchError("adding series of pi-grade " + std::to_string(grade_) + " and " +
                             std::to_string(o.grade_));
  }
  const int grade = empty() ? o.grade_ : grade_;
  const Rat trunc = std::min(trunc_, o.trunc_);
  std::vector<Term> out;
  out.reserve(terms_.size() + o.terms_.size());
  auto a = terms_.begin();
  auto b = o.terms_.begin();
  auto push = [&](Term t) {
    if (t.exponent < trunc && !t.coeff.is_zero()) out.push_back(std::move(t));
  };
  while (a != terms_.end() || b != o.terms_.end()) {
    if (b == o.terms_.end() || (a != terms_.end() && a->exponent < b->exponent)) {
      push(std::move(*a++));
    } else if (a == terms_.end() || b->exponent < a->exponent) {
      push(*b++);
    } else {
      Term t{std::move(a->exponent), std::move(a->coeff)};
      t.coeff += b->coeff;
      push(std::move(t));
      ++a;
      ++b;
    }
  }
  grade_ = grade;
  trunc_ = trunc;
  terms_ = std::move(out);
  return *this;
}

PiSeries& PiSeries::operator-=(const PiSeries& o) { return *this += -o; }

PiSeries operator*(const PiSeries& a, const PiSeries& b) {
  a.check_same_field(b);
  const Rat low_a = a.empty() ? a.trunc_ : a.terms_.front().exponent;
  const Rat low_b = b.empty() ? b.trunc_ : b.terms_.front().exponent;
  const Rat trunc = std::min(a.trunc_ + low_b, b.trunc_ + low_a);

  struct Pair {
    Rat exponent;
    int i, j;
  };
  std::vector<Pair> pairs;
  for (int i = 0; i < static_cast<int>(a.terms_.size()); ++i) {
    const Rat& ea = a.terms_[i].exponent;
    for (int j = 0; j < static_cast<int>(b.terms_.size()); ++j) {
      Rat e = ea + b.terms_[j].exponent;
      if (e >= trunc) break;
      pairs.push_back({std::move(e), i, j});
    }
  }
  std::stable_sort(pairs.begin(), pairs.end(),
                   [](const Pair& x, const Pair& y) { return x.exponent < y.exponent; });

  std::vector<Term> out;
  CycProductSum sum(*a.field_);
  for (std::size_t k = 0; k < pairs.size();) {
    std::size_t end = k;
    while (end < pairs.size() && pairs[end].exponent == pairs[k].exponent) {
      sum.add(a.terms_[pairs[end].i].coeff, b.terms_[pairs[end].j].coeff);
      ++end;
    }
    Cyc c = sum.take();
    if (!c.is_zero()) out.push_back({pairs[k].exponent, std::move(c)});
    k = end;
  }
  return PiSeries(a.field_, a.grade_ + b.grade_, trunc, std::move(out));
}

PiSeries PiSeries::scaled(const Cyc& c) const {
  if (&c.field() != field_) throw OrderMismatchError("scalar from another field");
  if (c.is_zero()) return PiSeries(field_, grade_, trunc_, {});
  PiSeries out = *this;
  for (auto& t : out.terms_) t.coeff *= c;
  return out;
}

PiSeries PiSeries::scaled(const Rat& r) const {
  if (sgn(r) == 0) return PiSeries(field_, grade_, trunc_, {});
  PiSeries out = *this;
  for (auto& t : out.terms_) t.coeff *= r;
  return out;
}

PiSeries PiSeries::times_pi(int k) const {
  PiSeries out = *this;
  out.grade_ += k;
  return out;
}

PiSeries PiSeries::shifted(const Rat& e) const {
  PiSeries out = *this;
  for (auto& t : out.terms_) t.exponent += e;
  out.trunc_ += e;
  return out;
}

bool operator==(const PiSeries& a, const PiSeries& b) {
  if (a.field_ != b.field_ || a.trunc_ != b.trunc_) return false;
  if (a.terms_.size() != b.terms_.size()) return false;
  if (!a.empty() && a.grade_ != b.grade_) return false;
  for (std::size_t k = 0; k < a.terms_.size(); ++k) {
    if (a.terms_[k].exponent != b.terms_[k].exponent || a.terms_[k].coeff != b.terms_[k].coeff) {
      return false;
    }
  }
  return true;
}

// ---------------------------------------------------------------------------

PiSeries inverse(const PiSeries& a) {
  if (a.empty()) {
    throw NonInvertibleError("series has no determined nonzero term below q^" + a.trunc().get_str());
  }
  const CyclotomicField& field = a.field();
  const Rat v = a.terms().front().exponent;
  const Cyc lead_inv = a.terms().front().coeff.inverse();
  const Rat rel_trunc = a.trunc() - v;

  // a = lead q^v (1 + r); invert 1 + r by long division over the exponent
  // monoid generated by supp(r).
  std::vector<Term> r;
  for (std::size_t k = 1; k < a.terms().size(); ++k) {
    r.push_back({a.terms()[k].exponent - v, a.terms()[k].coeff * lead_inv});
  }
  std::set<Rat> support{Rat(0)};
  for (auto it = support.begin(); it != support.end(); ++it) {
    for (const auto& t : r) {
      Rat e = *it + t.exponent;
      if (e >= rel_trunc) break;
      support.insert(std::move(e));
    }
  }
  std::map<Rat, Cyc> inv;
  CycProductSum sum(field);
  for (const Rat& e : support) {
    if (sgn(e) == 0) {
      inv.emplace(e, field.one());
      continue;
    }
    for (const auto& t : r) {
      if (t.exponent > e) break;
      auto hit = inv.find(e - t.exponent);
      if (hit != inv.end()) sum.add(t.coeff, hit->second);
    }
    inv.emplace(e, -sum.take());
  }
  std::vector<Term> terms;
  terms.reserve(inv.size());
  for (auto& [e, c] : inv) {
    if (!c.is_zero()) terms.push_back({e - v, c * lead_inv});
  }
  return PiSeries::from_terms(field, -a.grade(), rel_trunc - v, std::move(terms));
}

PiSeries q_ddq(const PiSeries& a) {
  std::vector<Term> terms;
  terms.reserve(a.terms().size());
  for (const auto& t : a.terms()) {
    if (sgn(t.exponent) == 0) continue;
    terms.push_back({t.exponent, t.coeff * t.exponent});
  }
  return PiSeries::from_terms(a.field(), a.grade(), a.trunc(), std::move(terms));
}

PiSeries scale_q(const PiSeries& a, int k) {
  if (k < 1) throw std::invalid_argument("q-scaling factor must be positive");
  std::vector<Term> terms = a.terms();
  for (auto& t : terms) t.exponent *= k;
  return PiSeries::from_terms(a.field(), a.grade(), a.trunc() * k, std::move(terms));
}

PiSeries pow(const PiSeries& a, long n) {
  if (n < 0) return pow(inverse(a), -n);
  if (n == 0) {
    const Rat rel = a.empty() ? a.trunc() : a.trunc() - a.terms().front().exponent;
    return PiSeries::constant(a.field().one(), 0, rel);
  }
  std::optional<PiSeries> result;
  PiSeries base = a;
  while (true) {
    if (n & 1) result = result ? *result * base : base;
    n >>= 1;
    if (n == 0) break;
    base = base * base;
  }
  return *result;
}

ZeroTest zero_test(const PiSeries& a) {
  if (a.empty()) return {};
  return {false, a.terms().front()};
}

std::string to_string(const PiSeries& a) {
  std::ostringstream out;
  out << "pi^" << a.grade() << " * ( ";
  for (const auto& t : a.terms()) {
    const auto rational = t.coeff.as_rational();
    if (rational) {
      out << rational->get_str();
    } else {
      out << "(" << t.coeff.to_string() << ")";
    }
    out << " * q^(" << t.exponent.get_str() << ") + ";
  }
  out << "O(q^(" << a.trunc().get_str() << ")) )";
  return out.str();
}

}  // namespace thetaq
