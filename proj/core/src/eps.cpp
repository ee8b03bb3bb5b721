#include "pqs/eps.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "pqs/errors.hpp"

namespace pqs {

InfTower::InfTower(std::vector<std::string> names) : names_(std::move(names)) {
  std::set<std::string> seen(names_.begin(), names_.end());
  require(seen.size() == names_.size(), ErrorKind::Domain, "infinitesimal names must be distinct");
}

int InfTower::find(const std::string& name) const {
  for (std::size_t i = 0; i < names_.size(); ++i)
    if (names_[i] == name) return static_cast<int>(i);
  return -1;
}

TowerPtr make_tower(std::vector<std::string> names) {
  return std::make_shared<const InfTower>(std::move(names));
}

std::size_t tower_size(const TowerPtr& t) { return t ? t->size() : 0; }

bool same_tower(const TowerPtr& a, const TowerPtr& b) {
  if (a == b) return true;
  if (tower_size(a) != tower_size(b)) return false;
  if (tower_size(a) == 0) return true;
  return *a == *b;
}

TowerPtr shorten(const TowerPtr& t, std::size_t count) {
  std::size_t n = tower_size(t);
  require(count <= n, ErrorKind::Dimension, "cannot drop more infinitesimals than the tower holds");
  if (count == 0) return t;
  std::vector<std::string> names(t->names().begin(), t->names().end() - static_cast<long>(count));
  return make_tower(std::move(names));
}

TowerPtr extend(const TowerPtr& t, const std::vector<std::string>& extra) {
  std::vector<std::string> names = t ? t->names() : std::vector<std::string>{};
  names.insert(names.end(), extra.begin(), extra.end());
  return make_tower(std::move(names));
}

Cmp mono_cmp(const Exps& a, const Exps& b) {
  require(a.size() == b.size(), ErrorKind::Dimension, "order vectors of different length");
  for (std::size_t i = a.size(); i-- > 0;) {
    if (a[i] < b[i]) return Cmp::GT;
    if (a[i] > b[i]) return Cmp::LT;
  }
  return Cmp::EQ;
}

Cmp mono_cmp(const OrderVec& a, const OrderVec& b) { return mono_cmp(a.exponents, b.exponents); }

// ---------------------------------------------------------------------------

EpsScalar::EpsScalar(const Rat& c) {
  if (!pqs::is_zero(c)) terms_.emplace_back(Exps{}, c);
}

EpsScalar::EpsScalar(const Rat& c, TowerPtr tower) : tower_(std::move(tower)) {
  if (!pqs::is_zero(c)) terms_.emplace_back(Exps(tower_size(tower_), 0), c);
}

EpsScalar::EpsScalar(TowerPtr tower, std::vector<Term> terms)
    : tower_(std::move(tower)), terms_(std::move(terms)) {
  for (const auto& t : terms_)
    require(t.first.size() == tower_size(tower_), ErrorKind::Dimension,
            "exponent tuple length differs from tower length");
  normalize();
}

EpsScalar EpsScalar::eps(TowerPtr tower, std::size_t i, int power) {
  require(i < tower_size(tower), ErrorKind::Dimension, "tower position out of range");
  Exps e(tower_size(tower), 0);
  e[i] = power;
  return monomial(std::move(tower), std::move(e), Rat(1));
}

EpsScalar EpsScalar::monomial(TowerPtr tower, Exps e, const Rat& c) {
  EpsScalar r;
  r.tower_ = std::move(tower);
  require(e.size() == tower_size(r.tower_), ErrorKind::Dimension, "exponent length mismatch");
  if (!pqs::is_zero(c)) r.terms_.emplace_back(std::move(e), c);
  return r;
}

void EpsScalar::normalize() {
  std::sort(terms_.begin(), terms_.end(),
            [](const Term& a, const Term& b) { return a.first < b.first; });
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (auto& t : terms_) {
    if (!out.empty() && out.back().first == t.first) {
      out.back().second += t.second;
    } else {
      if (!out.empty() && pqs::is_zero(out.back().second)) out.pop_back();
      out.push_back(std::move(t));
    }
  }
  if (!out.empty() && pqs::is_zero(out.back().second)) out.pop_back();
  terms_ = std::move(out);
}

bool EpsScalar::is_rational() const {
  for (const auto& t : terms_)
    for (int e : t.first)
      if (e != 0) return false;
  return true;
}

Rat EpsScalar::rational() const {
  require(is_rational(), ErrorKind::Domain, "scalar depends on infinitesimals: " + to_string());
  return terms_.empty() ? Rat(0) : terms_.front().second;
}

int EpsScalar::degree_in(std::size_t i) const {
  int d = -1;
  for (const auto& t : terms_) d = std::max(d, t.first.at(i));
  return d;
}

int EpsScalar::min_degree_in(std::size_t i) const {
  int d = -1;
  for (const auto& t : terms_) d = (d < 0) ? t.first.at(i) : std::min(d, t.first.at(i));
  return d;
}

EpsScalar EpsScalar::lifted(const TowerPtr& to) const {
  std::size_t from = tower_len();
  std::size_t n = tower_size(to);
  if (from == n) {
    require(same_tower(tower_, to), ErrorKind::Dimension, "incompatible infinitesimal towers");
    EpsScalar r = *this;
    r.tower_ = to;
    return r;
  }
  require(from < n, ErrorKind::Dimension, "cannot lift to a shorter tower");
  for (std::size_t i = 0; i < from; ++i)
    require(tower_->name(i) == to->name(i), ErrorKind::Dimension, "tower is not a prefix");
  EpsScalar r;
  r.tower_ = to;
  r.terms_.reserve(terms_.size());
  for (const auto& t : terms_) {
    Exps e = t.first;
    e.resize(n, 0);
    r.terms_.emplace_back(std::move(e), t.second);
  }
  return r;
}

TowerPtr common_tower(const EpsScalar& a, const EpsScalar& b) {
  std::size_t la = a.tower_len(), lb = b.tower_len();
  if (la == 0) return b.tower_;
  if (lb == 0) return a.tower_;
  require(same_tower(a.tower_, b.tower_), ErrorKind::Dimension, "incompatible infinitesimal towers");
  return a.tower_;
}

EpsScalar EpsScalar::operator-() const {
  EpsScalar r = *this;
  for (auto& t : r.terms_) t.second = -t.second;
  return r;
}

EpsScalar& EpsScalar::operator+=(const EpsScalar& o) {
  if (o.terms_.empty()) return *this;
  TowerPtr t = common_tower(*this, o);
  if (terms_.empty()) {
    *this = o.lifted(t);
    return *this;
  }
  if (tower_len() != tower_size(t)) *this = lifted(t);
  const EpsScalar& rhs = (o.tower_len() == tower_size(t)) ? o : o.lifted(t);
  std::vector<Term> out;
  out.reserve(terms_.size() + rhs.terms_.size());
  auto i = terms_.begin();
  auto j = rhs.terms_.begin();
  while (i != terms_.end() || j != rhs.terms_.end()) {
    if (j == rhs.terms_.end() || (i != terms_.end() && i->first < j->first)) {
      out.push_back(std::move(*i++));
    } else if (i == terms_.end() || j->first < i->first) {
      out.push_back(*j++);
    } else {
      Rat s = i->second + j->second;
      if (!pqs::is_zero(s)) out.emplace_back(std::move(i->first), std::move(s));
      ++i;
      ++j;
    }
  }
  terms_ = std::move(out);
  tower_ = t;
  return *this;
}

EpsScalar& EpsScalar::operator-=(const EpsScalar& o) { return *this += -o; }

EpsScalar operator*(const EpsScalar& a, const EpsScalar& b) {
  if (a.terms_.empty() || b.terms_.empty()) {
    EpsScalar z;
    z.tower_ = common_tower(a, b);
    return z;
  }
  TowerPtr t = common_tower(a, b);
  std::size_t n = tower_size(t);
  // rational fast paths
  if (a.tower_len() == 0 || (a.terms_.size() == 1 && a.is_rational())) {
    EpsScalar r = b.lifted(t);
    return r *= a.terms_.front().second;
  }
  if (b.tower_len() == 0 || (b.terms_.size() == 1 && b.is_rational())) {
    EpsScalar r = a.lifted(t);
    return r *= b.terms_.front().second;
  }
  std::map<Exps, Rat> acc;
  for (const auto& x : a.terms_)
    for (const auto& y : b.terms_) {
      Exps e(n);
      for (std::size_t k = 0; k < n; ++k) e[k] = x.first[k] + y.first[k];
      auto [it, inserted] = acc.try_emplace(std::move(e), x.second * y.second);
      if (!inserted) it->second += x.second * y.second;
    }
  EpsScalar r;
  r.tower_ = t;
  r.terms_.reserve(acc.size());
  for (auto& [e, c] : acc)
    if (!pqs::is_zero(c)) r.terms_.emplace_back(e, std::move(c));
  return r;
}

EpsScalar& EpsScalar::operator*=(const EpsScalar& o) {
  *this = *this * o;
  return *this;
}

EpsScalar& EpsScalar::operator*=(const Rat& c) {
  if (pqs::is_zero(c)) {
    terms_.clear();
    return *this;
  }
  for (auto& t : terms_) t.second *= c;
  return *this;
}

bool EpsScalar::operator==(const EpsScalar& o) const {
  if (terms_.size() != o.terms_.size()) return false;
  if (terms_.empty()) return true;
  if (tower_len() == o.tower_len()) {
    if (!same_tower(tower_, o.tower_)) return false;
    return terms_ == o.terms_;
  }
  EpsScalar d = *this - o;
  return d.is_zero();
}

EpsScalar EpsScalar::pow(unsigned e) const {
  EpsScalar result(Rat(1));
  result = result.lifted(tower_);
  EpsScalar base = *this;
  while (e) {
    if (e & 1U) result *= base;
    e >>= 1U;
    if (e) base *= base;
  }
  return result;
}

EpsScalar EpsScalar::exact_div(const EpsScalar& d) const {
  require(!d.is_zero(), ErrorKind::Domain, "division by zero scalar");
  TowerPtr t = common_tower(*this, d);
  std::size_t n = tower_size(t);
  EpsScalar rem = lifted(t);
  EpsScalar div = d.lifted(t);
  const Term& lead = div.terms_.back();
  EpsScalar q;
  q.tower_ = t;
  while (!rem.is_zero()) {
    const Term& lt = rem.terms_.back();
    Exps e(n);
    for (std::size_t k = 0; k < n; ++k) {
      e[k] = lt.first[k] - lead.first[k];
      if (e[k] < 0) fail(ErrorKind::Domain, "inexact division " + to_string() + " / " + d.to_string());
    }
    EpsScalar m = monomial(t, e, lt.second / lead.second);
    q += m;
    rem -= m * div;
  }
  return q;
}

EpsScalar EpsScalar::substitute(std::size_t i, const Rat& v) const {
  require(i < tower_len(), ErrorKind::Dimension, "substitution index out of range");
  std::vector<std::string> names = tower_->names();
  names.erase(names.begin() + static_cast<long>(i));
  TowerPtr t = names.empty() ? TowerPtr{} : make_tower(std::move(names));
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (const auto& term : terms_) {
    Exps e = term.first;
    int p = e[i];
    e.erase(e.begin() + static_cast<long>(i));
    out.emplace_back(std::move(e), term.second * rat_pow(v, static_cast<unsigned>(p)));
  }
  return EpsScalar(t, std::move(out));
}

std::string EpsScalar::to_string() const {
  if (terms_.empty()) return "0";
  std::string s;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    std::string mono;
    for (std::size_t k = 0; k < it->first.size(); ++k) {
      if (it->first[k] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += tower_->name(k);
      if (it->first[k] > 1) mono += "^" + std::to_string(it->first[k]);
    }
    if (!s.empty()) s += (sgn(it->second) < 0) ? " - " : " + ";
    else if (sgn(it->second) < 0) s += "-";
    std::string ac = pqs::to_string(abs(it->second));
    if (mono.empty()) s += ac;
    else if (ac == "1") s += mono;
    else s += ac + "*" + mono;
  }
  return s;
}

std::pair<OrderVec, Rat> order_and_initial(const EpsScalar& x) {
  require(!x.is_zero(), ErrorKind::Undefined, "order of zero is undefined");
  const auto& terms = x.terms();
  std::size_t best = 0;
  for (std::size_t i = 1; i < terms.size(); ++i)
    if (mono_cmp(terms[i].first, terms[best].first) == Cmp::GT) best = i;
  return {OrderVec{terms[best].first}, terms[best].second};
}

EpsScalar lim_inner(const EpsScalar& x, std::size_t count) {
  std::size_t n = x.tower_len();
  require(count <= n, ErrorKind::Dimension, "lim_inner count exceeds tower length");
  if (count == 0) return x;
  TowerPtr t = shorten(x.tower(), count);
  if (tower_size(t) == 0) t = nullptr;
  std::vector<EpsScalar::Term> out;
  for (const auto& term : x.terms()) {
    bool keep = true;
    for (std::size_t k = n - count; k < n; ++k)
      if (term.first[k] != 0) keep = false;
    if (!keep) continue;
    Exps e(term.first.begin(), term.first.end() - static_cast<long>(count));
    out.emplace_back(std::move(e), term.second);
  }
  return EpsScalar(t, std::move(out));
}

}  // namespace pqs
