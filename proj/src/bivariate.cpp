#include "eltrans/bivariate.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

#include "eltrans/errors.hpp"

namespace eltrans {

Rational::Rational(long n, long d) {
  if (d == 0) throw std::invalid_argument("rational with zero denominator");
  q_ = mpq_class(n, d);
  q_.canonicalize();
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw std::domain_error("division by zero rational");
  q_ /= o.q_;
  return *this;
}

Rational Rational::parse(std::string_view text) {
  const auto bad = [&] { return ParseError("not a rational number: \"" + std::string(text) + "\""); };
  const auto is_integer = [](std::string_view s) {
    if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
    return !s.empty() && std::all_of(s.begin(), s.end(), [](unsigned char ch) {
      return std::isdigit(ch) != 0;
    });
  };
  const auto slash = text.find('/');
  const std::string_view num = text.substr(0, slash);
  const std::string_view den = slash == std::string_view::npos ? "1" : text.substr(slash + 1);
  if (!is_integer(num) || den.empty() || !std::all_of(den.begin(), den.end(), [](unsigned char ch) {
        return std::isdigit(ch) != 0;
      }))
    throw bad();

  mpz_class n;
  mpz_class d;
  std::string num_s(num);
  if (num_s.front() == '+') num_s.erase(0, 1);
  if (n.set_str(num_s, 10) != 0 || d.set_str(std::string(den), 10) != 0) throw bad();
  if (d == 0) throw bad();
  return Rational(mpq_class(n, d));
}

TruncatedBivariate::TruncatedBivariate(const Rational& c, int truncation)
    : truncation_(truncation) {
  if (truncation < 0) throw std::invalid_argument("negative u-truncation");
  if (!c.is_zero()) terms_.emplace(Exponent{0, 0}, c);
}

TruncatedBivariate TruncatedBivariate::monomial(int z, int u, const Rational& c, int truncation) {
  if (u < 0) throw std::invalid_argument("negative u-exponent");
  TruncatedBivariate out(Rational(0), truncation);
  if (u <= truncation && !c.is_zero()) out.terms_.emplace(Exponent{u, z}, c);
  return out;
}

Rational TruncatedBivariate::coeff(int z, int u) const {
  const auto it = terms_.find({u, z});
  return it == terms_.end() ? Rational(0) : it->second;
}

std::optional<ZWindow> TruncatedBivariate::z_window() const {
  if (terms_.empty()) return std::nullopt;
  ZWindow w{terms_.begin()->first.z, terms_.begin()->first.z};
  for (const auto& [e, c] : terms_) {
    w.lo = std::min(w.lo, e.z);
    w.hi = std::max(w.hi, e.z);
  }
  return w;
}

std::optional<ZWindow> TruncatedBivariate::z_window_at(int u) const {
  auto first = terms_.lower_bound({u, std::numeric_limits<int>::min()});
  if (first == terms_.end() || first->first.u != u) return std::nullopt;
  auto last = std::prev(terms_.upper_bound({u, std::numeric_limits<int>::max()}));
  return ZWindow{first->first.z, last->first.z};
}

TruncatedBivariate TruncatedBivariate::truncated(int n) const {
  if (n < 0) throw std::invalid_argument("negative u-truncation");
  TruncatedBivariate out;
  out.truncation_ = std::min(n, truncation_);
  for (const auto& [e, c] : terms_)
    if (e.u <= out.truncation_) out.terms_.emplace(e, c);
  return out;
}

TruncatedBivariate TruncatedBivariate::shifted(int dz, int du) const {
  TruncatedBivariate out;
  if (!is_exact()) {
    if (truncation_ + du < 0) throw TruncationError("division by u exhausts the truncation");
    out.truncation_ = truncation_ + du;
  }
  for (const auto& [e, c] : terms_) {
    if (e.u + du < 0) throw std::domain_error("division by u of a term not divisible by u");
    out.terms_.emplace(Exponent{e.u + du, e.z + dz}, c);
  }
  return out;
}

TruncatedBivariate TruncatedBivariate::u_coefficient(int n) const {
  if (n > truncation_) throw TruncationError("u-coefficient beyond truncation");
  TruncatedBivariate out;
  for (const auto& [e, c] : terms_)
    if (e.u == n) out.terms_.emplace(Exponent{0, e.z}, c);
  return out;
}

bool TruncatedBivariate::regular_on_chart0() const {
  return std::all_of(terms_.begin(), terms_.end(), [](const auto& t) { return t.first.z >= 0; });
}

bool TruncatedBivariate::regular_on_chart1() const {
  return std::all_of(terms_.begin(), terms_.end(),
                     [](const auto& t) { return t.first.z <= t.first.u; });
}

void TruncatedBivariate::add_term(const Exponent& e, const Rational& c) {
  if (e.u > truncation_ || c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

TruncatedBivariate& TruncatedBivariate::operator+=(const TruncatedBivariate& o) {
  if (o.truncation_ < truncation_) *this = truncated(o.truncation_);
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

TruncatedBivariate& TruncatedBivariate::operator-=(const TruncatedBivariate& o) {
  if (o.truncation_ < truncation_) *this = truncated(o.truncation_);
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

TruncatedBivariate operator*(const TruncatedBivariate& a, const TruncatedBivariate& b) {
  TruncatedBivariate out;
  out.truncation_ = std::min(a.truncation_, b.truncation_);
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) {
      const long u = static_cast<long>(ea.u) + eb.u;
      if (u > out.truncation_) break;
      out.add_term({static_cast<int>(u), ea.z + eb.z}, ca * cb);
    }
  return out;
}

TruncatedBivariate& TruncatedBivariate::operator*=(const TruncatedBivariate& o) {
  return *this = *this * o;
}

TruncatedBivariate operator-(TruncatedBivariate a) {
  for (auto& [e, c] : a.terms_) c = -c;
  return a;
}

bool equal_mod_u(const TruncatedBivariate& a, const TruncatedBivariate& b, int n) {
  const auto low = [n](const TruncatedBivariate& f) {
    TruncatedBivariate::Terms t;
    for (const auto& [e, c] : f.terms())
      if (e.u <= n) t.emplace(e, c);
    return t;
  };
  return low(a) == low(b);
}

std::ostream& operator<<(std::ostream& os, const TruncatedBivariate& f) {
  if (f.is_zero()) os << "0";
  bool first = true;
  for (const auto& [e, c] : f.terms()) {
    if (!first) os << " + ";
    first = false;
    os << "(" << c << ")";
    if (e.z != 0) os << "*z^" << e.z;
    if (e.u != 0) os << "*u^" << e.u;
  }
  if (!f.is_exact()) os << " + O(u^" << f.truncation() + 1 << ")";
  return os;
}

}  // namespace eltrans
