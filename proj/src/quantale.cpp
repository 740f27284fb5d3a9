#include "qcat/quantale.hpp"

#include <cctype>
#include <limits>
#include <numeric>
#include <ostream>

namespace qcat {

namespace {

using i128 = __int128;
using u128 = unsigned __int128;

constexpr std::int64_t kMax64 = std::numeric_limits<std::int64_t>::max();

u128 gcd128(u128 a, u128 b) {
  while (b != 0) {
    u128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

mpz_class mpz_from_u128(u128 v) {
  mpz_class hi = static_cast<unsigned long>(static_cast<std::uint64_t>(v >> 64));
  mpz_class lo = static_cast<unsigned long>(static_cast<std::uint64_t>(v));
  return (hi << 64) + lo;
}

mpq_class to_mpq_small(std::int64_t num, std::int64_t den) {
  mpq_class q(mpz_class(static_cast<long>(num)), mpz_class(static_cast<long>(den)));
  return q;  // already reduced
}

static_assert(sizeof(long) == 8, "inline representation assumes 64-bit long");

bool fits_int64(const mpz_class& z) { return z.fits_slong_p(); }

}  // namespace

CostValue::CostValue(std::int64_t n) : num_(n) {
  if (n < 0) throw InvalidInputError("cost values are non-negative");
}

CostValue CostValue::ratio(std::int64_t num, std::int64_t den) {
  if (den == 0) throw Error("zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  if (num < 0) throw InvalidInputError("cost values are non-negative");
  const std::int64_t g = std::gcd(num, den);
  CostValue v;
  v.num_ = num / g;
  v.den_ = den / g;
  return v;
}

CostValue CostValue::infinity() {
  CostValue v;
  v.rep_ = Rep::inf;
  return v;
}

CostValue CostValue::normalize_big(mpq_class q) {
  q.canonicalize();
  if (sgn(q) < 0) throw InvalidInputError("cost values are non-negative");
  const mpz_class& n = q.get_num();
  const mpz_class& d = q.get_den();
  if (fits_int64(n) && fits_int64(d)) {
    CostValue v;
    v.num_ = n.get_si();
    v.den_ = d.get_si();
    return v;
  }
  CostValue v;
  v.rep_ = Rep::big;
  v.big_ = std::make_shared<const mpq_class>(std::move(q));
  return v;
}

CostValue CostValue::from_mpq(const mpq_class& q) { return normalize_big(q); }

CostValue CostValue::parse(std::string_view text) {
  if (text == "inf") return infinity();
  const auto slash = text.find('/');
  const auto digits = [](std::string_view s) {
    if (s.empty()) return false;
    for (char c : s)
      if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
  };
  const std::string_view num = text.substr(0, slash);
  const std::string_view den =
      slash == std::string_view::npos ? std::string_view{"1"} : text.substr(slash + 1);
  if (!digits(num) || !digits(den)) throw ParseError("malformed cost value: '" + std::string(text) + "'");
  mpz_class n(std::string(num), 10);
  mpz_class d(std::string(den), 10);
  if (d == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
  return normalize_big(mpq_class(n, d));
}

std::string CostValue::to_string() const {
  switch (rep_) {
    case Rep::inf:
      return "inf";
    case Rep::small:
      if (den_ == 1) return std::to_string(num_);
      return std::to_string(num_) + "/" + std::to_string(den_);
    case Rep::big:
      break;
  }
  if (big_->get_den() == 1) return big_->get_num().get_str();
  return big_->get_num().get_str() + "/" + big_->get_den().get_str();
}

mpq_class CostValue::to_mpq() const {
  switch (rep_) {
    case Rep::inf:
      throw Error("infinity has no rational value");
    case Rep::small:
      return to_mpq_small(num_, den_);
    case Rep::big:
      break;
  }
  return *big_;
}

CostValue operator+(const CostValue& a, const CostValue& b) {
  using Rep = CostValue::Rep;
  if (a.rep_ == Rep::inf || b.rep_ == Rep::inf) return CostValue::infinity();
  if (a.rep_ == Rep::small && b.rep_ == Rep::small) {
    if (a.den_ == b.den_) {
      std::int64_t n = 0;
      if (!__builtin_add_overflow(a.num_, b.num_, &n)) {
        if (a.den_ == 1) return CostValue(n);
        return CostValue::ratio(n, a.den_);
      }
    }
    const u128 n = static_cast<u128>(a.num_) * static_cast<u128>(b.den_) +
                   static_cast<u128>(b.num_) * static_cast<u128>(a.den_);
    const u128 d = static_cast<u128>(a.den_) * static_cast<u128>(b.den_);
    const u128 g = gcd128(n, d);
    const u128 rn = n / g;
    const u128 rd = d / g;
    if (rn <= static_cast<u128>(kMax64) && rd <= static_cast<u128>(kMax64)) {
      CostValue v;
      v.num_ = static_cast<std::int64_t>(rn);
      v.den_ = static_cast<std::int64_t>(rd);
      return v;
    }
    return CostValue::normalize_big(mpq_class(mpz_from_u128(rn), mpz_from_u128(rd)));
  }
  return CostValue::normalize_big(a.to_mpq() + b.to_mpq());
}

CostValue truncated_difference(const CostValue& a, const CostValue& b) {
  using Rep = CostValue::Rep;
  if (a.rep_ == Rep::inf) return CostValue{};
  if (b.rep_ == Rep::inf) return CostValue::infinity();
  if (b <= a) return CostValue{};
  if (a.rep_ == Rep::small && b.rep_ == Rep::small) {
    if (a.den_ == b.den_) return CostValue::ratio(b.num_ - a.num_, a.den_);
    const i128 n = static_cast<i128>(b.num_) * a.den_ - static_cast<i128>(a.num_) * b.den_;
    const u128 d = static_cast<u128>(a.den_) * static_cast<u128>(b.den_);
    const u128 g = gcd128(static_cast<u128>(n), d);
    const u128 rn = static_cast<u128>(n) / g;
    const u128 rd = d / g;
    if (rn <= static_cast<u128>(kMax64) && rd <= static_cast<u128>(kMax64)) {
      CostValue v;
      v.num_ = static_cast<std::int64_t>(rn);
      v.den_ = static_cast<std::int64_t>(rd);
      return v;
    }
    return CostValue::normalize_big(mpq_class(mpz_from_u128(rn), mpz_from_u128(rd)));
  }
  return CostValue::normalize_big(b.to_mpq() - a.to_mpq());
}

std::strong_ordering operator<=>(const CostValue& a, const CostValue& b) {
  using Rep = CostValue::Rep;
  if (a.rep_ == Rep::inf || b.rep_ == Rep::inf) {
    return (a.rep_ == Rep::inf) <=> (b.rep_ == Rep::inf);
  }
  if (a.rep_ == Rep::small && b.rep_ == Rep::small) {
    if (a.den_ == b.den_) return a.num_ <=> b.num_;
    const i128 lhs = static_cast<i128>(a.num_) * b.den_;
    const i128 rhs = static_cast<i128>(b.num_) * a.den_;
    return lhs <=> rhs;
  }
  const int c = cmp(a.to_mpq(), b.to_mpq());
  return c <=> 0;
}

bool operator==(const CostValue& a, const CostValue& b) {
  using Rep = CostValue::Rep;
  if (a.rep_ != b.rep_) return false;
  switch (a.rep_) {
    case Rep::inf:
      return true;
    case Rep::small:
      return a.num_ == b.num_ && a.den_ == b.den_;
    case Rep::big:
      break;
  }
  return *a.big_ == *b.big_;
}

std::ostream& operator<<(std::ostream& os, const CostValue& v) { return os << v.to_string(); }

BoolValue BoolValue::parse(std::string_view text) {
  if (text == "0") return false;
  if (text == "1") return true;
  throw ParseError("malformed boolean value: '" + std::string(text) + "'");
}

std::ostream& operator<<(std::ostream& os, BoolValue v) { return os << v.to_string(); }

std::string_view base_name(BaseKind kind) {
  return kind == BaseKind::cost ? "cost" : "bool";
}

}  // namespace qcat
