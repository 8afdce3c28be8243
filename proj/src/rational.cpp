#include "semidecay/rational.hpp"

#include "semidecay/error.hpp"

#include <cctype>
#include <sstream>

namespace semidecay {

namespace {

bool is_integer_text(std::string_view s) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  return true;
}

Integer parse_integer(std::string_view s) {
  if (!s.empty() && s[0] == '+') s.remove_prefix(1);
  return Integer(std::string(s));
}

}  // namespace

Rational parse_rational(std::string_view text) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
  const auto slash = text.find('/');
  const auto num_text = text.substr(0, slash);
  const auto den_text = slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
  if (!is_integer_text(num_text) || !is_integer_text(den_text) || den_text[0] == '-')
    throw Error(Errc::invalid_input, "not a rational: '" + std::string(text) + "'");
  const Integer den = parse_integer(den_text);
  if (den == 0) throw Error(Errc::invalid_input, "zero denominator in '" + std::string(text) + "'");
  return Rational(parse_integer(num_text), den);
}

std::string to_string(const Rational& value) { return value.str(); }

std::string to_string(const WeightVector& v) {
  std::string out = "(";
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    if (i) out += ", ";
    out += to_string(v[i]);
  }
  return out + ")";
}

double to_double(const Rational& value) { return value.convert_to<double>(); }

Eigen::VectorXd to_double(const WeightVector& v) {
  Eigen::VectorXd out(v.size());
  for (Eigen::Index i = 0; i < v.size(); ++i) out[i] = to_double(v[i]);
  return out;
}

std::string to_decimal(const Rational& value, int digits) {
  std::ostringstream os;
  os.precision(digits);
  os << to_double(value);
  return os.str();
}

Rational pow(const Rational& base, int exponent) {
  if (exponent < 0) {
    if (base == 0) throw Error(Errc::invalid_input, "zero to a negative power");
    return Rational(1) / pow(base, -exponent);
  }
  Rational result(1);
  Rational factor = base;
  for (unsigned e = static_cast<unsigned>(exponent); e; e >>= 1) {
    if (e & 1u) result *= factor;
    factor *= factor;
  }
  return result;
}

Integer ceil(const Rational& value) {
  const Integer num = boost::multiprecision::numerator(value);
  const Integer den = boost::multiprecision::denominator(value);
  Integer q = num / den;  // truncates toward zero
  if (q * den < num) ++q;
  return q;
}

WeightVector zero_weight(Eigen::Index rank) {
  WeightVector v(rank);
  for (Eigen::Index i = 0; i < rank; ++i) v[i] = 0;
  return v;
}

WeightVector unit_weight(Eigen::Index rank, Eigen::Index index) {
  WeightVector v = zero_weight(rank);
  v[index] = 1;
  return v;
}

bool is_zero(const WeightVector& v) {
  for (Eigen::Index i = 0; i < v.size(); ++i)
    if (v[i] != 0) return false;
  return true;
}

bool all_nonnegative(const WeightVector& v) {
  for (Eigen::Index i = 0; i < v.size(); ++i)
    if (v[i] < 0) return false;
  return true;
}

bool all_positive(const WeightVector& v) {
  for (Eigen::Index i = 0; i < v.size(); ++i)
    if (v[i] <= 0) return false;
  return v.size() > 0;
}

bool lex_less(const WeightVector& a, const WeightVector& b) {
  for (Eigen::Index i = 0; i < a.size(); ++i) {
    if (a[i] < b[i]) return true;
    if (b[i] < a[i]) return false;
  }
  return false;
}

Eigen::Index exact_rank(Eigen::Matrix<Rational, Eigen::Dynamic, Eigen::Dynamic> m) {
  Eigen::Index rank = 0;
  for (Eigen::Index col = 0; col < m.cols() && rank < m.rows(); ++col) {
    Eigen::Index pivot = rank;
    while (pivot < m.rows() && m(pivot, col) == 0) ++pivot;
    if (pivot == m.rows()) continue;
    m.row(rank).swap(m.row(pivot));
    for (Eigen::Index r = 0; r < m.rows(); ++r) {
      if (r == rank || m(r, col) == 0) continue;
      const Rational factor = m(r, col) / m(rank, col);
      m.row(r) -= factor * m.row(rank);
    }
    ++rank;
  }
  return rank;
}

}  // namespace semidecay
