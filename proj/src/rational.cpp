#include "lvrank/rational.hpp"

#include <cctype>
#include <string>

#include "lvrank/error.hpp"
#include "lvrank/matrix.hpp"

namespace lvrank {

const char* to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::kParse: return "ParseError";
    case ErrorCode::kInvalidArgument: return "InvalidArgument";
    case ErrorCode::kPositiveDiagonal: return "PositiveDiagonal";
    case ErrorCode::kNotAnEndpoint: return "NotAnEndpoint";
    case ErrorCode::kDegenerateEndpoint: return "DegenerateEndpoint";
    case ErrorCode::kNotStablyDissipative: return "NotStablyDissipative";
    case ErrorCode::kNoSolution: return "NoSolution";
    case ErrorCode::kNoPositiveSolution: return "NoPositiveSolution";
    case ErrorCode::kNonPositivePoint: return "NonPositivePoint";
    case ErrorCode::kSingularJacobian: return "SingularJacobian";
    case ErrorCode::kNoConvergence: return "NoConvergence";
    case ErrorCode::kStepUnderflow: return "StepUnderflow";
    case ErrorCode::kNonPositiveStart: return "NonPositiveStart";
  }
  return "Unknown";
}

namespace {

[[noreturn]] void bad_literal(std::string_view text, const char* why) {
  throw Error(ErrorCode::kParse, "malformed rational literal '" +
                                     std::string(text) + "': " + why);
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front())))
    s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back())))
    s.remove_suffix(1);
  return s;
}

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char ch : s)
    if (!std::isdigit(static_cast<unsigned char>(ch))) return false;
  return true;
}

mpz_class parse_integer(std::string_view digits) {
  return mpz_class(std::string(digits), 10);
}

Rational parse_decimal(std::string_view text, std::string_view body) {
  bool negative = false;
  if (!body.empty() && (body.front() == '+' || body.front() == '-')) {
    negative = body.front() == '-';
    body.remove_prefix(1);
  }
  long exponent = 0;
  if (auto e = body.find_first_of("eE"); e != std::string_view::npos) {
    std::string_view exp_text = body.substr(e + 1);
    body = body.substr(0, e);
    bool exp_negative = false;
    if (!exp_text.empty() && (exp_text.front() == '+' || exp_text.front() == '-')) {
      exp_negative = exp_text.front() == '-';
      exp_text.remove_prefix(1);
    }
    if (!all_digits(exp_text) || exp_text.size() > 6)
      bad_literal(text, "bad exponent");
    exponent = std::stol(std::string(exp_text));
    if (exp_negative) exponent = -exponent;
  }
  std::string_view int_part = body;
  std::string_view frac_part;
  if (auto dot = body.find('.'); dot != std::string_view::npos) {
    int_part = body.substr(0, dot);
    frac_part = body.substr(dot + 1);
  }
  if (int_part.empty() && frac_part.empty()) bad_literal(text, "no digits");
  if ((!int_part.empty() && !all_digits(int_part)) ||
      (!frac_part.empty() && !all_digits(frac_part)))
    bad_literal(text, "unexpected character");
  std::string digits = std::string(int_part) + std::string(frac_part);
  mpz_class num = parse_integer(digits);
  exponent -= static_cast<long>(frac_part.size());
  mpz_class den = 1;
  if (exponent > 0) {
    mpz_class p;
    mpz_ui_pow_ui(p.get_mpz_t(), 10, static_cast<unsigned long>(exponent));
    num *= p;
  } else if (exponent < 0) {
    mpz_ui_pow_ui(den.get_mpz_t(), 10, static_cast<unsigned long>(-exponent));
  }
  Rational value(num, den);
  value.canonicalize();
  return negative ? Rational(-value) : value;
}

}  // namespace

Rational parse_rational(std::string_view raw) {
  std::string_view text = trim(raw);
  if (text.empty()) bad_literal(raw, "empty");
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    std::string_view num = trim(text.substr(0, slash));
    std::string_view den = trim(text.substr(slash + 1));
    bool negative = false;
    if (!num.empty() && (num.front() == '+' || num.front() == '-')) {
      negative = num.front() == '-';
      num.remove_prefix(1);
    }
    if (!all_digits(num) || !all_digits(den))
      bad_literal(raw, "fraction needs integer numerator and denominator");
    mpz_class d = parse_integer(den);
    if (d == 0) throw Error(ErrorCode::kParse, "zero denominator in '" +
                                                   std::string(raw) + "'");
    mpz_class n = parse_integer(num);
    if (negative) n = -n;
    Rational value(n, d);
    value.canonicalize();
    return value;
  }
  return parse_decimal(raw, text);
}

std::string to_string(const Rational& value) {
  if (value.get_den() == 1) return value.get_num().get_str();
  return value.get_num().get_str() + "/" + value.get_den().get_str();
}

int sign(const Rational& value) { return sgn(value); }

RatVector primitive_integer_vector(const RatVector& v) {
  mpz_class den_lcm = 1;
  for (const auto& x : v) {
    if (x == 0) continue;
    mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(),
            x.get_den().get_mpz_t());
  }
  mpz_class num_gcd = 0;
  for (const auto& x : v) {
    if (x == 0) continue;
    mpz_class scaled = x.get_num() * (den_lcm / x.get_den());
    mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), scaled.get_mpz_t());
  }
  if (num_gcd == 0) return v;
  RatVector out;
  out.reserve(v.size());
  for (const auto& x : v) {
    Rational scaled = x * Rational(den_lcm) / Rational(num_gcd);
    scaled.canonicalize();
    out.push_back(scaled);
  }
  return out;
}

std::vector<double> to_double(const RatVector& v) {
  std::vector<double> out;
  out.reserve(v.size());
  for (const auto& x : v) out.push_back(x.get_d());
  return out;
}

RealMatrix to_double(const RatMatrix& m) {
  RealMatrix out(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = m(i, j).get_d();
  return out;
}

RatMatrix scale_rows(const RatMatrix& m, const RatVector& c) {
  RatMatrix out = m;
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) *= c[i];
  return out;
}

RatMatrix rows_to_matrix(const std::vector<RatVector>& vectors,
                         std::size_t cols) {
  RatMatrix out(vectors.size(), cols);
  for (std::size_t i = 0; i < vectors.size(); ++i)
    for (std::size_t j = 0; j < cols; ++j) out(i, j) = vectors[i][j];
  return out;
}

}  // namespace lvrank
