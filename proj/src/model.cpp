#include "lvrank/model.hpp"

#include <json.hpp>

#include <algorithm>
#include <string>
#include <utility>

#include "lvrank/error.hpp"
#include "lvrank/linalg.hpp"

namespace lvrank {

using json = nlohmann::json;

InteractionMatrix::InteractionMatrix(RatMatrix entries)
    : entries_(std::move(entries)) {
  if (!entries_.is_square() || entries_.rows() == 0)
    throw Error(ErrorCode::kInvalidArgument,
                "interaction matrix must be square with n >= 1");
}

LVSystem::LVSystem(InteractionMatrix a, RatVector q)
    : a_(std::move(a)), q_(std::move(q)) {
  if (q_.size() != a_.size())
    throw Error(ErrorCode::kInvalidArgument,
                "equilibrium has length " + std::to_string(q_.size()) +
                    ", matrix has n = " + std::to_string(a_.size()));
  for (std::size_t i = 0; i < q_.size(); ++i)
    if (q_[i] <= 0)
      throw Error(ErrorCode::kInvalidArgument,
                  "equilibrium coordinate q" + std::to_string(i + 1) +
                      " is not positive");
}

GrowthRates LVSystem::growth_rates() const {
  RatVector r = a_.entries() * q_;
  for (auto& x : r) x = -x;
  return {std::move(r)};
}

namespace {

// Dense tableau simplex with Bland's rule:
//   maximize obj . y  subject to  lhs y <= rhs,  y >= 0,  rhs >= 0.
// Returns the optimal y; the caller guarantees boundedness.
RatVector maximize_lp(const RatMatrix& lhs, const RatVector& rhs,
                      const RatVector& obj) {
  const std::size_t m = lhs.rows();
  const std::size_t nv = lhs.cols();
  const std::size_t width = nv + m + 1;
  RatMatrix t(m + 1, width);
  std::vector<std::size_t> basis(m);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < nv; ++j) t(i, j) = lhs(i, j);
    t(i, nv + i) = 1;
    t(i, width - 1) = rhs[i];
    basis[i] = nv + i;
  }
  for (std::size_t j = 0; j < nv; ++j) t(m, j) = -obj[j];

  for (;;) {
    std::size_t enter = width;
    for (std::size_t j = 0; j + 1 < width; ++j)
      if (t(m, j) < 0) {
        enter = j;
        break;
      }
    if (enter == width) break;
    std::size_t leave = m;
    Rational best_ratio;
    for (std::size_t i = 0; i < m; ++i) {
      if (t(i, enter) <= 0) continue;
      Rational ratio = t(i, width - 1) / t(i, enter);
      if (leave == m || ratio < best_ratio ||
          (ratio == best_ratio && basis[i] < basis[leave])) {
        leave = i;
        best_ratio = ratio;
      }
    }
    if (leave == m)
      throw Error(ErrorCode::kInvalidArgument, "linear program is unbounded");
    const Rational inv = 1 / t(leave, enter);
    for (std::size_t j = 0; j < width; ++j) t(leave, j) *= inv;
    for (std::size_t i = 0; i <= m; ++i) {
      if (i == leave || t(i, enter) == 0) continue;
      const Rational f = t(i, enter);
      for (std::size_t j = 0; j < width; ++j) t(i, j) -= f * t(leave, j);
    }
    basis[leave] = enter;
  }
  RatVector y(nv, Rational(0));
  for (std::size_t i = 0; i < m; ++i)
    if (basis[i] < nv) y[basis[i]] = t(i, width - 1);
  return y;
}

bool all_positive(const RatVector& v) {
  return std::all_of(v.begin(), v.end(),
                     [](const Rational& x) { return x > 0; });
}

}  // namespace

LVSystem system_from_rates(const InteractionMatrix& a, const GrowthRates& r) {
  const std::size_t n = a.size();
  if (r.r.size() != n)
    throw Error(ErrorCode::kInvalidArgument,
                "growth-rate vector length does not match the matrix");
  RatVector rhs = r.r;
  for (auto& x : rhs) x = -x;
  auto particular = solve_particular(a.entries(), rhs);
  if (!particular)
    throw Error(ErrorCode::kNoSolution, "A q = -r has no solution");

  const std::vector<RatVector> kernel = nullspace(a.entries());
  // Minimum-norm solution: remove the component of the particular solution
  // lying in Ker(A). Solve the Gram system G w = K x for the projection.
  RatVector x = *particular;
  const std::size_t d = kernel.size();
  if (d > 0) {
    RatMatrix gram(d, d);
    RatVector proj(d);
    for (std::size_t i = 0; i < d; ++i) {
      for (std::size_t j = 0; j < d; ++j)
        for (std::size_t k = 0; k < n; ++k)
          gram(i, j) += kernel[i][k] * kernel[j][k];
      for (std::size_t k = 0; k < n; ++k) proj[i] += kernel[i][k] * x[k];
    }
    const RatVector w = *solve_particular(gram, proj);
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t k = 0; k < n; ++k) x[k] -= w[i] * kernel[i][k];
  }
  if (all_positive(x)) return LVSystem(a, std::move(x));
  if (d == 0)
    throw Error(ErrorCode::kNoPositiveSolution,
                "the unique solution of A q = -r is not positive");

  // Maximize t subject to x + K s >= t, t <= 1, with s = s+ - s-, and
  // t = t0 + t', t0 = min_i x_i, so the origin is feasible.
  Rational t0 = *std::min_element(x.begin(), x.end());
  const std::size_t nv = 2 * d + 1;
  RatMatrix lhs(n + 1, nv);
  RatVector bound(n + 1);
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t i = 0; i < d; ++i) {
      lhs(k, i) = -kernel[i][k];
      lhs(k, d + i) = kernel[i][k];
    }
    lhs(k, 2 * d) = 1;
    bound[k] = x[k] - t0;
  }
  lhs(n, 2 * d) = 1;
  bound[n] = 1 - t0;
  RatVector obj(nv, Rational(0));
  obj[2 * d] = 1;
  const RatVector y = maximize_lp(lhs, bound, obj);
  if (t0 + y[2 * d] <= 0)
    throw Error(ErrorCode::kNoPositiveSolution,
                "no positive solution of A q = -r exists");
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t k = 0; k < n; ++k)
      x[k] += (y[i] - y[d + i]) * kernel[i][k];
  return LVSystem(a, std::move(x));
}

namespace {

// DOM builder that keeps every number as its literal source text, so that
// decimals reach parse_rational without a detour through double.
class ExactNumberSax : public nlohmann::detail::json_sax_dom_parser<json> {
 public:
  using Base = nlohmann::detail::json_sax_dom_parser<json>;
  explicit ExactNumberSax(json& root) : Base(root, true) {}

  bool number_integer(number_integer_t value) {
    string_t text = std::to_string(value);
    return Base::string(text);
  }
  bool number_unsigned(number_unsigned_t value) {
    string_t text = std::to_string(value);
    return Base::string(text);
  }
  bool number_float(number_float_t /*value*/, const string_t& raw) {
    string_t text = raw;
    return Base::string(text);
  }
};

json parse_json_exact(std::string_view text) {
  json root;
  ExactNumberSax sax(root);
  try {
    json::sax_parse(text, &sax);
  } catch (const json::exception& e) {
    throw Error(ErrorCode::kParse, std::string("invalid JSON: ") + e.what());
  }
  return root;
}

Rational entry_value(const json& v, const std::string& where) {
  if (!v.is_string())
    throw Error(ErrorCode::kParse, where + ": expected a rational literal");
  try {
    return parse_rational(v.get<std::string>());
  } catch (const Error& e) {
    throw Error(ErrorCode::kParse, where + ": " + e.what());
  }
}

RatVector parse_vector(const json& v, const std::string& name) {
  if (!v.is_array())
    throw Error(ErrorCode::kParse, "\"" + name + "\" must be an array");
  RatVector out;
  for (std::size_t i = 0; i < v.size(); ++i)
    out.push_back(entry_value(v[i], name + "[" + std::to_string(i) + "]"));
  return out;
}

}  // namespace

MatrixDocument parse_document(std::string_view json_text) {
  json root = parse_json_exact(json_text);
  const json* rows = &root;
  if (root.is_object()) {
    if (!root.contains("matrix"))
      throw Error(ErrorCode::kParse, "document has no \"matrix\" field");
    rows = &root["matrix"];
  }
  if (!rows->is_array() || rows->empty())
    throw Error(ErrorCode::kParse, "\"matrix\" must be a non-empty array");
  const std::size_t n = rows->size();
  RatMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    const json& row = (*rows)[i];
    if (!row.is_array() || row.size() != n)
      throw Error(ErrorCode::kParse,
                  "matrix is not square: row " + std::to_string(i + 1) +
                      " does not have " + std::to_string(n) + " entries");
    for (std::size_t j = 0; j < n; ++j)
      m(i, j) = entry_value(row[j], "matrix[" + std::to_string(i) + "][" +
                                        std::to_string(j) + "]");
  }
  MatrixDocument doc{InteractionMatrix(std::move(m)), std::nullopt,
                     std::nullopt};
  if (root.is_object()) {
    if (root.contains("q")) doc.q = parse_vector(root["q"], "q");
    if (root.contains("r")) doc.r = parse_vector(root["r"], "r");
  }
  return doc;
}

InteractionMatrix parse_matrix(std::string_view json_text) {
  return parse_document(json_text).matrix;
}

LVSystem system_from_document(const MatrixDocument& doc) {
  if (doc.q.has_value() == doc.r.has_value())
    throw Error(ErrorCode::kInvalidArgument,
                "system-level commands need exactly one of \"q\" or \"r\"");
  if (doc.q) return LVSystem(doc.matrix, *doc.q);
  return system_from_rates(doc.matrix, GrowthRates{*doc.r});
}

std::string render_matrix(const InteractionMatrix& a) {
  json rows = json::array();
  for (std::size_t i = 0; i < a.size(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < a.size(); ++j) row.push_back(to_string(a(i, j)));
    rows.push_back(std::move(row));
  }
  json doc;
  doc["matrix"] = std::move(rows);
  return doc.dump();
}

}  // namespace lvrank
