#include "tpbasis/collocation.hpp"

#include <stdexcept>

namespace tpb {

std::vector<Rational> uniform_interior_nodes(int n) {
  if (n < 1) throw std::invalid_argument("node count parameter below 1");
  std::vector<Rational> nodes;
  nodes.reserve(static_cast<std::size_t>(n) + 1);
  for (int i = 1; i <= n + 1; ++i) nodes.push_back(rat(i, n + 2));
  return nodes;
}

RatMatrix collocation_matrix(const BasisSystem& basis, const std::vector<Rational>& nodes) {
  if (nodes.empty()) throw std::invalid_argument("empty node sequence");
  for (std::size_t i = 0; i + 1 < nodes.size(); ++i)
    if (!(nodes[i] < nodes[i + 1])) throw std::invalid_argument("nodes must be strictly increasing");
  std::size_t dim = static_cast<std::size_t>(basis.dimension());
  RatMatrix m(nodes.size(), dim);
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    std::vector<Rational> row = evaluate(basis, nodes[i]);
    for (std::size_t j = 0; j < dim; ++j) m(i, j) = std::move(row[j]);
  }
  return m;
}

DecMatrix collocation_matrix(const BasisSystem& basis, const std::vector<Decimal>& nodes,
                             const PrecisionConfig& cfg) {
  if (nodes.empty()) throw std::invalid_argument("empty node sequence");
  for (std::size_t i = 0; i + 1 < nodes.size(); ++i)
    if (!(nodes[i] < nodes[i + 1])) throw std::invalid_argument("nodes must be strictly increasing");
  std::size_t dim = static_cast<std::size_t>(basis.dimension());
  DecMatrix m(nodes.size(), dim, Decimal(cfg));
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    std::vector<Decimal> row = evaluate(basis, nodes[i], cfg);
    for (std::size_t j = 0; j < dim; ++j) m(i, j) = std::move(row[j]);
  }
  return m;
}

std::vector<Decimal> decimal_nodes(const BasisSystem& basis, const std::vector<Rational>& fractions,
                                   const PrecisionConfig& cfg) {
  auto [lo, hi] = decimal_domain(basis, cfg);
  Decimal len = hi - lo;
  std::vector<Decimal> nodes;
  nodes.reserve(fractions.size());
  for (const auto& f : fractions) {
    if (sgn(f) < 0 || f > 1) throw std::invalid_argument("node fraction outside [0,1]");
    nodes.push_back(lo + rational_to_decimal(f, cfg) * len);
  }
  return nodes;
}

bool is_stochastic(const RatMatrix& m) {
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Rational s(0);
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (sgn(m(i, j)) < 0) return false;
      s += m(i, j);
    }
    if (s != 1) return false;
  }
  return true;
}

bool is_stochastic(const DecMatrix& m, const PrecisionConfig& cfg) {
  Decimal tol = comparison_tolerance(cfg);
  Decimal one(1L, cfg);
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Decimal s(cfg);
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (m(i, j) < -tol) return false;
      s += m(i, j);
    }
    if (abs(s - one) > tol) return false;
  }
  return true;
}

}  // namespace tpb
