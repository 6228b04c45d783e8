#include "tpbasis/conversion.hpp"

#include <stdexcept>

#include "tpbasis/collocation.hpp"
#include "tpbasis/tpcore.hpp"

namespace tpb {

ConversionTarget target_from_name(const std::string& s) {
  if (s == "said-ball") return ConversionTarget::SaidBall;
  if (s == "dp") return ConversionTarget::DP;
  throw std::invalid_argument("unknown conversion target: " + s);
}

std::string target_name(ConversionTarget t) {
  return t == ConversionTarget::SaidBall ? "said-ball" : "dp";
}

namespace {

std::vector<Rational> solve_nodes(int n) {
  std::vector<Rational> nodes;
  nodes.reserve(static_cast<std::size_t>(n) + 1);
  if (n == 0) {
    nodes.push_back(Rational(0));
    return nodes;
  }
  for (int j = 0; j <= n; ++j) nodes.push_back(rat(j, n));
  return nodes;
}

BasisSystem target_basis(ConversionTarget t, int n) {
  return t == ConversionTarget::SaidBall ? BasisSystem::said_ball(n) : BasisSystem::dp(n);
}

// coefficients of the polynomial (values of `from` weighted by w at the
// nodes) in the `to` basis: one exact linear solve
std::vector<Rational> change_basis(const BasisSystem& from, const BasisSystem& to,
                                   const std::vector<Rational>& w) {
  if (w.size() != static_cast<std::size_t>(from.dimension()))
    throw std::invalid_argument("weight count does not match basis dimension");
  std::vector<Rational> nodes = solve_nodes(from.n);
  RatMatrix mf = collocation_matrix(from, nodes);
  RatMatrix mt = collocation_matrix(to, nodes);
  std::vector<Rational> rhs(nodes.size(), Rational(0));
  for (std::size_t i = 0; i < nodes.size(); ++i)
    for (std::size_t j = 0; j < w.size(); ++j) rhs[i] += mf(i, j) * w[j];
  RatMatrix inv = inverse(mt);
  std::vector<Rational> out(w.size(), Rational(0));
  for (std::size_t i = 0; i < out.size(); ++i)
    for (std::size_t j = 0; j < nodes.size(); ++j) out[i] += inv(i, j) * rhs[j];
  return out;
}

RatMatrix transfer_matrix(ConversionTarget target, int n) {
  if (n < 0) throw std::invalid_argument("negative degree");
  std::vector<Rational> nodes = solve_nodes(n);
  RatMatrix mf = collocation_matrix(BasisSystem::bernstein(n), nodes);
  RatMatrix mt = collocation_matrix(target_basis(target, n), nodes);
  return inverse(mt) * mf;
}

}  // namespace

WeightConverter::WeightConverter(ConversionTarget target, int n)
    : n_(n), transfer_(transfer_matrix(target, n)) {}

std::vector<Rational> WeightConverter::operator()(const std::vector<Rational>& w) const {
  if (w.size() != static_cast<std::size_t>(n_) + 1)
    throw std::invalid_argument("weight count does not match basis dimension");
  std::vector<Rational> out(w.size(), Rational(0));
  for (std::size_t i = 0; i < out.size(); ++i)
    for (std::size_t j = 0; j < w.size(); ++j) out[i] += transfer_(i, j) * w[j];
  return out;
}

std::vector<Rational> convert_weights(ConversionTarget target, const std::vector<Rational>& w) {
  int n = static_cast<int>(w.size()) - 1;
  if (n < 0) throw std::invalid_argument("empty weight vector");
  return change_basis(BasisSystem::bernstein(n), target_basis(target, n), w);
}

std::vector<Rational> convert_to_bernstein(ConversionTarget source, const std::vector<Rational>& w) {
  int n = static_cast<int>(w.size()) - 1;
  if (n < 0) throw std::invalid_argument("empty weight vector");
  return change_basis(target_basis(source, n), BasisSystem::bernstein(n), w);
}

bool all_positive(const std::vector<Rational>& w) {
  for (const auto& x : w)
    if (sgn(x) <= 0) return false;
  return true;
}

Rational weighted_value(const BasisSystem& basis, const std::vector<Rational>& w, const Rational& t) {
  if (w.size() != static_cast<std::size_t>(basis.dimension()))
    throw std::invalid_argument("weight count does not match basis dimension");
  std::vector<Rational> u = evaluate(basis, t);
  Rational s(0);
  for (std::size_t j = 0; j < w.size(); ++j) s += w[j] * u[j];
  return s;
}

}  // namespace tpb
