#include "tpbasis/matrix_io.hpp"

namespace tpb {

namespace {

void check_shape(const Json& j) {
  if (!j.contains("rows") || !j.contains("cols") || !j.contains("data"))
    throw std::invalid_argument("matrix json missing rows/cols/data");
  std::size_t r = j.at("rows").get<std::size_t>();
  const auto& data = j.at("data");
  if (!data.is_array() || data.size() != r)
    throw std::invalid_argument("matrix json data has wrong row count");
}

}  // namespace

Json matrix_to_json(const RatMatrix& m) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(to_string(m(i, j)));
    rows.push_back(std::move(row));
  }
  return Json{{"rows", m.rows()}, {"cols", m.cols()}, {"backend", "rational"}, {"data", std::move(rows)}};
}

Json matrix_to_json(const DecMatrix& m, int digits) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(m(i, j).to_string(digits));
    rows.push_back(std::move(row));
  }
  return Json{{"rows", m.rows()}, {"cols", m.cols()}, {"backend", "decimal"}, {"data", std::move(rows)}};
}

std::string matrix_backend(const Json& j) {
  return j.value("backend", std::string("rational"));
}

RatMatrix rational_matrix_from_json(const Json& j) {
  check_shape(j);
  if (matrix_backend(j) != "rational")
    throw std::invalid_argument("expected rational backend matrix");
  std::size_t r = j.at("rows").get<std::size_t>();
  std::size_t c = j.at("cols").get<std::size_t>();
  RatMatrix m(r, c);
  const auto& data = j.at("data");
  for (std::size_t i = 0; i < r; ++i) {
    if (data[i].size() != c) throw std::invalid_argument("matrix json row length mismatch");
    for (std::size_t k = 0; k < c; ++k) m(i, k) = parse_rational(data[i][k].get<std::string>());
  }
  return m;
}

DecMatrix decimal_matrix_from_json(const Json& j, const PrecisionConfig& cfg) {
  check_shape(j);
  std::size_t r = j.at("rows").get<std::size_t>();
  std::size_t c = j.at("cols").get<std::size_t>();
  DecMatrix m(r, c, Decimal(cfg));
  const auto& data = j.at("data");
  for (std::size_t i = 0; i < r; ++i) {
    if (data[i].size() != c) throw std::invalid_argument("matrix json row length mismatch");
    for (std::size_t k = 0; k < c; ++k) {
      const auto& cell = data[i][k];
      if (cell.is_string()) {
        std::string s = cell.get<std::string>();
        m(i, k) = s.find('/') != std::string::npos ? Decimal(parse_rational(s), cfg)
                                                   : Decimal(s, cfg);
      } else {
        m(i, k) = Decimal(Rational(cell.get<double>()), cfg);
      }
    }
  }
  return m;
}

}  // namespace tpb
