#include "schur/json_io.hpp"

#include "schur/errors.hpp"

namespace schur {

namespace {

Json integer_json(const Integer& v) {
  if (auto small = to_int64(v)) return *small;
  return to_string(v);
}

Integer integer_from_json(const Json& j) {
  if (j.is_number_integer()) return from_int64(j.get<long long>());
  if (j.is_string()) {
    Integer v;
    if (v.set_str(j.get<std::string>(), 10) != 0) throw InvalidArgument("not an integer: " + j.dump());
    return v;
  }
  throw InvalidArgument("expected an integer, got " + j.dump());
}

}  // namespace

Json to_json(const FgAbelianGroup& a) {
  Json factors = Json::array();
  for (const auto& d : a.invariant_factors()) factors.push_back(integer_json(d));
  return Json{{"rank", a.free_rank()}, {"factors", factors}, {"text", to_string(a)}};
}

FgAbelianGroup abelian_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("rank") || !j.contains("factors"))
    throw InvalidArgument("abelian group must be an object with 'rank' and 'factors'");
  const Json& rank = j.at("rank");
  if (!rank.is_number_integer() || rank.get<long long>() < 0)
    throw InvalidArgument("'rank' must be a non-negative integer");
  if (!j.at("factors").is_array()) throw InvalidArgument("'factors' must be an array");
  std::vector<Integer> orders;
  for (const auto& f : j.at("factors")) orders.push_back(integer_from_json(f));
  return normalize(rank.get<std::size_t>(), orders);
}

Json to_json(const IntMatrix& m) {
  Json rows = Json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (Eigen::Index j = 0; j < m.cols(); ++j) row.push_back(integer_json(m(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

IntMatrix matrix_from_json(const Json& j, Eigen::Index rows, Eigen::Index cols) {
  if (!j.is_array()) throw InvalidArgument("matrix must be an array of rows");
  if (j.empty() && rows * cols == 0) return zero_matrix(rows, cols);
  if (static_cast<Eigen::Index>(j.size()) != rows)
    throw InvalidArgument("matrix has " + std::to_string(j.size()) + " rows, expected " +
                          std::to_string(rows));
  IntMatrix m = zero_matrix(rows, cols);
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    const Json& row = j.at(static_cast<std::size_t>(i));
    if (!row.is_array() || static_cast<Eigen::Index>(row.size()) != cols)
      throw InvalidArgument("matrix row " + std::to_string(i) + " must have " + std::to_string(cols) +
                            " entries");
    for (Eigen::Index c = 0; c < cols; ++c) m(i, c) = integer_from_json(row.at(static_cast<std::size_t>(c)));
  }
  return m;
}

AmalgamProblem amalgam_problem_from_json(const Json& j) {
  try {
    if (!j.is_object()) throw InvalidArgument("amalgam problem must be a JSON object");
    auto group = [&j](const char* key) {
      if (!j.contains(key)) throw InvalidArgument(std::string("missing field '") + key + "'");
      return abelian_from_json(j.at(key));
    };
    AmalgamProblem p;
    p.m_h = group("M_H");
    p.m_g1 = group("M_G1");
    p.m_g2 = group("M_G2");
    p.h_ab = group("H_ab");
    p.g1_ab = group("G1_ab");
    p.g2_ab = group("G2_ab");
    if (j.contains("alpha") && !j.at("alpha").is_null())
      p.alpha = matrix_from_json(j.at("alpha"), GeneratedGroup({p.m_g1, p.m_g2}).generator_count(),
                                 GeneratedGroup(p.m_h).generator_count());
    if (!j.contains("beta")) throw InvalidArgument("missing field 'beta'");
    p.beta = matrix_from_json(j.at("beta"), GeneratedGroup({p.g1_ab, p.g2_ab}).generator_count(),
                              GeneratedGroup(p.h_ab).generator_count());
    return p;
  } catch (const InvalidArgument& e) {
    throw IllDefinedMap(std::string("amalgam data: ") + e.what());
  }
}

Json to_json(const AmalgamProblem& p) {
  Json j{{"M_H", to_json(p.m_h)},     {"M_G1", to_json(p.m_g1)},   {"M_G2", to_json(p.m_g2)},
         {"H_ab", to_json(p.h_ab)},   {"G1_ab", to_json(p.g1_ab)}, {"G2_ab", to_json(p.g2_ab)}};
  j["alpha"] = p.alpha ? to_json(*p.alpha) : Json(nullptr);
  j["beta"] = to_json(p.beta);
  return j;
}

}  // namespace schur
