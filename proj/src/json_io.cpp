#include "braidforge/json_io.hpp"

namespace braidforge {

namespace {

Json complex_to_json(Complex z) { return Json::array({z.real(), z.imag()}); }

Complex complex_from_json(const Json& j)
{
  if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number())
    throw ParseError("expected complex number as [re, im]");
  return {j[0].get<double>(), j[1].get<double>()};
}

template <class T>
T field(const Json& j, const char* key)
{
  if (!j.is_object() || !j.contains(key))
    throw ParseError(std::string("missing field '") + key + "'");
  try {
    return j.at(key).get<T>();
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("field '") + key + "': " + e.what());
  }
}

const Json& array_field(const Json& j, const char* key, std::size_t size)
{
  if (!j.is_object() || !j.contains(key) || !j.at(key).is_array())
    throw ParseError(std::string("missing array '") + key + "'");
  const Json& a = j.at(key);
  if (a.size() != size)
    throw ParseError(std::string("array '") + key + "' has " + std::to_string(a.size()) +
                     " entries, expected " + std::to_string(size));
  return a;
}

Json witness_to_json(const Witness& w)
{
  Json j;
  j["row"] = w.row;
  j["col"] = w.col;
  j["lhs"] = complex_to_json(w.lhs);
  j["rhs"] = complex_to_json(w.rhs);
  if (!w.detail.empty())
    j["detail"] = w.detail;
  return j;
}

}  // namespace

Json matrix_to_json(const DenseMatrix& m)
{
  Json entries = Json::array();
  for (Eigen::Index r = 0; r < m.rows(); ++r)
    for (Eigen::Index c = 0; c < m.cols(); ++c)
      entries.push_back(complex_to_json(m(r, c)));
  Json j;
  j["rows"] = m.rows();
  j["cols"] = m.cols();
  j["entries"] = std::move(entries);
  return j;
}

DenseMatrix matrix_from_json(const Json& j)
{
  const auto rows = field<std::int64_t>(j, "rows");
  const auto cols = field<std::int64_t>(j, "cols");
  if (rows < 0 || cols < 0)
    throw ParseError("negative matrix shape");
  const Json& e = array_field(j, "entries", static_cast<std::size_t>(rows * cols));
  DenseMatrix m(rows, cols);
  for (std::int64_t r = 0; r < rows; ++r)
    for (std::int64_t c = 0; c < cols; ++c)
      m(r, c) = complex_from_json(e[static_cast<std::size_t>(r * cols + c)]);
  return m;
}

Json monomial_to_json(const MonomialOperator& m)
{
  Json target = Json::array();
  Json phase = Json::array();
  for (std::size_t c = 0; c < m.dim(); ++c) {
    target.push_back(static_cast<std::uint64_t>(m.target(c)) + 1);
    phase.push_back(complex_to_json(m.phase(c)));
  }
  Json j;
  j["dim"] = m.dim();
  j["target"] = std::move(target);
  j["phase"] = std::move(phase);
  return j;
}

MonomialOperator monomial_from_json(const Json& j)
{
  const auto dim = field<std::uint64_t>(j, "dim");
  const Json& t = array_field(j, "target", dim);
  const Json& p = array_field(j, "phase", dim);
  std::vector<Index> target(dim);
  std::vector<Complex> phase(dim);
  for (std::size_t c = 0; c < dim; ++c) {
    if (!t[c].is_number_unsigned() || t[c].get<std::uint64_t>() < 1 ||
        t[c].get<std::uint64_t>() > dim)
      throw ParseError("monomial target " + std::to_string(c + 1) + " outside 1..dim");
    target[c] = static_cast<Index>(t[c].get<std::uint64_t>() - 1);
    phase[c] = complex_from_json(p[c]);
  }
  return MonomialOperator(std::move(target), std::move(phase));
}

Json state_to_json(const StateVector& v)
{
  Json amps = Json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i)
    amps.push_back(complex_to_json(v(i)));
  Json j;
  j["dim"] = v.size();
  j["amplitudes"] = std::move(amps);
  return j;
}

StateVector state_from_json(const Json& j)
{
  const auto dim = field<std::uint64_t>(j, "dim");
  const Json& a = array_field(j, "amplitudes", dim);
  StateVector v(static_cast<Eigen::Index>(dim));
  for (std::size_t i = 0; i < dim; ++i)
    v(static_cast<Eigen::Index>(i)) = complex_from_json(a[i]);
  return v;
}

Json spec_to_json(const RepSpec& spec)
{
  Json j;
  j["class"] = static_cast<int>(spec.rep_class);
  j["m"] = spec.m;
  if (spec.rep_class == RepClass::two) {
    j["N"] = spec.N;
    j["k"] = spec.k;
    return j;
  }
  j["k"] = spec.k;
  const auto& per = spec.phases.per_label();
  if (!per)
    throw DomainError("spec_to_json: only separable class 1 phases have a JSON form");
  Json q = Json::array();
  for (Complex z : *per)
    q.push_back(complex_to_json(z));
  j["q"] = std::move(q);
  return j;
}

RepSpec spec_from_json(const Json& j)
{
  const int cls = field<int>(j, "class");
  const int m = field<int>(j, "m");
  const int k = field<int>(j, "k");
  if (cls == 2)
    return RepSpec::class2(m, field<int>(j, "N"), k);
  if (cls != 1)
    throw ParseError("class must be 1 or 2");
  if (!j.contains("q"))
    return RepSpec::class1(m, k);
  const Json& qj = array_field(j, "q", 2 * static_cast<std::size_t>(k));
  std::vector<Complex> q;
  for (const auto& z : qj)
    q.push_back(complex_from_json(z));
  return RepSpec::class1(m, k, PhaseParams::separable(std::move(q)));
}

Json report_to_json(const VerificationReport& r, bool timing)
{
  Json checks = Json::array();
  for (const auto& c : r.checks) {
    Json cj;
    cj["name"] = c.name;
    cj["passed"] = c.passed;
    cj["max_error"] = c.max_error;
    cj["tolerance"] = c.tolerance;
    if (c.witness && !c.passed)
      cj["witness"] = witness_to_json(*c.witness);
    checks.push_back(std::move(cj));
  }
  Json j;
  j["name"] = r.name;
  j["passed"] = r.passed();
  j["max_error"] = r.max_error();
  j["tolerance"] = r.tolerance;
  j["checks"] = std::move(checks);
  if (timing)
    j["elapsed_ms"] = r.elapsed_ms;
  return j;
}

}  // namespace braidforge
