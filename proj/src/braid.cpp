#include "braidforge/braid.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <map>
#include <set>

namespace braidforge {

BraidWord::BraidWord(int strands, std::vector<BraidLetter> letters)
    : strands_(strands), letters_(std::move(letters))
{
  if (strands < 2)
    throw DomainError("braid word needs at least 2 strands");
  for (const auto& l : letters_) {
    if (l.index < 1 || l.index > strands - 1)
      throw DomainError("braid generator b" + std::to_string(l.index) + " outside 1.." +
                        std::to_string(strands - 1));
    if (l.exponent != 1 && l.exponent != -1)
      throw DomainError("braid letter exponent must be +1 or -1");
  }
}

BraidWord BraidWord::parse(std::string_view text, int strands)
{
  std::vector<BraidLetter> letters;
  std::size_t pos = 0;
  auto fail = [&](const std::string& why) {
    throw ParseError("braid word '" + std::string(text) + "': " + why);
  };
  while (pos < text.size()) {
    if (std::isspace(static_cast<unsigned char>(text[pos]))) {
      ++pos;
      continue;
    }
    if (text[pos] != 'b')
      fail("expected 'b' at offset " + std::to_string(pos));
    ++pos;
    int index = 0;
    auto [ptr, ec] = std::from_chars(text.data() + pos, text.data() + text.size(), index);
    if (ec != std::errc{})
      fail("bad generator index");
    pos = ptr - text.data();
    int exponent = 1;
    if (pos < text.size() && text[pos] == '^') {
      ++pos;
      auto [p2, ec2] = std::from_chars(text.data() + pos, text.data() + text.size(), exponent);
      if (ec2 != std::errc{} || (exponent != 1 && exponent != -1))
        fail("exponent must be 1 or -1");
      pos = p2 - text.data();
    }
    if (pos < text.size() && !std::isspace(static_cast<unsigned char>(text[pos])))
      fail("unexpected character at offset " + std::to_string(pos));
    if (index < 1 || index > strands - 1)
      fail("generator b" + std::to_string(index) + " outside 1.." + std::to_string(strands - 1));
    letters.push_back({index, exponent});
  }
  return BraidWord(strands, std::move(letters));
}

BraidWord BraidWord::inverse() const
{
  std::vector<BraidLetter> inv(letters_.rbegin(), letters_.rend());
  for (auto& l : inv)
    l.exponent = -l.exponent;
  return BraidWord(strands_, std::move(inv));
}

std::string BraidWord::str() const
{
  std::string out;
  for (const auto& l : letters_) {
    if (!out.empty())
      out += ' ';
    out += "b" + std::to_string(l.index);
    if (l.exponent < 0)
      out += "^-1";
  }
  return out;
}

BraidRep::BraidRep(RepSpec spec) : spec_(std::move(spec))
{
  dim_ = spec_.dimension();
  phi_ = generators(spec_, Validation::strict);
}

const MonomialOperator& BraidRep::phi(int i) const
{
  if (i < 1 || i > spec_.m)
    throw DomainError("braid generator b" + std::to_string(i) + " outside 1.." +
                      std::to_string(spec_.m));
  return phi_[i - 1];
}

IdentityPlus BraidRep::factor(int i, int exponent) const
{
  if (exponent != 1 && exponent != -1)
    throw DomainError("braid factor exponent must be +1 or -1");
  return {kInvSqrt2, exponent * kInvSqrt2, &phi(i)};
}

TwoBandOperator braid_generator(const BraidRep& rep, int i, int exponent)
{
  const IdentityPlus f = rep.factor(i, exponent);
  return TwoBandOperator::identity_plus(f.alpha, f.beta, *f.m);
}

StateVector apply_word(const BraidRep& rep, const BraidWord& w, const StateVector& v)
{
  if (static_cast<std::size_t>(v.size()) != rep.dim())
    throw DimensionError("apply_word: state has dimension " + std::to_string(v.size()) +
                         ", representation " + std::to_string(rep.dim()));
  if (w.strands() != rep.strands())
    throw DimensionError("apply_word: word on " + std::to_string(w.strands()) +
                         " strands, representation on " + std::to_string(rep.strands()));
  StateVector out = v;
  const auto& letters = w.letters();
  for (auto it = letters.rbegin(); it != letters.rend(); ++it) {
    const IdentityPlus f = rep.factor(it->index, it->exponent);
    out = f.alpha * out + f.beta * monomial_apply(*f.m, out);
  }
  return out;
}

DenseMatrix word_matrix(const BraidRep& rep, const BraidWord& w, std::size_t cap)
{
  require_dense(rep.dim(), cap, "word_matrix");
  if (w.strands() != rep.strands())
    throw DimensionError("word_matrix: strand count mismatch");
  DenseMatrix acc = DenseMatrix::Identity(rep.dim(), rep.dim());
  for (const auto& l : w.letters())
    acc = acc * braid_generator(rep, l.index, l.exponent).to_dense(cap);
  return acc;
}

namespace {

struct Accumulator {
  double error = 0.0;
  std::optional<Witness> witness;

  void note(const CheckResult& c, const std::string& detail)
  {
    if (c.max_error > error || (!witness && c.witness)) {
      error = std::max(error, c.max_error);
      witness = c.witness;
      if (witness)
        witness->detail = detail;
    }
  }
};

std::string pair_detail(int i, int j) { return "i=" + std::to_string(i) + ",j=" + std::to_string(j); }

}  // namespace

VerificationReport verify_braid_relations(const BraidRep& rep, const VerifyOptions& opts)
{
  VerificationReport report;
  report.name = "braid-relations " + rep.spec().str();
  report.tolerance = opts.tolerance;
  ReportTimer timer(report);

  const std::size_t dim = rep.dim();
  const int m = rep.spec().m;
  Accumulator far, braid, unit, square;

  for (int i = 1; i <= m; ++i) {
    const auto bi = rep.factor(i);
    const MonomialOperator adj = rep.phi(i).adjoint();
    const IdentityPlus bi_dag{kInvSqrt2, kInvSqrt2, &adj};
    unit.note(compare_operators("unitarity", OperatorExpr(dim, {bi, bi_dag}), OperatorExpr(dim, {}),
                                opts),
              "i=" + std::to_string(i));
    square.note(compare_operators("square", OperatorExpr(dim, {bi, bi}),
                                  OperatorExpr(dim, {rep.phi(i)}), opts),
                "i=" + std::to_string(i));
    for (int j = i + 1; j <= m; ++j) {
      const auto bj = rep.factor(j);
      if (j == i + 1)
        braid.note(compare_operators("braid", OperatorExpr(dim, {bi, bj, bi}),
                                     OperatorExpr(dim, {bj, bi, bj}), opts),
                   pair_detail(i, j));
      else
        far.note(compare_operators("far", OperatorExpr(dim, {bi, bj}), OperatorExpr(dim, {bj, bi}),
                                   opts),
                 pair_detail(i, j));
    }
  }

  report.add(CheckResult::from_error("far-commutation", far.error, opts.tolerance, far.witness));
  report.add(CheckResult::from_error("braid-relation", braid.error, opts.tolerance, braid.witness));
  report.add(CheckResult::from_error("unitarity", unit.error, opts.tolerance, unit.witness));
  report.add(
      CheckResult::from_error("square-equals-phi", square.error, opts.tolerance, square.witness));
  return report;
}

VerificationReport verify_gybe(int N, int k, const VerifyOptions& opts)
{
  if (N < 2 || k < 1 || k > N - 1)
    throw DomainError("verify_gybe needs N >= 2 and 1 <= k <= N-1 (got N=" + std::to_string(N) +
                      ", k=" + std::to_string(k) + ")");
  VerificationReport report;
  report.name = "gybe N=" + std::to_string(N) + " k=" + std::to_string(k);
  report.tolerance = opts.tolerance;
  ReportTimer timer(report);

  const MonomialOperator r = almost_complex_2n(N);
  const MonomialOperator id = MonomialOperator::identity(std::size_t{1} << k);
  const MonomialOperator left = monomial_kron(r, id);
  const MonomialOperator right = monomial_kron(id, r);
  const std::size_t dim = left.dim();
  const IdentityPlus a{kInvSqrt2, kInvSqrt2, &left};
  const IdentityPlus b{kInvSqrt2, kInvSqrt2, &right};
  report.add(compare_operators("gybe", OperatorExpr(dim, {a, b, a}), OperatorExpr(dim, {b, a, b}),
                               opts));
  return report;
}

VerificationReport conjugation_check(const BraidRep& rep, const VerifyOptions& opts)
{
  VerificationReport report;
  report.name = "conjugation " + rep.spec().str();
  report.tolerance = opts.tolerance;
  ReportTimer timer(report);

  const std::size_t dim = rep.dim();
  const int m = rep.spec().m;
  Accumulator adjacent, distant;
  for (int i = 1; i <= m; ++i) {
    const auto bi = rep.factor(i);
    const auto bi_inv = rep.factor(i, -1);
    for (int j = 1; j <= m; ++j) {
      if (j == i)
        continue;
      const OperatorExpr lhs(dim, {bi, rep.phi(j), bi_inv});
      if (std::abs(i - j) == 1)
        adjacent.note(
            compare_operators("adjacent", lhs, OperatorExpr(dim, {rep.phi(i), rep.phi(j)}), opts),
            pair_detail(i, j));
      else
        distant.note(compare_operators("distant", lhs, OperatorExpr(dim, {rep.phi(j)}), opts),
                     pair_detail(i, j));
    }
  }
  report.add(CheckResult::from_error("adjacent-conjugation", adjacent.error, opts.tolerance,
                                     adjacent.witness));
  report.add(CheckResult::from_error("distant-conjugation", distant.error, opts.tolerance,
                                     distant.witness));
  return report;
}

namespace {

using Fingerprint = std::vector<long long>;

Fingerprint fingerprint(const DenseMatrix& a)
{
  Fingerprint f;
  f.reserve(2 * a.size());
  for (Eigen::Index c = 0; c < a.cols(); ++c) {
    for (Eigen::Index r = 0; r < a.rows(); ++r) {
      f.push_back(std::llround(a(r, c).real() * 1e9));
      f.push_back(std::llround(a(r, c).imag() * 1e9));
    }
  }
  return f;
}

}  // namespace

CosetCount count_cosets(const BraidRep& rep, std::size_t max_elements)
{
  const std::size_t cap = dense_cap();
  require_dense(rep.dim(), cap, "count_cosets");
  const int m = rep.spec().m;

  std::vector<DenseMatrix> gens;
  for (int i = 1; i <= m; ++i)
    gens.push_back(braid_generator(rep, i).to_dense(cap));

  std::map<Fingerprint, DenseMatrix> group;
  const DenseMatrix id = DenseMatrix::Identity(rep.dim(), rep.dim());
  group.emplace(fingerprint(id), id);
  std::vector<DenseMatrix> frontier{id};
  while (!frontier.empty()) {
    std::vector<DenseMatrix> next;
    for (const auto& g : frontier) {
      for (const auto& s : gens) {
        DenseMatrix h = g * s;
        auto [it, inserted] = group.emplace(fingerprint(h), h);
        if (inserted) {
          if (group.size() > max_elements)
            throw SizeError("count_cosets: image group exceeds " + std::to_string(max_elements) +
                            " elements");
          next.push_back(std::move(h));
        }
      }
    }
    frontier = std::move(next);
  }

  std::map<Fingerprint, DenseMatrix> sub;
  for (const auto& g : enumerate(m)) {
    DenseMatrix d = monomial_to_dense(rep_of_element(rep.phis(), g), cap);
    sub.emplace(fingerprint(d), std::move(d));
  }

  std::set<Fingerprint> reps;
  for (const auto& [key, g] : group) {
    Fingerprint best;
    for (const auto& [hkey, h] : sub) {
      Fingerprint f = fingerprint(g * h);
      if (best.empty() || f < best)
        best = std::move(f);
    }
    reps.insert(std::move(best));
  }
  return {group.size(), sub.size(), reps.size()};
}

std::optional<GroupElement> conjugate_in_image(const BraidRep& rep, const BraidWord& w, int i,
                                               double tol)
{
  const std::size_t dim = rep.dim();
  require_dense(dim, dense_cap(), "conjugate_in_image");
  const MonomialOperator& t = rep.phi(i);
  const BraidWord winv = w.inverse();
  std::vector<BandEntry> col(dim);
  for (std::size_t j = 0; j < dim; ++j) {
    const StateVector v =
        apply_word(rep, w, monomial_apply(t, apply_word(rep, winv, basis_state(dim, j + 1))));
    Eigen::Index r = 0;
    v.cwiseAbs().maxCoeff(&r);
    col[j] = {static_cast<Index>(r), v(r)};
    for (Eigen::Index k = 0; k < v.size(); ++k)
      if (k != r && std::abs(v(k)) > tol)
        return std::nullopt;
  }
  for (const auto& g : enumerate(rep.spec().m)) {
    const MonomialOperator candidate = rep_of_element(rep.phis(), g);
    bool match = true;
    for (std::size_t j = 0; j < dim && match; ++j)
      match = candidate.target(j) == col[j].row &&
              std::abs(candidate.phase(j) - col[j].value) <= tol;
    if (match)
      return g;
  }
  return std::nullopt;
}

}  // namespace braidforge
