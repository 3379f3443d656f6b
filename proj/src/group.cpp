#include "braidforge/group.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <charconv>
#include <cmath>
#include <set>

namespace braidforge {

namespace {

void check_m(int m)
{
  if (m < 1 || m > kMaxGenerators)
    throw DomainError("E_m: m=" + std::to_string(m) + " outside 1.." +
                      std::to_string(kMaxGenerators));
}

void check_enumeration(int m)
{
  check_m(m);
  if (m > kEnumerationCap)
    throw SizeError("E_m: m=" + std::to_string(m) + " exceeds enumeration cap " +
                    std::to_string(kEnumerationCap));
}

std::uint64_t mask(int m) { return (std::uint64_t{1} << m) - 1; }

}  // namespace

GroupElement::GroupElement(int m, int sign, std::uint64_t exponents)
    : m_(m), sign_(sign), exps_(exponents)
{
  check_m(m);
  if (sign != 1 && sign != -1)
    throw DomainError("group element sign must be +1 or -1");
  if (exponents & ~mask(m))
    throw DomainError("group element exponents exceed m=" + std::to_string(m));
}

GroupElement GroupElement::generator(int m, int i)
{
  if (i < 1 || i > m)
    throw DomainError("generator index " + std::to_string(i) + " outside 1.." + std::to_string(m));
  return {m, 1, std::uint64_t{1} << (i - 1)};
}

GroupElement GroupElement::inverse() const
{
  // e^a e^a = (-1)^{S(a,a)}, so the inverse is (-1)^{S(a,a)} sign * e^a.
  const GroupElement sq = multiply(GroupElement(m_, 1, exps_), GroupElement(m_, 1, exps_));
  return {m_, sign_ * sq.sign(), exps_};
}

GroupElement GroupElement::embedded(int m_prime) const
{
  if (m_prime < m_)
    throw DomainError("cannot embed E_" + std::to_string(m_) + " into E_" +
                      std::to_string(m_prime));
  return {m_prime, sign_, exps_};
}

std::string GroupElement::str() const
{
  std::string out = sign_ < 0 ? "-" : "";
  if (exps_ == 0)
    return out + "1";
  bool first = true;
  for (int i = 1; i <= m_; ++i) {
    if (!exponent(i))
      continue;
    if (!first)
      out += '*';
    out += "e" + std::to_string(i);
    first = false;
  }
  return out;
}

GroupElement GroupElement::parse(std::string_view text, int m)
{
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c)))
      s += c;
  if (s.empty())
    throw ParseError("empty group element");

  GroupElement acc = identity(m);
  std::size_t pos = 0;
  if (s[0] == '-' || s[0] == '+') {
    if (s[0] == '-')
      acc = acc.negated();
    pos = 1;
  }
  if (s.substr(pos) == "1")
    return acc;

  while (pos < s.size()) {
    if (s[pos] != 'e')
      throw ParseError("group element '" + std::string(text) + "': expected 'e' at offset " +
                       std::to_string(pos));
    ++pos;
    int i = 0;
    const auto [ptr, ec] = std::from_chars(s.data() + pos, s.data() + s.size(), i);
    if (ec != std::errc{})
      throw ParseError("group element '" + std::string(text) + "': bad generator index");
    pos = ptr - s.data();
    if (i < 1 || i > m)
      throw ParseError("group element '" + std::string(text) + "': index " + std::to_string(i) +
                       " outside 1.." + std::to_string(m));
    acc = multiply(acc, generator(m, i));
    if (pos < s.size()) {
      if (s[pos] != '*')
        throw ParseError("group element '" + std::string(text) + "': expected '*'");
      ++pos;
      if (pos == s.size())
        throw ParseError("group element '" + std::string(text) + "': trailing '*'");
    }
  }
  return acc;
}

GroupElement multiply(const GroupElement& a, const GroupElement& b)
{
  if (a.m() != b.m())
    throw DomainError("multiply: elements of E_" + std::to_string(a.m()) + " and E_" +
                      std::to_string(b.m()));
  const std::uint64_t alpha = a.exponents();
  const std::uint64_t beta = b.exponents();
  // beta_i crosses alpha_{i+1} (adjacent anticommutation); alpha_i beta_i squares to -1
  const int s = std::popcount(beta & (alpha >> 1)) + std::popcount(alpha & beta);
  const int sign = a.sign() * b.sign() * ((s & 1) ? -1 : 1);
  return {a.m(), sign, alpha ^ beta};
}

GroupElement commutator(const GroupElement& a, const GroupElement& b)
{
  return a * b * a.inverse() * b.inverse();
}

int element_order(const GroupElement& g)
{
  GroupElement p = g;
  int n = 1;
  while (!p.is_identity()) {
    p = p * g;
    ++n;
  }
  return n;
}

std::uint64_t order(int m)
{
  check_m(m);
  return std::uint64_t{1} << (m + 1);
}

std::vector<GroupElement> enumerate(int m)
{
  check_enumeration(m);
  std::vector<GroupElement> out;
  out.reserve(order(m));
  for (std::uint64_t e = 0; e <= mask(m); ++e) {
    out.emplace_back(m, -1, e);
    out.emplace_back(m, 1, e);
  }
  return out;
}

std::vector<GroupElement> enumerate_by_closure(int m)
{
  check_enumeration(m);
  std::set<GroupElement> seen{GroupElement::identity(m)};
  std::vector<GroupElement> frontier{GroupElement::identity(m)};
  while (!frontier.empty()) {
    std::vector<GroupElement> next;
    for (const auto& g : frontier) {
      for (int i = 1; i <= m; ++i) {
        const GroupElement h = g * GroupElement::generator(m, i);
        if (seen.insert(h).second)
          next.push_back(h);
      }
    }
    frontier = std::move(next);
  }
  return {seen.begin(), seen.end()};
}

std::string to_string(CenterIso iso)
{
  switch (iso) {
    case CenterIso::z2:
      return "Z2";
    case CenterIso::z2xz2:
      return "Z2xZ2";
    case CenterIso::z4:
      return "Z4";
  }
  return "?";
}

CenterDescription center(int m)
{
  check_m(m);
  CenterDescription c;
  c.elements = {GroupElement::identity(m), GroupElement::minus_identity(m)};
  if (m % 2 == 0) {
    c.iso_class = CenterIso::z2;
  } else {
    std::uint64_t odd = 0;
    for (int i = 1; i <= m; i += 2)
      odd |= std::uint64_t{1} << (i - 1);
    const GroupElement z(m, 1, odd);
    c.elements.push_back(z);
    c.elements.push_back(z.negated());
    c.iso_class = element_order(z) == 2 ? CenterIso::z2xz2 : CenterIso::z4;
  }
  std::sort(c.elements.begin(), c.elements.end());
  return c;
}

std::vector<GroupElement> center_by_enumeration(int m)
{
  std::vector<GroupElement> out;
  for (const auto& g : enumerate(m)) {
    bool central = true;
    for (int i = 1; i <= m && central; ++i) {
      const GroupElement e = GroupElement::generator(m, i);
      central = (g * e) == (e * g);
    }
    if (central)
      out.push_back(g);
  }
  return out;
}

std::vector<GroupElement> commutator_subgroup(int m)
{
  const auto all = enumerate(m);
  std::set<GroupElement> comms;
  for (const auto& a : all)
    for (const auto& b : all)
      comms.insert(commutator(a, b));
  return {comms.begin(), comms.end()};
}

VerificationReport verify_group_structure(int m)
{
  check_enumeration(m);
  VerificationReport report;
  report.name = "group E_" + std::to_string(m);
  report.tolerance = 0.0;
  ReportTimer timer(report);

  const auto closure = enumerate_by_closure(m);
  const double order_gap =
      std::abs(static_cast<double>(closure.size()) - static_cast<double>(order(m)));
  report.add(CheckResult::from_error("order", order_gap, 0.0,
                                     Witness{0, 0, static_cast<double>(closure.size()),
                                             static_cast<double>(order(m)), "closure vs 2^(m+1)"}));

  const CenterDescription c = center(m);
  const auto brute = center_by_enumeration(m);
  bool iso_ok = true;
  if (c.elements.size() == 4) {
    int max_order = 1;
    for (const auto& g : c.elements)
      max_order = std::max(max_order, element_order(g));
    iso_ok = (c.iso_class == CenterIso::z4) == (max_order == 4);
  } else {
    iso_ok = c.iso_class == CenterIso::z2;
  }
  report.add(CheckResult::from_error("center", (c.elements == brute && iso_ok) ? 0.0 : 1.0, 0.0,
                                     Witness{0, 0, static_cast<double>(c.elements.size()),
                                             static_cast<double>(brute.size()),
                                             to_string(c.iso_class)}));

  if (m >= 2) {
    const auto comms = commutator_subgroup(m);
    const std::vector<GroupElement> expected{GroupElement::minus_identity(m),
                                             GroupElement::identity(m)};
    std::vector<GroupElement> sorted_expected = expected;
    std::sort(sorted_expected.begin(), sorted_expected.end());
    report.add(CheckResult::from_error("commutator-subgroup", comms == sorted_expected ? 0.0 : 1.0,
                                       0.0,
                                       Witness{0, 0, static_cast<double>(comms.size()), 2.0, {}}));
  }
  return report;
}

}  // namespace braidforge
