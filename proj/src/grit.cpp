#include "cogmet/grit.hpp"

#include <algorithm>
#include <cmath>

#include "json.hpp"

#include "cogmet/error.hpp"

namespace cogmet::grit {

namespace {

// Lexicographic order of the coordinate tuple (dimension 0 compared first).
// Equivalent to numeric order of the bit-reversed mask.
Member lex_key(Member m, std::uint32_t dims) {
  Member key = 0;
  for (std::uint32_t j = 0; j < dims; ++j) {
    key = (key << 1) | ((m >> j) & 1u);
  }
  return key;
}

double resolve_k(const BooleanCategory& f, std::optional<double> k) {
  const double value =
      k.value_or(2.0 / static_cast<double>(f.dimensions()));
  if (!(value > 0.0)) {
    throw MathDomainError("DomainError", "scaling k must be > 0");
  }
  return value;
}

double squared_invariance(const std::vector<double>& components) {
  double sum = 0.0;
  for (double v : components) sum += v * v;
  return sum;
}

} // namespace

BooleanCategory::BooleanCategory(std::uint32_t dimensions,
                                 std::vector<Member> members)
    : dimensions_(dimensions), members_(std::move(members)) {
  if (dimensions_ < 1 || dimensions_ > kMaxDimensions) {
    throw ValidationError("Dimensions",
                          "dimensions must be in 1.." +
                              std::to_string(kMaxDimensions));
  }
  const Member limit = Member{1} << dimensions_;
  for (Member m : members_) {
    if (m >= limit) {
      throw ValidationError("MemberOutOfRange",
                            "member mask " + std::to_string(m) +
                                " does not fit " +
                                std::to_string(dimensions_) + " dimensions");
    }
  }
  std::sort(members_.begin(), members_.end(), [&](Member a, Member b) {
    return lex_key(a, dimensions_) < lex_key(b, dimensions_);
  });
  if (std::adjacent_find(members_.begin(), members_.end()) !=
      members_.end()) {
    throw ValidationError("DuplicateMember",
                          "category members must be distinct");
  }
}

BooleanCategory BooleanCategory::from_rows(
    std::uint32_t dimensions, const std::vector<std::vector<int>>& rows) {
  std::vector<Member> members;
  members.reserve(rows.size());
  for (const auto& row : rows) {
    if (row.size() != dimensions) {
      throw ValidationError("LengthMismatch",
                            "member row length " +
                                std::to_string(row.size()) +
                                " does not match dimensions " +
                                std::to_string(dimensions));
    }
    Member m = 0;
    for (std::uint32_t j = 0; j < dimensions; ++j) {
      if (row[j] != 0 && row[j] != 1) {
        throw ValidationError("MemberOutOfRange",
                              "member coordinates must be 0 or 1");
      }
      m |= static_cast<Member>(row[j]) << j;
    }
    members.push_back(m);
  }
  return BooleanCategory(dimensions, std::move(members));
}

bool BooleanCategory::contains(Member m) const noexcept {
  return std::find(members_.begin(), members_.end(), m) != members_.end();
}

bool BooleanCategory::subset_of(const BooleanCategory& other) const noexcept {
  if (dimensions_ != other.dimensions_) return false;
  return std::all_of(members_.begin(), members_.end(),
                     [&](Member m) { return other.contains(m); });
}

BooleanCategory BooleanCategory::without(Member m) const {
  std::vector<Member> rest;
  rest.reserve(members_.size());
  bool removed = false;
  for (Member member : members_) {
    if (member == m && !removed) {
      removed = true;
      continue;
    }
    rest.push_back(member);
  }
  if (!removed) {
    throw ValidationError("NotAMember",
                          "member " + std::to_string(m) + " is not in F");
  }
  return BooleanCategory(dimensions_, std::move(rest));
}

std::string BooleanCategory::render(Member m) const {
  std::string out(dimensions_, '0');
  for (std::uint32_t j = 0; j < dimensions_; ++j) {
    if ((m >> j) & 1u) out[j] = '1';
  }
  return out;
}

std::vector<double> partial_invariances(const BooleanCategory& f) {
  if (f.empty()) {
    throw ValidationError("EmptyCategory",
                          "partial invariances need a non-empty category");
  }
  std::vector<double> components(f.dimensions(), 0.0);
  const auto size = static_cast<double>(f.size());
  for (std::uint32_t j = 0; j < f.dimensions(); ++j) {
    std::size_t stays = 0;
    for (Member m : f.members()) {
      stays += f.contains(m ^ (Member{1} << j));
    }
    components[j] = static_cast<double>(stays) / size;
  }
  return components;
}

StructuralAssessment structural_complexity(const BooleanCategory& f,
                                           std::optional<double> k) {
  StructuralAssessment a;
  a.k_scaling = resolve_k(f, k);
  if (f.empty()) {
    a.partial_invariances.assign(f.dimensions(), 0.0);
    return a; // psi(∅) = 0 by convention
  }
  a.partial_invariances = partial_invariances(f);
  const double phi2 = squared_invariance(a.partial_invariances);
  a.phi = std::sqrt(phi2);
  a.psi = static_cast<double>(f.size()) * std::exp(-a.k_scaling * phi2);
  return a;
}

double representational_information(const BooleanCategory& f,
                                    const BooleanCategory& f_prime,
                                    std::optional<double> k) {
  if (!f_prime.subset_of(f)) {
    throw ValidationError("NotASubset",
                          "F' must be a subset of F over the same dimensions");
  }
  const double k_used = resolve_k(f, k);
  const double psi_f = structural_complexity(f, k_used).psi;
  if (!(psi_f > 0.0)) {
    throw MathDomainError("ZeroBaseComplexity",
                          "psi(F) is zero (empty base category)");
  }
  const double psi_fp = structural_complexity(f_prime, k_used).psi;
  return (psi_fp - psi_f) / psi_f;
}

double element_information(const BooleanCategory& f, Member x,
                           std::optional<double> k) {
  if (f.size() < 2) {
    throw ValidationError("TooSmall",
                          "element valuation needs |F| >= 2");
  }
  return representational_information(f, f.without(x), k);
}

std::vector<std::pair<Member, double>> rank_elements(
    const BooleanCategory& f, std::optional<double> k) {
  if (f.size() < 2) {
    throw ValidationError("TooSmall", "ranking needs |F| >= 2");
  }
  std::vector<std::pair<Member, double>> ranked;
  ranked.reserve(f.size());
  for (Member m : f.members()) {
    ranked.emplace_back(m, element_information(f, m, k));
  }
  // Members are already in lexicographic order; stable sort keeps it as
  // the tie-break.
  std::stable_sort(ranked.begin(), ranked.end(),
                   [](const auto& a, const auto& b) {
                     return a.second < b.second;
                   });
  return ranked;
}

BooleanCategory category_from_json_text(std::string_view text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ValidationError("BadCategory", e.what());
  }
  try {
    const auto dimensions = j.at("dimensions").get<std::uint32_t>();
    const auto rows = j.at("members").get<std::vector<std::vector<int>>>();
    return BooleanCategory::from_rows(dimensions, rows);
  } catch (const nlohmann::json::exception& e) {
    throw ValidationError("BadCategory", e.what());
  }
}

} // namespace cogmet::grit
