#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace cogmet::grit {

// Structural complexity and representational information for Boolean
// categorical stimuli.
//
// A category F is a set of distinct binary vectors over D dimensions. Its
// per-dimension partial invariance is the fraction of members that stay in
// F when that single dimension is flipped; φ is the Euclidean norm of the
// invariance vector, and ψ(F) = |F|·e^(-k·φ²) with k defaulting to 2/D.
// Representational information h_s(F→F') = (ψ(F') - ψ(F))/ψ(F) for F' ⊆ F.
// Note φ is reconstructed from toggle invariances; this definition is
// normative for this library.

inline constexpr std::uint32_t kMaxDimensions = 20;

// Members are bitmasks: bit j holds the coordinate of dimension j.
using Member = std::uint32_t;

class BooleanCategory {
public:
  // Validates dimensions (1..kMaxDimensions), member range (< 2^D) and
  // distinctness. Members are stored in lexicographic coordinate order
  // (dimension 0 most significant), so set equality is vector equality.
  BooleanCategory(std::uint32_t dimensions, std::vector<Member> members);

  // Rows of 0/1 ints, each of length `dimensions`.
  static BooleanCategory from_rows(std::uint32_t dimensions,
                                   const std::vector<std::vector<int>>& rows);

  std::uint32_t dimensions() const noexcept { return dimensions_; }
  const std::vector<Member>& members() const noexcept { return members_; }
  std::size_t size() const noexcept { return members_.size(); }
  bool empty() const noexcept { return members_.empty(); }

  bool contains(Member m) const noexcept;
  bool subset_of(const BooleanCategory& other) const noexcept;

  // Same members minus one (must be present).
  BooleanCategory without(Member m) const;

  // Coordinates of a member as a "0101" string, dimension 0 first.
  std::string render(Member m) const;

private:
  std::uint32_t dimensions_;
  std::vector<Member> members_;
};

struct StructuralAssessment {
  std::vector<double> partial_invariances; // one proportion per dimension
  double phi = 0.0;        // Euclidean norm of the invariance vector
  double k_scaling = 1.0;  // the k actually used
  double psi = 0.0;        // |F|·e^(-k·φ²); 0 for the empty category
};

// Component i = |{x in F : toggle_i(x) in F}| / |F|. EmptyCategory if F
// is empty.
std::vector<double> partial_invariances(const BooleanCategory& f);

// k defaults to 2/D. The empty category yields psi = 0 by convention.
StructuralAssessment structural_complexity(
    const BooleanCategory& f, std::optional<double> k = std::nullopt);

// h_s(F→F') = (ψ(F') - ψ(F))/ψ(F), >= -1. F' must be a subset of F over
// the same dimensions (NotASubset) and ψ(F) must be positive
// (ZeroBaseComplexity). ψ(F') uses the same k as ψ(F).
double representational_information(const BooleanCategory& f,
                                    const BooleanCategory& f_prime,
                                    std::optional<double> k = std::nullopt);

// h_s(F → F\{x}). NotAMember if x is not in F; TooSmall if |F| < 2.
double element_information(const BooleanCategory& f, Member x,
                           std::optional<double> k = std::nullopt);

// Members sorted ascending by element_information (most valuable first:
// elements lowering structural complexity carry negative values). Ties
// break by lexicographic member order. TooSmall if |F| < 2.
std::vector<std::pair<Member, double>> rank_elements(
    const BooleanCategory& f, std::optional<double> k = std::nullopt);

// {"dimensions": D, "members": [[0,1,...], ...]}
BooleanCategory category_from_json_text(std::string_view text);

} // namespace cogmet::grit
