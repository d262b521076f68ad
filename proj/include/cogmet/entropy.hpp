#pragma once

#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

#include "cogmet/error.hpp"

namespace cogmet::entropy {

// Discrete entropy and information metrics.
//
// Conventions used throughout this module:
//   * 0·log 0 == 0 (limit convention; degenerate distributions are legal).
//   * Distributions are validated, never silently renormalized. The mass sum
//     must be within kSumTolerance of 1.
//   * Units are carried by EntropyUnits: a log base (2 = bits, e = nats) and
//     a multiplicative constant K. Defaults are bits with K = 1.
//   * Gibbs entropy and mutual information use the nonnegative forms
//     (-kΣp·ln p and Σp(x,y)·log[p(x,y)/(p(x)p(y))]).

inline constexpr double kSumTolerance = 1e-9;

// Logarithm base plus the arbitrary scale constant K.
class EntropyUnits {
public:
  EntropyUnits(double base, double scale_k = 1.0);

  static EntropyUnits bits() { return EntropyUnits(2.0); }
  static EntropyUnits nats();

  double base() const noexcept { return base_; }
  double scale_k() const noexcept { return scale_k_; }

  // log_base(x) without the K factor. Routes base 2 and base e through
  // std::log2/std::log so powers of the base stay bit-exact.
  double log(double x) const;

private:
  double base_;
  double scale_k_;
};

// Discrete probability mass vector. Immutable once constructed.
class ProbabilityDistribution {
public:
  // Validates; throws ValidationError with code NegativeProbability,
  // SumOutOfTolerance, or Empty. Values are NOT renormalized.
  explicit ProbabilityDistribution(std::vector<double> probabilities);

  std::span<const double> probabilities() const noexcept { return p_; }
  std::size_t size() const noexcept { return p_.size(); }
  std::size_t support_size() const noexcept; // entries strictly > 0
  double at(std::size_t i) const { return p_.at(i); }

private:
  std::vector<double> p_;
};

// Joint probability mass over two variables; rows index X, columns index Y.
class JointDistribution {
public:
  explicit JointDistribution(const std::vector<std::vector<double>>& rows);

  std::size_t n_x() const noexcept { return n_x_; }
  std::size_t n_y() const noexcept { return n_y_; }
  double at(std::size_t x, std::size_t y) const { return p_[x * n_y_ + y]; }

  ProbabilityDistribution marginal_x() const; // row sums
  ProbabilityDistribution marginal_y() const; // column sums
  JointDistribution transposed() const;

private:
  JointDistribution() = default;
  std::vector<double> p_; // row-major
  std::size_t n_x_ = 0;
  std::size_t n_y_ = 0;
};

// A message of length_n symbols drawn from an alphabet of alphabet_size_s.
struct MessageSpec {
  std::uint64_t alphabet_size_s = 1;
  std::uint64_t length_n = 0;
};

// W equally likely arrangements with a Boltzmann-style constant k.
struct MicrostateCount {
  double w = 1.0;
  double k = 1.0;
};

// S = k·ln W. DomainError if W < 1 or k <= 0.
double boltzmann_entropy(const MicrostateCount& m);

// H = -K·Σ p·log_base p. Always >= 0.
double shannon_entropy(const ProbabilityDistribution& d,
                       const EntropyUnits& u = EntropyUnits::bits());

// Thermodynamic form -k·Σ p·ln p (natural log). DomainError if k <= 0.
double gibbs_entropy(const ProbabilityDistribution& d, double k = 1.0);

// S_max - S where S_max = K·log_base(n), n = universe size (vector length).
// Measures order; 0 at the uniform distribution.
double negentropy(const ProbabilityDistribution& d,
                  const EntropyUnits& u = EntropyUnits::bits());

// H = N·log_base(S).
double hartley_information(const MessageSpec& m,
                           const EntropyUnits& u = EntropyUnits::bits());

// I = m·H(d): information content of a message of m symbols.
double message_information(const ProbabilityDistribution& d, std::uint64_t m,
                           const EntropyUnits& u = EntropyUnits::bits());

// H(X,Y) = -Σ_x Σ_y p(x,y)·log p(x,y).
double joint_entropy(const JointDistribution& j,
                     const EntropyUnits& u = EntropyUnits::bits());

// H(X|Y) = -Σ p(x,y)·log p(x|y), with p(x|y) = p(x,y)/p(y). Cells with
// p(y) = 0 contribute 0.
double conditional_entropy(const JointDistribution& j,
                           const EntropyUnits& u = EntropyUnits::bits());

// I(X;Y) = Σ p(x,y)·log[p(x,y)/(p(x)p(y))], nonnegative form.
double mutual_information(const JointDistribution& j,
                          const EntropyUnits& u = EntropyUnits::bits());

// D_KL(p||q) = Σ p(x)·log[p(x)/q(x)]. Terms with p(x) = 0 contribute 0;
// returns +infinity when p(x) > 0 and q(x) = 0. LengthMismatch on unequal
// sizes.
double relative_entropy(const ProbabilityDistribution& p,
                        const ProbabilityDistribution& q,
                        const EntropyUnits& u = EntropyUnits::bits());

// H_alpha = K/(1-alpha)·log_base(Σ_{p>0} p^alpha). alpha = 1 returns Shannon
// entropy (removable singularity); alpha = 0 returns K·log_base(|support|),
// the Hartley count. DomainError if alpha < 0.
double renyi_entropy(const ProbabilityDistribution& d, double alpha,
                     const EntropyUnits& u = EntropyUnits::bits());

// Shannon bits divided by log2(n), in [0,1]. DomainError if n < 2.
double normalized_entropy(const ProbabilityDistribution& d);

// Relative frequency of each distinct byte, ordered by first appearance.
// ValidationError (Empty) on an empty message.
ProbabilityDistribution empirical_distribution(std::string_view message);

} // namespace cogmet::entropy
