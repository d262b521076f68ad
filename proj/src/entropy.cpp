#include "cogmet/entropy.hpp"

#include <array>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

namespace cogmet::entropy {

namespace {

double checked_sum_to_one(std::span<const double> values,
                          const char* what) {
  double sum = 0.0;
  for (double v : values) {
    if (!(v >= 0.0)) { // negated comparison also rejects NaN
      throw ValidationError("NegativeProbability",
                            std::string(what) + " entry " + std::to_string(v) +
                                " is negative or not a number");
    }
    sum += v;
  }
  if (!(std::abs(sum - 1.0) <= kSumTolerance)) {
    throw ValidationError("SumOutOfTolerance",
                          std::string(what) + " mass sums to " +
                              std::to_string(sum) + "; |sum-1| must be <= 1e-9");
  }
  return sum;
}

} // namespace

EntropyUnits::EntropyUnits(double base, double scale_k)
    : base_(base), scale_k_(scale_k) {
  if (!(base > 1.0)) {
    throw ValidationError("EntropyUnits", "log base must be > 1");
  }
  if (!(scale_k > 0.0)) {
    throw ValidationError("EntropyUnits", "scale K must be > 0");
  }
}

EntropyUnits EntropyUnits::nats() {
  return EntropyUnits(std::numbers::e);
}

double EntropyUnits::log(double x) const {
  if (base_ == 2.0) return std::log2(x);
  if (base_ == std::numbers::e) return std::log(x);
  return std::log(x) / std::log(base_);
}

ProbabilityDistribution::ProbabilityDistribution(
    std::vector<double> probabilities)
    : p_(std::move(probabilities)) {
  if (p_.empty()) {
    throw ValidationError("Empty", "distribution has no entries");
  }
  checked_sum_to_one(p_, "distribution");
}

std::size_t ProbabilityDistribution::support_size() const noexcept {
  std::size_t n = 0;
  for (double v : p_) n += (v > 0.0);
  return n;
}

JointDistribution::JointDistribution(
    const std::vector<std::vector<double>>& rows) {
  if (rows.empty() || rows.front().empty()) {
    throw ValidationError("Empty", "joint distribution has no cells");
  }
  n_x_ = rows.size();
  n_y_ = rows.front().size();
  p_.reserve(n_x_ * n_y_);
  for (const auto& row : rows) {
    if (row.size() != n_y_) {
      throw ValidationError("LengthMismatch",
                            "joint distribution rows have unequal lengths");
    }
    p_.insert(p_.end(), row.begin(), row.end());
  }
  checked_sum_to_one(p_, "joint distribution");
}

ProbabilityDistribution JointDistribution::marginal_x() const {
  std::vector<double> sums(n_x_, 0.0);
  for (std::size_t x = 0; x < n_x_; ++x)
    for (std::size_t y = 0; y < n_y_; ++y) sums[x] += at(x, y);
  return ProbabilityDistribution(std::move(sums));
}

ProbabilityDistribution JointDistribution::marginal_y() const {
  std::vector<double> sums(n_y_, 0.0);
  for (std::size_t x = 0; x < n_x_; ++x)
    for (std::size_t y = 0; y < n_y_; ++y) sums[y] += at(x, y);
  return ProbabilityDistribution(std::move(sums));
}

JointDistribution JointDistribution::transposed() const {
  JointDistribution t;
  t.n_x_ = n_y_;
  t.n_y_ = n_x_;
  t.p_.resize(p_.size());
  for (std::size_t x = 0; x < n_x_; ++x)
    for (std::size_t y = 0; y < n_y_; ++y) t.p_[y * n_x_ + x] = at(x, y);
  return t;
}

double boltzmann_entropy(const MicrostateCount& m) {
  if (!(m.w >= 1.0)) {
    throw MathDomainError("DomainError", "microstate count W must be >= 1");
  }
  if (!(m.k > 0.0)) {
    throw MathDomainError("DomainError", "constant k must be > 0");
  }
  return m.k * std::log(m.w);
}

double shannon_entropy(const ProbabilityDistribution& d,
                       const EntropyUnits& u) {
  double sum = 0.0;
  for (double p : d.probabilities()) {
    if (p > 0.0) sum += p * u.log(p);
  }
  return -u.scale_k() * sum + 0.0; // +0.0 folds -0 into +0
}

double gibbs_entropy(const ProbabilityDistribution& d, double k) {
  if (!(k > 0.0)) {
    throw MathDomainError("DomainError", "constant k must be > 0");
  }
  double sum = 0.0;
  for (double p : d.probabilities()) {
    if (p > 0.0) sum += p * std::log(p);
  }
  return -k * sum + 0.0;
}

double negentropy(const ProbabilityDistribution& d, const EntropyUnits& u) {
  const double s_max = u.scale_k() * u.log(static_cast<double>(d.size()));
  return s_max - shannon_entropy(d, u);
}

double hartley_information(const MessageSpec& m, const EntropyUnits& u) {
  if (m.alphabet_size_s < 1) {
    throw MathDomainError("DomainError", "alphabet size S must be >= 1");
  }
  return static_cast<double>(m.length_n) * u.scale_k() *
         u.log(static_cast<double>(m.alphabet_size_s));
}

double message_information(const ProbabilityDistribution& d, std::uint64_t m,
                           const EntropyUnits& u) {
  return static_cast<double>(m) * shannon_entropy(d, u);
}

double joint_entropy(const JointDistribution& j, const EntropyUnits& u) {
  double sum = 0.0;
  for (std::size_t x = 0; x < j.n_x(); ++x) {
    for (std::size_t y = 0; y < j.n_y(); ++y) {
      const double p = j.at(x, y);
      if (p > 0.0) sum += p * u.log(p);
    }
  }
  return -u.scale_k() * sum + 0.0;
}

double conditional_entropy(const JointDistribution& j, const EntropyUnits& u) {
  const auto p_y = j.marginal_y();
  double sum = 0.0;
  for (std::size_t x = 0; x < j.n_x(); ++x) {
    for (std::size_t y = 0; y < j.n_y(); ++y) {
      const double p = j.at(x, y);
      if (p > 0.0) sum += p * u.log(p / p_y.at(y));
    }
  }
  return -u.scale_k() * sum + 0.0;
}

double mutual_information(const JointDistribution& j, const EntropyUnits& u) {
  const auto p_x = j.marginal_x();
  const auto p_y = j.marginal_y();
  double sum = 0.0;
  for (std::size_t x = 0; x < j.n_x(); ++x) {
    for (std::size_t y = 0; y < j.n_y(); ++y) {
      const double p = j.at(x, y);
      if (p > 0.0) sum += p * u.log(p / (p_x.at(x) * p_y.at(y)));
    }
  }
  return u.scale_k() * sum + 0.0;
}

double relative_entropy(const ProbabilityDistribution& p,
                        const ProbabilityDistribution& q,
                        const EntropyUnits& u) {
  if (p.size() != q.size()) {
    throw ValidationError("LengthMismatch",
                          "p has " + std::to_string(p.size()) +
                              " entries, q has " + std::to_string(q.size()));
  }
  double sum = 0.0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    const double pi = p.at(i);
    if (pi == 0.0) continue;
    if (q.at(i) == 0.0) return std::numeric_limits<double>::infinity();
    sum += pi * u.log(pi / q.at(i));
  }
  return u.scale_k() * sum + 0.0;
}

double renyi_entropy(const ProbabilityDistribution& d, double alpha,
                     const EntropyUnits& u) {
  if (!(alpha >= 0.0)) {
    throw MathDomainError("DomainError", "alpha must be >= 0");
  }
  if (alpha == 1.0) return shannon_entropy(d, u);
  if (alpha == 0.0) {
    return u.scale_k() * u.log(static_cast<double>(d.support_size()));
  }
  double sum = 0.0;
  for (double p : d.probabilities()) {
    if (p > 0.0) sum += std::pow(p, alpha);
  }
  return u.scale_k() / (1.0 - alpha) * u.log(sum) + 0.0;
}

double normalized_entropy(const ProbabilityDistribution& d) {
  if (d.size() < 2) {
    throw MathDomainError("DomainError",
                          "normalized entropy needs >= 2 outcomes (S_max = 0)");
  }
  return shannon_entropy(d, EntropyUnits::bits()) /
         std::log2(static_cast<double>(d.size()));
}

ProbabilityDistribution empirical_distribution(std::string_view message) {
  if (message.empty()) {
    throw ValidationError("Empty", "message has no symbols");
  }
  std::array<int, 256> slot{};
  slot.fill(-1);
  std::vector<double> counts;
  for (unsigned char c : message) {
    if (slot[c] < 0) {
      slot[c] = static_cast<int>(counts.size());
      counts.push_back(0.0);
    }
    counts[static_cast<std::size_t>(slot[c])] += 1.0;
  }
  const double total = static_cast<double>(message.size());
  for (double& c : counts) c /= total;
  return ProbabilityDistribution(std::move(counts));
}

} // namespace cogmet::entropy
