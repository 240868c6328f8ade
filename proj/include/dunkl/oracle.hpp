#ifndef DUNKL_ORACLE_HPP
#define DUNKL_ORACLE_HPP

#include <complex>
#include <cstdint>
#include <random>
#include <vector>

#include "dunkl/identities.hpp"

namespace dunkl {

using cplx = std::complex<double>;

/// r^s exp(c r^2) P(z) with P(z) = sum_n p[n] z^(lo + n).
struct TestFunc {
  int s = 0;
  double c = -0.5;
  int lo = 0;
  std::vector<cplx> p;
};

/// Evaluation point in the fundamental sector plus parameter values.
struct SamplePoint {
  double r = 1.0;
  double phi = 0.1;
  double a = 1.0;
  double b = 1.0;
  double w2 = 1.0;
};

struct OracleConfig {
  int trials = 100;
  double tol = 1e-9;
  std::uint64_t seed = 271828;
  /// Lower bound on |sin k phi| and |cos k phi| at sample points.
  double margin = 0.05;
  /// Samples whose values are all below this magnitude are redrawn.
  double degenerate = 1e-6;
  int redraw_cap = 16;
};

struct OracleReport {
  int trials = 0;
  int failed_trials = 0;
  double max_deviation = 0;
  bool pass = true;
};

/// Truncated Taylor series in (dr, dphi) around a point, total degree <= order.
class Jet {
public:
  Jet() = default;
  explicit Jet(int order) : order_(order), c_(static_cast<std::size_t>((order + 1) * (order + 1))) {}

  int order() const { return order_; }
  cplx& at(int a, int b) { return c_[static_cast<std::size_t>(a * (order_ + 1) + b)]; }
  cplx at(int a, int b) const { return c_[static_cast<std::size_t>(a * (order_ + 1) + b)]; }
  cplx value() const { return c_.empty() ? cplx{} : c_[0]; }

  Jet truncated(int order) const;
  Jet& operator+=(const Jet& o);
  Jet scaled(cplx s) const;
  friend Jet operator*(const Jet& x, const Jet& y);
  Jet reciprocal() const;
  Jet d_r() const;
  Jet d_phi() const;
  /// dphi -> -dphi.
  Jet flipped() const;

private:
  int order_ = -1;
  std::vector<cplx> c_;
};

SamplePoint draw_point(int k, std::mt19937_64& rng, double margin);
TestFunc draw_func(std::mt19937_64& rng);

/// Value of sum_words (W_1 ... W_n) f at the point. With symmetrise, f is
/// replaced by its average over D_2k. No reordering of factors takes place.
cplx evaluate(const OpSum& sum, const TestFunc& f, const SamplePoint& pt, int k, bool symmetrise = false);
cplx evaluate(const OpExpr& x, const TestFunc& f, const SamplePoint& pt, bool symmetrise = false);

/// Formal adjoint of each word, as products of generator adjoints.
OpSum adjoint_words(const OpSum& sum);

OracleReport numeric_check(const OpSum& lhs, const OpSum& rhs, int k, const OracleConfig& cfg, bool symmetrise = false);
OracleReport numeric_check(const OpExpr& lhs, const OpExpr& rhs, const OracleConfig& cfg);
OracleReport numeric_check(const OpRelation& rel, int k, const OracleConfig& cfg);
OracleReport numeric_check(const ScalarRelation& rel, int k, const OracleConfig& cfg);
/// Worst case over every relation of a row; skipped rows report zero trials.
OracleReport numeric_check(const CheckCase& c, const OracleConfig& cfg);

} // namespace dunkl

#endif // DUNKL_ORACLE_HPP
