#pragma once

#include <array>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "flagcert/expressions.hpp"
#include "flagcert/matrix.hpp"

namespace flagcert {

inline constexpr std::string_view kCertificateHeader = "#flagcert certificate v1";

/// Payload of the flag identity
///   N - 3E = sum_D u_D D + sum_i c_i P_i + sum_i [[e^T I_i^T Q_i I_i e]]_iota_i + slack.
/// Matrix columns follow iota_flags[i], which lists the certificate's own
/// order of the iota_{i+1} flags; `graphs` lists its order of F7. Codegree
/// expressions are named by any tau-flag of their swap orbit.
struct Certificate {
  std::array<RationalMatrix, 6> q;
  std::array<RationalMatrix, 6> i;
  std::array<Rational, 3> c;
  std::vector<std::pair<std::string, Rational>> u;
  std::array<std::vector<std::string>, 6> iota_flags;
  std::vector<std::string> graphs;
  /// Optional replacement of the derived tight-path set for sigma_0..2.
  std::array<std::optional<std::vector<std::string>>, 3> tight_path;
};

/// Sections [Q1]..[Q6], [I1]..[I6] ("rows cols" then one row per line),
/// [c], [u] ("<flag> <p/q>" per line), [flags:iota1]..[flags:iota6],
/// [graphs:F7] and optionally [tightpath:sigma0]..[tightpath:sigma2].
void write_certificate(std::ostream& out, const Certificate& cert);
/// Throws InputError naming the offending or missing section.
Certificate parse_certificate(std::istream& in);

/// (k_i, d_i) for i = 1..6: flag counts and embedding ranks.
std::array<std::pair<int, int>, 6> iota_sizes(ProofContext& ctx);

/// A certificate with every number zero, in the local orders, with one u
/// entry per codegree expression.
Certificate zero_certificate(ProofContext& ctx);

/// Index maps from certificate positions to local positions.
struct CertificateIndex {
  std::array<std::vector<int>, 6> iota;  ///< certificate flag -> local flag
  std::vector<int> graphs;               ///< certificate graph -> local graph
  std::vector<int> u;                    ///< u entry -> codegree expression
  std::array<std::vector<int>, 3> tight_path;
};
/// Canonical matching of all fingerprints; throws InputError on unknown,
/// duplicate or missing entries and on dimension mismatches.
CertificateIndex match_certificate(const Certificate& cert, ProofContext& ctx);

/// S = (N - 3E) - sum u_D D - sum c_i P_i - sum [[I_i^T Q_i I_i]]_iota_i over
/// F7 in local order.
LinComb assemble_rhs(const Certificate& cert, ProofContext& ctx);

struct Verdict {
  std::array<bool, 6> psd{};
  bool psd_ok = false;
  bool positivity_ok = false;
  bool slack_ok = false;
  bool support_ok = false;
  bool pass = false;
  std::vector<Rational> slack;  ///< local F7 order
  std::size_t zero_slack = 0;
  std::size_t positive_slack = 0;
  std::size_t negative_slack = 0;
  int first_negative = -1;           ///< local F7 index, or -1
  std::size_t realizable = 0;        ///< |tournament-realizable graphs|
  std::size_t zero_on_realizable = 0;
  std::vector<std::string> failures;
};

Verdict verify_certificate(const Certificate& cert, ProofContext& ctx);

}  // namespace flagcert
