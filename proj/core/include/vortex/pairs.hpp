#pragma once

#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "vortex/chambers.hpp"
#include "vortex/exactmath.hpp"
#include "vortex/strata.hpp"

namespace vortex {

/// A stable bundle of the given rank and degree, possibly carrying the section.
struct FormalBlock {
  int rank = 1;
  int degree = 0;
  bool carries_phi = false;

  friend bool operator==(const FormalBlock&, const FormalBlock&) = default;
};

/// Immutable tree of stable blocks combined by direct sums and extensions.
///
/// Ext(sub, quot) stands for a nonsplit extension 0 -> sub -> E -> quot -> 0.
/// A split extension is normalized to a Sum, and nested Sums are flattened.
class FormalObject {
 public:
  enum class Kind { block, sum, ext };

  /// Throws InvalidInput for rank < 1 or a rank-1 section block of negative degree.
  static FormalObject block(int rank, int degree, bool carries_phi = false);
  /// Needs at least two summands.
  static FormalObject sum(std::vector<FormalObject> summands);
  static FormalObject ext(FormalObject sub, FormalObject quot, bool split = false);

  Kind kind() const;
  int rank() const;
  int degree() const;
  Rational slope() const { return Rational(BigInt(degree()), BigInt(rank())); }
  /// Number of leaf blocks carrying the section.
  int phi_count() const;
  /// True when some Ext node remains in the tree.
  bool has_nonsplit_ext() const;

  const FormalBlock& as_block() const;
  std::span<const FormalObject> summands() const;
  const FormalObject& sub() const;
  const FormalObject& quot() const;

  std::string to_string() const;

  friend bool operator==(const FormalObject& a, const FormalObject& b);

 private:
  struct Node;
  explicit FormalObject(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

/// A holomorphic pair (E, phi) in formal form. has_phi is false when phi = 0.
struct FormalPair {
  FormalObject object;
  bool has_phi = false;

  /// has_phi is read off the tree; throws InvalidInput if more than one leaf carries phi.
  static FormalPair from(FormalObject object);

  int rank() const { return object.rank(); }
  int degree() const { return object.degree(); }
};

struct SubobjectRecord {
  int rank = 0;
  int degree = 0;
  bool contains_phi = false;

  Rational slope() const { return Rational(BigInt(degree), BigInt(rank)); }
  friend bool operator==(const SubobjectRecord&, const SubobjectRecord&) = default;
  friend auto operator<=>(const SubobjectRecord&, const SubobjectRecord&) = default;
};

/// Nonzero subobjects readable from the construction tree, E included,
/// deduplicated on (rank, degree, contains_phi) and sorted.
std::vector<SubobjectRecord> visible_subobjects(const FormalPair& pair);

/// (mu_plus, mu_minus) over the visible lattice.
///
/// mu_minus is nullopt when no candidate exists (+infinity). approximate is
/// set when the tree has a nonsplit extension or mu_minus is unbounded, since
/// the visible lattice may then miss subbundles.
struct StabilityInterval {
  Rational mu_plus;
  std::optional<Rational> mu_minus;
  bool stable = false;
  bool approximate = false;

  bool semistable() const { return !mu_minus || mu_plus <= *mu_minus; }
};

StabilityInterval stability_interval(const FormalPair& pair);

/// tau-stability (strict) or tau-semistability (weak) over the visible lattice.
/// Clause (i) includes E itself.
bool is_tau_stable(const FormalPair& pair, const Rational& tau_hat, bool strict);

/// A grading: the signature of the limiting fixed point and its wall.
struct Grading {
  StratumSignature signature;
  Wall wall;

  friend bool operator==(const Grading&, const Grading&) = default;
};

/// mu_- grading: minimal-rank E_phi with mu(E/E_phi) = mu_minus plus the
/// stable blocks of E/E_phi. Throws Indeterminate when the tree cannot decide it.
Grading gr_minus(const FormalPair& pair);

/// mu_+ grading: maximal semistable destabilizer F of slope mu_plus and the
/// section-carrying quotient Q; (Gr(E), 0) when mu_plus = mu(E).
Grading gr_plus(const FormalPair& pair);

enum class FlowDirection { up, down };

/// Limit of the gradient flow of the moment map: down gives gr_plus, up gives gr_minus.
Grading flow_limit(const FormalPair& pair, FlowDirection direction);

/// The wall at which the pair is a circle-fixed point, if it is one.
std::optional<Wall> fixed_point_wall(const FormalPair& pair);

struct Lemma47Report {
  bool clause_i = false;   ///< mu_+(E_phi) <= mu_+(E)
  bool clause_ii = false;  ///< mu_-(E_phi, phi) >= mu_-(E, phi)
  bool clause_v = false;   ///< mu(E_phi) < mu_-(E, phi)
  std::vector<std::string> details;

  bool all_pass() const { return clause_i && clause_ii && clause_v; }
};

/// Evaluates the inequalities of the minimal-subobject lemma for a chosen
/// visible section-carrying subobject realizing mu_minus. Throws InvalidInput
/// when the subobject is not such a proper subobject.
Lemma47Report check_lemma_4_7(const FormalPair& pair, const SubobjectRecord& chosen);

/// The split pair representing a signature: the section block plus one
/// stable block per rank entry. With R_phi = 0 the section is zero.
FormalPair canonical_split_pair(const StratumSignature& sig, const Rational& wall);

}  // namespace vortex
