#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "lstrat/exact.hpp"
#include "lstrat/semigroup.hpp"

namespace lstrat {

// The set translates + semigroup.
struct Stratum {
  std::vector<IntVec> translates;
  AffineSemigroup semigroup;
  bool normal = false;

  bool contains(const IntVec& v) const;
};

struct AffineStratification {
  std::size_t dim = 0;
  std::vector<Stratum> strata;
  bool disjoint = false;
  int form = 2;

  bool contains(const IntVec& v) const;
};

bool member(const AffineStratification& s, const IntVec& v);

// One translate of one semigroup; the unit of every converter.
struct TranslatedSemigroup {
  IntVec translate;
  AffineSemigroup semigroup;
};

std::vector<TranslatedSemigroup> units(const AffineStratification& s);

enum class CertificateKind { kCone, kCoset, kLattice, kOverlap };
std::string to_string(CertificateKind k);

struct PairCertificate {
  std::size_t first = 0, second = 0;  // stratum indices
  IntVec first_translate, second_translate;
  CertificateKind kind = CertificateKind::kCone;
  std::optional<IntVec> witness;  // common point when kind is kOverlap
};

struct DisjointnessReport {
  bool disjoint = true;
  std::vector<PairCertificate> pairs;
  std::optional<PairCertificate> failure;
};

// Exact pairwise disjointness: real cones, then cosets, then lattice points
// of the intersection. Non-normal semigroups are refined into normal pieces.
DisjointnessReport certify_disjoint(const AffineStratification& s);

// Disjointness of f1 + A1 and f2 + A2.
PairCertificate certify_pair(const IntVec& f1, const AffineSemigroup& a1, const IntVec& f2, const AffineSemigroup& a2);

struct Window {
  IntVec lo, hi;
};

struct VerifyReport {
  DisjointnessReport disjointness;
  bool equal = true;
  std::size_t points_checked = 0;
  std::vector<IntVec> missing;  // in the oracle set, not in the stratification
  std::vector<IntVec> extra;    // in the stratification, not in the oracle set
  bool pass() const { return disjointness.disjoint && equal; }
};

VerifyReport verify(const AffineStratification& s, const std::function<bool(const IntVec&)>& oracle, const Window& window,
                    std::size_t max_witnesses = 10);
VerifyReport verify_points(const AffineStratification& s, const std::function<bool(const IntVec&)>& oracle,
                           const std::vector<IntVec>& points, std::size_t max_witnesses = 10);

// Rewrites normal strata over the common lattice of the intersected completions.
std::vector<Stratum> unify_lattices(const std::vector<Stratum>& strata);

// Disjoint translates of normal semigroups with the same union (form 5).
AffineStratification disjointify(const std::vector<TranslatedSemigroup>& input, std::size_t dim);

// Image under x -> map * x, map given by rows (d' x d).
AffineStratification map_image(const AffineStratification& s, const IntMatrix& map, std::size_t target_dim);
AffineStratification union_of(const std::vector<AffineStratification>& parts, std::size_t dim);

// Converts to form 1..6: 2 as given, 3 one translate per stratum, 4 normal
// pieces, 5 and 6 disjoint normal strata, 1 disjoint and grouped by semigroup.
AffineStratification convert(const AffineStratification& s, int form);
// Structural check of the form tag; `why` receives the first violation.
bool check_form(const AffineStratification& s, std::string* why = nullptr);
bool is_hilbert_fixpoint(const AffineSemigroup& a);

// Emission order: decreasing cone dimension, then translate.
void sort_strata(std::vector<Stratum>& strata);

}  // namespace lstrat
