#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "glp/expand.hpp"

namespace glp {

// Coefficient of ⟨U,T⟩ = X_U / X_T in π(U,T).  Throws AssertionFailure unless
// it equals ∏_{v∈T} A_v.
CoefPoly check_leading_coefficient(const YCache& ys, const ClusterMonomialIndex& idx);
CoefPoly check_leading_coefficient(const Digraph& g, const ClusterMonomialIndex& idx);

// When U1 ⊄ U2 or T1 ⊉ T2, requires the coefficient of ⟨U2,T2⟩ in π(U1,T1)
// to vanish (AssertionFailure otherwise).  Returns whether that hypothesis
// held.
bool check_vanishing_coefficient(const YCache& ys, const ClusterMonomialIndex& idx1, const ClusterMonomialIndex& idx2);
bool check_vanishing_coefficient(const Digraph& g, const ClusterMonomialIndex& idx1, const ClusterMonomialIndex& idx2);

struct IndependenceEntry {
  ClusterMonomialIndex index;
  LaurentMonomialIndex witness;  // ⟨U,T⟩
  CoefPoly leading;              // its coefficient in π(U,T)
};

// Entries in the certifying order: ascending |U| − |T|, ties by index.  In
// that order the coefficient of entry i's witness is nonzero in π_i and zero
// in every π_j with j > i, so the family is independent.
struct IndependenceReport {
  std::vector<IndependenceEntry> entries;
};

// Throws PreconditionError on repeated indices, AssertionFailure when the
// triangular structure fails.
IndependenceReport check_independence(const YCache& ys, const std::vector<ClusterMonomialIndex>& indices);
IndependenceReport check_independence(const Digraph& g, const std::vector<ClusterMonomialIndex>& indices);

struct ScanBudget {
  int max_members = 2;      // Y factors per monomial
  int max_member_size = 3;  // vertices per Y factor
  int max_u = 1;            // X factors (with repetition); 0 skips span checks
  int jobs = 1;
  bool check_oracle = true;  // also re-expand every result through the oracle
};

struct ScanRecord {
  bool finding = false;
  std::string kind;  // y-positivity | span-positivity | oracle
  std::string graph; // graph_hash
  std::string detail;
};

struct ScanReport {
  std::vector<ScanRecord> records;
  std::size_t graphs = 0;

  std::size_t findings() const;
  std::size_t findings_of(const std::string& kind) const;
  // Record lines then the summary footer, each ending in '\n'.
  std::string render() const;
  std::string summary() const;
};

std::string render_record(const ScanRecord& r);

// Every Y-monomial ∏ Y_I with 1..max_members strongly connected members of
// size <= max_member_size is expanded with y_span_expand; a negative
// coefficient is a y-positivity finding.  Each such monomial times X_U, for U
// of 1..max_u vertices meeting some member, goes through span_expand; a
// coefficient with a negative integer coefficient is a span-positivity
// finding.  Work is spread over `jobs` threads; records come out in input
// order.  Throws PreconditionError on a budget with nothing to scan.
ScanReport scan_positivity(const Digraph& g, const ScanBudget& budget);
ScanReport scan_positivity(const std::vector<Digraph>& graphs, const ScanBudget& budget);

}  // namespace glp
