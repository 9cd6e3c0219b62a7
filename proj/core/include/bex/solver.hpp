#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "bex/split_matroid.hpp"

namespace bex {

struct SolveOptions {
  // Ground sets at most this large are decomposed into connected components
  // before solving; larger ones are handled as a single block, which is
  // equivalent for valid representations.
  int component_cap = 16;
};

struct SolveStats {
  std::int64_t constraint_checks = 0;
  int extend_rounds = 0;
  bool blocked_path = false;
};

// A strictly monotone exchange state: sequences x_seq/y_seq of equal length
// pairing elements of a1 ∩ b2 with elements of a2 ∩ b1 such that every
// prefix applied to (a1, a2) yields a pair of bases.
class MonotoneState {
 public:
  MonotoneState(SplitRepresentation rep, BasisPairInstance instance, SolveStats* stats = nullptr);

  const SplitRepresentation& rep() const { return rep_; }
  const BasisPairInstance& instance() const { return instance_; }
  ElementSet a1_current() const { return a1_cur_; }
  ElementSet a2_current() const { return a2_cur_; }
  int length() const { return static_cast<int>(x_seq_.size()); }
  const std::vector<int>& x_seq() const { return x_seq_; }
  const std::vector<int>& y_seq() const { return y_seq_; }
  bool finished() const { return a1_cur_ == instance_.b1; }
  ExchangeSequence steps() const;

  // Independence check against the representation, counted in stats.
  bool check_independent(ElementSet x) const;
  // Whether appending (x, y) keeps both current sets bases.
  bool exchange_valid(int x, int y) const;
  // Appends (x, y); throws InternalError if the step is not valid.
  void append(int x, int y);
  // Full check of the monotone-state invariant for candidate sequences.
  bool satisfies_invariant(const std::vector<int>& xs, const std::vector<int>& ys) const;
  // Replaces the sequences; throws InternalError unless the invariant holds.
  void set_sequences(std::vector<int> xs, std::vector<int> ys);

 private:
  SplitRepresentation rep_;
  BasisPairInstance instance_;
  ElementSet a1_cur_, a2_cur_;
  std::vector<int> x_seq_, y_seq_;
  SolveStats* stats_ = nullptr;
};

enum class PivotCase { z1, z2 };

// Relabeling applied to normalize a blocking structure: optionally swap the
// roles of the two sides and/or of the hyperedge pairs (1,3) and (2,4).
struct Relabeling {
  bool side_swap = false;
  bool swap_h1_h3 = false;
  bool swap_h2_h4 = false;
  std::string tag() const;
};

// Certificate for a blocked monotone state: four distinct constraint indices
// h1..h4 such that the current first set is h1- and h3-tight and the current
// second set is h2- and h4-tight, together with the four element classes that
// pin down the remaining exchanges, the pivot element z, and the symmetry
// relabeling that was applied. All fields are in normalized coordinates; the
// snapshot sets record which side plays the first role after relabeling.
struct BlockingCertificate {
  // Constraint indices h1..h4. build_certificate emits indices local to the
  // state's representation (final_schedule expects those); in a SolveResult
  // they are remapped to the normalized input representation.
  std::array<int, 4> hyperedges{};
  ElementSet class_e;               // a1' ∩ b2 ∩ (H1 ∩ H2 − H3 − H4)
  ElementSet class_f;               // a2' ∩ b1 ∩ (H1 ∩ H4 − H2 − H3)
  ElementSet class_g;               // a1' ∩ b2 ∩ (H3 ∩ H4 − H1 − H2)
  ElementSet class_h;               // a2' ∩ b1 ∩ (H2 ∩ H3 − H1 − H4)
  int d = 0;                        // |a1' − b1|, always even and positive
  int pivot = -1;                   // z, in a1' ∩ b1 after normalization
  PivotCase pivot_case = PivotCase::z1;
  bool pivot_odd_membership = true;  // z lies in an odd number of h1..h4
  Relabeling relabeling;
  ElementSet a1_prime, a2_prime, b1_target, b2_target;  // normalized snapshot
};

// Partial result of the blocking analysis: the four hyperedge indices in raw
// (unrelabeled) coordinates plus the witness elements that produced them.
struct BlockingQuadruple {
  std::array<int, 4> hyperedges{};
  int x = -1;       // in a1' ∩ b2, outside H1 and H2
  int x_alt = -1;   // in a1' ∩ b2, inside H1 and H2
  int y = -1;       // in a2' ∩ b1, inside H1 and H4
  int y_alt = -1;   // in a2' ∩ b1, inside H2 and H3
};

struct SolveResult {
  int distance = 0;
  int lower_bound = 0;  // rank - |a1 ∩ b1|
  ExchangeSequence sequence;
  int monotone_length = 0;
  std::optional<BlockingCertificate> certificate;
  SolveStats stats;
};

// Repeatedly appends the lexicographically smallest valid pair (x, y) with
// x in a1' ∩ b2 and y in a2' ∩ b1 until no pair qualifies.
MonotoneState greedy_monotone(MonotoneState state);

// Tries every length-(s+2) rewrite of a maximal state: for each position and
// each choice of two fresh elements per side, all eight templates that
// replace the position and append two steps. Returns the first rewrite that
// satisfies the monotone invariant, or nullopt when the state is blocked.
std::optional<MonotoneState> extend_plus_two(const MonotoneState& state);

// Constructive identification of the four blocking hyperedges of a blocked
// state. Requires that no single exchange is available and the state is
// unfinished; every derived membership is checked and violations raise
// InternalError.
BlockingQuadruple find_blocking_quadruple(const MonotoneState& state);

// Computes the element classes, checks their sizes and containments, bounds
// d by twice |a1 ∩ b1|, and locates a pivot z, normalizing by the symmetry
// group so that z lies in a1' ∩ b1 with case Z1 (z in H1 only) or case Z2
// (z in H1 ∩ H3 − H2).
BlockingCertificate build_certificate(const MonotoneState& state, const BlockingQuadruple& quad);

// Emits the final d+1 exchanges prescribed by the certificate, validating
// every intermediate pair. Steps are returned in raw coordinates.
ExchangeSequence final_schedule(const MonotoneState& state, const BlockingCertificate& cert);

// Solver with cached contraction/decomposition state, reusable across many
// basis pairs of the same matroid. Not thread-safe; use one per thread.
class SolveContext {
 public:
  explicit SolveContext(const SplitRepresentation& rep, SolveOptions options = {});

  const SplitRepresentation& normalized() const { return rep_; }

  // Exact exchange distance and a witness sequence for a compatible pair of
  // basis pairs. The distance is lower_bound or lower_bound + 1, and a
  // certificate is attached exactly in the latter case.
  SolveResult solve(const BasisPairInstance& p);

  // The monotone prefix alone; its length is maximal among all strictly
  // monotone exchange sequences for the pair.
  ExchangeSequence longest_monotone(const BasisPairInstance& p);

 private:
  struct Contracted {
    SplitRepresentation rep;
    // Contracted constraint index -> index into the normalized input list
    // (contraction keeps order but may drop constraints).
    std::vector<int> origin;
    bool decomposed = false;
    std::vector<ElementSet> components;
    std::vector<bool> component_uniform;
    int nonuniform_index = -1;
  };

  const Contracted& contracted(ElementSet t);
  SolveResult solve_impl(const BasisPairInstance& p);

  SplitRepresentation rep_;
  SolveOptions options_;
  MatroidOracle oracle_;  // view of rep_, reused for sequence verification
  std::map<std::uint64_t, Contracted> cache_;
};

SolveResult solve(const SplitRepresentation& rep, const BasisPairInstance& p);
ExchangeSequence longest_monotone(const SplitRepresentation& rep, const BasisPairInstance& p);

enum class MatroidClassTag { split, base_orderable_split, paving };

// True iff the longest strictly monotone sequence for p meets the guaranteed
// lower bound for the given matroid class: rank - 3|a1 ∩ b1| for split,
// rank - 2|a1 ∩ b1| for base orderable split, rank - |a1 ∩ b1| - 2 for
// paving. The tag must truthfully describe rep; the paving tag is checked
// structurally (every bound equals rank - 1).
bool monotone_bound_check(const SplitRepresentation& rep, const BasisPairInstance& p,
                          MatroidClassTag tag);

}  // namespace bex
