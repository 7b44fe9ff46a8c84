#pragma once

#include <optional>

#include "kneserlab/family.hpp"
#include "kneserlab/rset.hpp"

namespace kneserlab {

// The (i, j)-shift: replaces j by i.
class CompressionOp {
 public:
  CompressionOp(int i, int j);

  int i() const noexcept { return i_; }
  int j() const noexcept { return j_; }

 private:
  int i_;
  int j_;
};

// (a \ {j}) ∪ {i} when j ∈ a and i ∉ a, otherwise a.
RSet compress_set(const CompressionOp& op, const RSet& a);

// Shift of f where a set stays put iff its image already lies in `reference`:
//   {A ∈ f : δ(A) ∈ reference} ∪ {δ(A) : A ∈ f, δ(A) ∉ reference}.
// reference = f is the classical operator; reference = f ∪ g is the variant that
// tries to keep two families apart.
Family compress_family_against(const CompressionOp& op, const Family& f, const Family& reference);

// The classical family shift Δ_{i,j}(f). Preserves |f|.
Family compress_family(const CompressionOp& op, const Family& f);

// Witness that shifting breaks a disjoint cross-intersecting pair in [2r]:
// A = {1, r+2..2r} and C = {2..r+1} in the first family, B = {2, r+2..2r} in the second.
struct CompressionFailureReport {
  int r = 0;
  int n = 0;
  RSet set_a;
  RSet set_b;
  RSet set_c;
  RSet shifted_c;  // δ_{1,2}(C) = {1, 3..r+1}
  Family family_a;
  Family family_b;
  bool inputs_disjoint = false;
  bool inputs_cross_intersecting = false;
  bool shifted_c_outside_inputs = false;

  // Classical operator applied to each family separately.
  Family standard_a;
  Family standard_b;
  // δ_{1,2}(B) = A lands in both images.
  bool standard_breaks_disjointness = false;
  std::optional<RSet> standard_collision;

  // Membership tested against the union of both families.
  Family modified_a;
  Family modified_b;
  // δ_{1,2}(C) ∈ modified_a and B ∈ modified_b, yet they are disjoint sets.
  bool modified_breaks_cross_intersection = false;
  bool modified_keeps_disjointness = false;

  bool both_failures_reproduced() const {
    return standard_breaks_disjointness && modified_breaks_cross_intersection;
  }
};

CompressionFailureReport compression_failure_scenario(int r);

}  // namespace kneserlab
