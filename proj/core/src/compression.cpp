#include "kneserlab/compression.hpp"

#include <string>
#include <vector>

#include "kneserlab/errors.hpp"

namespace kneserlab {

CompressionOp::CompressionOp(int i, int j) : i_(i), j_(j) {
  if (i < 1 || j < 1 || i > kMaxUniverse || j > kMaxUniverse) {
    throw DomainError("compression indices must be ground-set elements (got i=" + std::to_string(i) +
                      ", j=" + std::to_string(j) + ")");
  }
  if (i == j) throw DomainError("compression needs i != j (got i=j=" + std::to_string(i) + ")");
}

RSet compress_set(const CompressionOp& op, const RSet& a) {
  if (a.contains(op.j()) && !a.contains(op.i())) {
    if (op.i() > a.universe()) {
      throw DomainError("compression target " + std::to_string(op.i()) + " outside [" +
                        std::to_string(a.universe()) + "]");
    }
    return RSet((a.bits() & ~element_bit(op.j())) | element_bit(op.i()), a.universe());
  }
  return a;
}

Family compress_family_against(const CompressionOp& op, const Family& f, const Family& reference) {
  require_same_universe(f, reference);
  std::vector<RSet> out;
  out.reserve(f.size());
  for (const auto& a : f) {
    const RSet shifted = compress_set(op, a);
    out.push_back(reference.contains(shifted) ? a : shifted);
  }
  return Family(f.universe(), f.r(), std::move(out));
}

Family compress_family(const CompressionOp& op, const Family& f) { return compress_family_against(op, f, f); }

CompressionFailureReport compression_failure_scenario(int r) {
  if (r < 2) throw DomainError("compression failure scenario requires r ≥ 2 (got r=" + std::to_string(r) + ")");
  const int n = 2 * r;
  if (n > kMaxUniverse) throw DomainError("compression failure scenario: 2r exceeds the universe cap");

  Mask tail = 0;  // {r+2, ..., 2r}
  for (int e = r + 2; e <= 2 * r; ++e) tail |= element_bit(e);
  Mask middle = 0;  // {3, ..., r+1}
  for (int e = 3; e <= r + 1; ++e) middle |= element_bit(e);

  const RSet a(element_bit(1) | tail, n);
  const RSet b(element_bit(2) | tail, n);
  const RSet c(element_bit(2) | middle, n);
  const CompressionOp shift(1, 2);

  CompressionFailureReport report{
      .r = r,
      .n = n,
      .set_a = a,
      .set_b = b,
      .set_c = c,
      .shifted_c = compress_set(shift, c),
      .family_a = Family(n, r, {a, c}),
      .family_b = Family(n, r, {b}),
      .standard_a = Family(n, r),
      .standard_b = Family(n, r),
      .modified_a = Family(n, r),
      .modified_b = Family(n, r),
  };

  const Family both = family_union(report.family_a, report.family_b);
  report.inputs_disjoint = are_disjoint(report.family_a, report.family_b);
  report.inputs_cross_intersecting = are_cross_intersecting(report.family_a, report.family_b);
  report.shifted_c_outside_inputs = !both.contains(report.shifted_c);

  report.standard_a = compress_family(shift, report.family_a);
  report.standard_b = compress_family(shift, report.family_b);
  for (const auto& s : report.standard_b) {
    if (report.standard_a.contains(s)) {
      report.standard_collision = s;
      break;
    }
  }
  report.standard_breaks_disjointness = report.standard_collision.has_value();

  report.modified_a = compress_family_against(shift, report.family_a, both);
  report.modified_b = compress_family_against(shift, report.family_b, both);
  report.modified_keeps_disjointness = are_disjoint(report.modified_a, report.modified_b);
  report.modified_breaks_cross_intersection = report.modified_a.contains(report.shifted_c) &&
                                              report.modified_b.contains(b) && !intersects(report.shifted_c, b);
  return report;
}

}  // namespace kneserlab
