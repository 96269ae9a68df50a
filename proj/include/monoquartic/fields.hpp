#pragma once

// Separating the fields generated by monogenic trinomials. A monogenic
// trinomial's discriminant is the field discriminant, so two such trinomials
// with different discriminants or different signatures generate
// non-isomorphic fields. Agreement on both proves nothing; those pairs are
// reported as undecided and never merged into an isomorphism claim.

#include <algorithm>
#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

#include "monogenic.hpp"

namespace monoquartic {

struct FieldClass {
  Integer field_disc;
  Signature signature;
  std::vector<std::size_t> members;  ///< indices into the input
};

struct FieldSeparation {
  /// Ordered by first appearance. Members of different classes generate
  /// distinct fields.
  std::vector<FieldClass> classes;
  /// Index pairs (i < j) that no invariant separates.
  std::vector<std::pair<std::size_t, std::size_t>> undecided;

  bool fully_separated() const { return undecided.empty(); }
};

inline FieldSeparation distinct_fields(const std::vector<MonogenicityReport>& reports) {
  FieldSeparation out;
  for (std::size_t i = 0; i < reports.size(); ++i) {
    const auto& r = reports[i];
    if (!r.monogenic || !r.field_disc || !r.signature)
      throw std::invalid_argument("distinct_fields: " + to_string(r.trinomial) +
                                  " is not monogenic");
    auto it = std::find_if(out.classes.begin(), out.classes.end(), [&](const FieldClass& c) {
      return c.field_disc == *r.field_disc && c.signature == *r.signature;
    });
    if (it == out.classes.end()) {
      out.classes.push_back({*r.field_disc, *r.signature, {i}});
      continue;
    }
    for (std::size_t j : it->members) out.undecided.emplace_back(j, i);
    it->members.push_back(i);
  }
  std::sort(out.undecided.begin(), out.undecided.end());
  return out;
}

}  // namespace monoquartic
