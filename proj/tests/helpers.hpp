#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "ramiq/chevalley_weil.hpp"
#include "ramiq/corpus.hpp"

namespace test_helpers {

using namespace ramiq;

// The error kind thrown by f, or InternalCheck if it does not throw.
template <typename F>
ErrorKind kind_of(F&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  return ErrorKind::InternalCheck;
}

// Character on sub.group() from [N, k] root pairs listed per local element.
inline LinearCharacter make_char(const Subgroup& sub,
                                 const std::vector<std::pair<std::int64_t, std::int64_t>>& roots) {
  std::vector<Cyclotomic> vals;
  for (const auto& [n, k] : roots) vals.push_back(Cyclotomic::root_of_unity(n, k));
  return LinearCharacter(sub.group(), std::move(vals));
}

// Class function from per-class rational values.
inline ClassFunction make_cf(const std::shared_ptr<const FiniteGroup>& g,
                             const std::vector<Rational>& vals) {
  std::vector<Cyclotomic> cs;
  for (const auto& r : vals) cs.emplace_back(r);
  return ClassFunction(g, std::move(cs));
}

// The standard character table of S3 keyed by element orders.
inline std::vector<ClassFunction> s3_table_rows(const std::shared_ptr<const FiniteGroup>& g) {
  auto by_order = [&](std::int64_t at1, std::int64_t at2, std::int64_t at3) {
    std::vector<Cyclotomic> vals(g->order());
    for (int x = 0; x < g->order(); ++x) {
      int o = g->element_order(x);
      vals[x] = Cyclotomic(o == 1 ? at1 : o == 2 ? at2 : at3);
    }
    return ClassFunction::from_element_values(g, vals);
  };
  return {by_order(1, 1, 1), by_order(1, -1, 1), by_order(2, 0, -1)};
}

inline std::shared_ptr<const FiniteGroup> s3_group() {
  return FiniteGroup::from_permutation_generators({{{1, 2}}, {{1, 2, 3}}});
}

}  // namespace test_helpers
