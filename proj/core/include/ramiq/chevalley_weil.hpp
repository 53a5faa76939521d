#pragma once

#include "ramiq/ramification.hpp"
#include "ramiq/scenario.hpp"

namespace ramiq {

struct TraceRow {
  int class_index = 0;
  int representative = 0;  // element index
  Cyclotomic lhs;          // Tr(g; chi_G)
  Cyclotomic rhs;          // fixed-point formula
  bool match = false;
  std::string note;  // e.g. missing-stratum heuristic
};

struct Report {
  ClassFunction chi_g;
  std::vector<Rational> multiplicities;  // character-table order
  bool integral = false;
  std::vector<std::pair<std::string, ClassFunction>> per_stratum_gamma;  // input order
  std::vector<TraceRow> trace_table;
  bool traces_consistent = false;
};

// Assembles chi_G(X, E) = (chi/|G|)[C[G]] + sum_Z Gamma(E)_Z, decomposes it,
// and runs the Lefschetz trace check on every conjugacy class.
Report chi_g(const Scenario& s);

// Both sides of the holomorphic Lefschetz fixed-point identity at g.
std::pair<Cyclotomic, Cyclotomic> lefschetz_trace_check(const Scenario& s, int g);

// The (Z/2)^n surface closed form; equals chi_g(s).chi_g on its domain.
ClassFunction z2n_surface(const Scenario& s);

}  // namespace ramiq
