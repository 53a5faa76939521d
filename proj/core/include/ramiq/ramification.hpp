#pragma once

#include "ramiq/repring.hpp"
#include "ramiq/stratum.hpp"

namespace ramiq {

// The cyclic subgroups H of the stabilizer for which Z is a full component of
// the H-fixed locus: every conormal eigencharacter restricts nontrivially to
// H. Ambient strata admit every cyclic subgroup of the stabilizer.
std::vector<Subgroup> compute_hz(const Stratum& z,
                                 const std::shared_ptr<const FiniteGroup>& g);

// K_{Z,H}: elements of H at which some conormal eigencharacter equals 1
// (parent indices). {id} for ambient strata.
std::vector<int> k_set(const Stratum& z, const Subgroup& h);

// Characteristic function of H minus K_{Z,H}; the inductive expression over
// cyclic subgroups of K is cross-asserted.
ClassFunction theta_z(const Stratum& z, const Subgroup& h);
ClassFunction theta_z_inductive(const Stratum& z, const Subgroup& h);

// Partial inverse of ch_H lambda_{-1}(N*): supported off K_{Z,H}, with
// tau * ch_H lambda_{-1}(N*) = theta_{Z,H} as graded values.
GradedClassValue tau(const Stratum& z, const Subgroup& h);

// ch_H lambda_{-1}(N*) itself, truncated at degree 2.
GradedClassValue ch_lambda(const Stratum& z, const Subgroup& h);

struct ChTd {
  GradedClassValue ch_e;  // equivariant Chern character of E restricted to Z
  GradedClassValue td;    // ordinary Todd class of Z
};

ChTd ch_and_todd(const Stratum& z, const Subgroup& h);

// Ramification module of Z, as a class function on G.
ClassFunction gamma(const Stratum& z, const std::shared_ptr<const FiniteGroup>& g);

// Closed forms; each demands its hypotheses and agrees exactly with `gamma`
// on its domain.
ClassFunction gamma_point(const Stratum& z, const std::shared_ptr<const FiniteGroup>& g);
ClassFunction gamma_curve(const Stratum& z, const std::shared_ptr<const FiniteGroup>& g);
ClassFunction gamma_cyclic(const Stratum& z, const std::shared_ptr<const FiniteGroup>& g);
ClassFunction gamma_ambient(const Stratum& z, const std::shared_ptr<const FiniteGroup>& g);

}  // namespace ramiq
