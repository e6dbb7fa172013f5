#pragma once

#include <optional>

#include "qgk/subsys.hpp"
#include "qgk/weights.hpp"

namespace qgk {

// torsion in (1/D)Z/Z (D = 0: unrestricted), q-exponents in (1/g)Z
struct FieldSpec {
  long D = 2;
  long g = 1;
};

// nullopt means the finite search was exhaustive and found nothing
std::optional<ToralWeight> realize_subsystem(const RootSubsystem& psi, const FieldSpec& spec);

// Lambda(K_i) = eps q^{d_i} with eps of order 2h_i at the deleted node, trivial elsewhere
ToralWeight cartan_closed_witness(const BdsClass& cls);

// all x in (Z/M)^n with A x = 0 mod M
std::vector<IVec> congruence_solutions(const std::vector<IVec>& rows, int n, long M, std::size_t limit = 1u << 22);

}  // namespace qgk
