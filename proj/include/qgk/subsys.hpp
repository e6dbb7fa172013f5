#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "qgk/rootsys.hpp"

namespace qgk {

// bit set over the root list (up to 256 roots)
struct RootMask {
  std::array<std::uint64_t, 4> w{0, 0, 0, 0};
  void set(int k) { w[k >> 6] |= std::uint64_t(1) << (k & 63); }
  bool test(int k) const { return (w[k >> 6] >> (k & 63)) & 1; }
  auto operator<=>(const RootMask&) const = default;
};

struct SubComponent {
  char letter = 'A';
  int rank = 1;
  char tag = 0;  // 'L', 'S' or 0
  int num_positive = 0;
  std::string str() const;
};

// canonical label from components, e.g. A1^LxA1^S
std::string canonical_label(std::vector<SubComponent> comps);
int positive_count(char letter, int rank);

class RootSubsystem {
 public:
  RootSubsystem(RootSystemPtr parent, std::vector<int> members);

  const RootSystem& parent() const { return *parent_; }
  RootSystemPtr parent_ptr() const { return parent_; }
  const std::vector<int>& members() const { return members_; }
  const std::vector<int>& positive() const { return positive_; }
  const std::vector<int>& simple() const { return simple_; }
  const std::vector<SubComponent>& components() const { return comps_; }
  const std::string& label() const { return label_; }
  const RootMask& mask() const { return mask_; }
  bool contains(int k) const { return mask_.test(k); }
  int size() const { return static_cast<int>(members_.size()); }
  int num_positive() const { return static_cast<int>(positive_.size()); }
  int rank() const { return static_cast<int>(simple_.size()); }
  bool operator==(const RootSubsystem& o) const { return mask_ == o.mask_; }

 private:
  RootSystemPtr parent_;
  std::vector<int> members_, positive_, simple_;
  std::vector<SubComponent> comps_;
  std::string label_;
  RootMask mask_;
};

RootSubsystem reflection_closure(RootSystemPtr rs, const std::vector<int>& seed);
bool is_closed(const RootSubsystem& s);
// subsystem of the dual root system formed by the coroots
RootSubsystem dual(const RootSubsystem& s);
RootSystemPtr dual_root_system(const RootSystem& rs);
bool is_dual_closed(const RootSubsystem& s);

// image under a Weyl group element, and the minimal mask over the group
RootMask apply_mask(const Perm& p, const RootMask& m, int nroots);
RootMask canonical_mask(const WeylGroup& W, const RootMask& m);

struct BdsClass {
  RootSubsystem sub;
  int node = 0;   // deleted node
  int mark = 0;   // its coefficient in the highest root
  bool extended = false;
};
std::vector<BdsClass> borel_de_siebenthal(RootSystemPtr rs, std::size_t cap = WeylGroup::kDefaultCap);

std::vector<RootSubsystem> enumerate_subsystems(RootSystemPtr rs, std::size_t cap = WeylGroup::kDefaultCap);

struct MaximalClass {
  std::string label;
  int positive_count = 0;
  bool operator==(const MaximalClass&) const = default;
};
// inclusion-maximal proper subsystems by enumeration
std::vector<RootSubsystem> maximal_subsystems_enumerated(RootSystemPtr rs);
// inclusion-maximal classes of rank n-1 and n from the catalog, in canonical labels
std::vector<MaximalClass> table1_catalog(const Component& c);
MaximalClass table1_psi_max(const Component& c);
// enumeration when |Phi| <= 48, catalog otherwise
std::vector<MaximalClass> maximal_subsystems(RootSystemPtr rs);
int kappa0(RootSystemPtr rs);
// normalize a label written with B1, C1, D2, D3, C2 and so on
std::string normalize_label(const std::string& catalog_label);

int gamma_invariant(const RootSystem& rs);

}  // namespace qgk
