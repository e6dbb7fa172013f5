#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qgk/realize.hpp"
#include "qgk/weights.hpp"

namespace qgk {

struct GkReport {
  ToralWeight weight;
  std::string phi_label;
  std::size_t group_order = 0;
  std::string witness_word;
  int witness_length = 0;
  int a_value = 0;
  int num_positive = 0;
  int d = 0;
};

GkReport gk_dimension(const ToralWeight& w, std::size_t cap = WeylGroup::kDefaultCap, bool allow_large = false);

struct Kappas {
  int k0 = 0, k1 = 0, k2 = 0;
  bool operator==(const Kappas&) const = default;
};
Kappas kappas(RootSystemPtr rs);

// field C(q^{1/gamma}) is FieldSpec{0, gamma}; Q(q^{1/gamma}) is FieldSpec{2, gamma}
int min_gk(RootSystemPtr rs, const FieldSpec& spec);
int min_gk(RootSystemPtr rs);

bool cuspidal_possible(const TypeLabel& type);

struct GrowthSample {
  long ell = 0;
  Integer total = 0;
  std::vector<Integer> per_degree;
};

struct GrowthEstimate {
  double exponent = 0;
  bool exact = false;
  std::optional<int> degree;
};
GrowthEstimate growth_exponent(const std::vector<GrowthSample>& samples);
GrowthEstimate growth_exponent(const std::vector<std::pair<long, Integer>>& samples);

}  // namespace qgk
