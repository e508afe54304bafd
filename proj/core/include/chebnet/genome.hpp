#pragma once

#include <cstddef>
#include <vector>

namespace chebnet {

/// The chromosome: seed point of the net plus every guideline angle.
///
/// alpha1/alpha2 are the start azimuths of the right/left branches of the
/// first guideline, beta1/beta2 of the top/bottom branches of the second.
/// gamma1/gamma2/eps1/eps2 are the per-step turn angles of those four
/// branches; their lengths fix how many steps each branch may take.
struct Genome {
  double x_a = 0.0;
  double y_a = 0.0;
  double alpha1 = 0.0;
  double alpha2 = 0.0;
  double beta1 = 0.0;
  double beta2 = 0.0;
  std::vector<double> gamma1;
  std::vector<double> gamma2;
  std::vector<double> eps1;
  std::vector<double> eps2;

  std::size_t gene_count() const {
    return 6 + gamma1.size() + gamma2.size() + eps1.size() + eps2.size();
  }

  bool same_layout(const Genome& o) const {
    return gamma1.size() == o.gamma1.size() && gamma2.size() == o.gamma2.size() &&
           eps1.size() == o.eps1.size() && eps2.size() == o.eps2.size();
  }

  bool operator==(const Genome& o) const = default;
};

}  // namespace chebnet
