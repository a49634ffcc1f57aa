#ifndef BRAUER_RENDER_HPP_
#define BRAUER_RENDER_HPP_

#include <optional>
#include <string>

#include "brauer/blocks.hpp"
#include "brauer/partition.hpp"

namespace brauer {

  // Young diagram with the content of each box, or its charge when delta is
  // given; "(empty)" for the empty partition.
  std::string render_partition(Partition const& lambda, std::optional<long> delta = std::nullopt);

  // Boxes of lambda∩mu as ".", boxes of lambda/(lambda∩mu) and
  // mu/(lambda∩mu) labelled by content, with a legend line for each side.
  std::string render_skew(Partition const& lambda, Partition const& mu);

  std::string render_shape(SkewShape const& s);

  std::string lattice_text(LatticePrediction const& lp);
  // One node per subset, one arrow per cover (larger subset to smaller).
  std::string lattice_dot(LatticePrediction const& lp);
  std::string lattice_json(LatticePrediction const& lp);

}  // namespace brauer

#endif  // BRAUER_RENDER_HPP_
