#ifndef BRAUER_BLOCKS_HPP_
#define BRAUER_BLOCKS_HPP_

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "brauer/linalg.hpp"
#include "brauer/partition.hpp"

namespace brauer {

  // Pairing and column-parity conditions on a single skew.
  bool skew_is_balanced(SkewShape const& s, long delta);

  // Both lambda/(lambda∩mu) and mu/(lambda∩mu) are balanced.
  bool is_balanced(Partition const& lambda, Partition const& mu, long delta);

  // sum of contents over the symmetric difference minus t(1 - delta), where
  // the symmetric difference has 2t boxes.
  Rational bias(Partition const& lambda, Partition const& tau, long delta);

  struct Block {
    Partition              minimal;
    std::vector<Partition> members;
  };
  struct BlockPartition {
    int                n     = 0;
    long               delta = 0;
    std::vector<Block> blocks;
  };

  // Classes of Lambda_n under is_balanced (the empty partition is omitted at
  // delta = 0). Blocks and members follow the order of weights(n, delta).
  BlockPartition block_partition(int n, long delta);
  std::string    to_json(BlockPartition const& bp);

  // The removable subset lambda/mu^i grown from eps; nullopt when eps has
  // no partner in lambda/mu.
  std::optional<SkewShape> i_maximal_balanced_skew(Partition const& lambda, Partition const& mu,
                                                   long delta, Box const& eps);
  std::optional<Partition> i_maximal_balanced_sub(Partition const& lambda, Partition const& mu,
                                                  long delta, Box const& eps);

  // lambda minus an inclusion-minimal skew among the lambda/mu^i; ties go to
  // the lexicographically least skew.
  Partition maximal_balanced_sub(Partition const& lambda, Partition const& mu, long delta);

  struct HatStep {
    enum class Kind { rows, columns } kind;
    int from;  // first removed index still present
    int to;    // index of the chosen box
    Box chosen;
  };
  struct HatResult {
    SkewShape            shape;
    std::vector<HatStep> steps;
  };
  HatResult   hat(Partition const& lambda, long delta);
  std::string to_string(HatStep const& step);  // "column 1", "rows 1-2"

  bool is_minimal(Partition const& lambda, long delta);

  // Least balanced subpartition (non-empty when delta = 0).
  Partition minimal_weight(Partition const& lambda, long delta);

  std::optional<Partition> hom_target(Partition const& lambda, long delta);

  // lambda, hom_target(lambda), ..., minimal_weight(lambda).
  std::vector<Partition> descent_chain(Partition const& lambda, long delta);

  struct LatticePrediction {
    int                            m = 0;
    std::vector<std::pair<Box, Box>> pairs;  // (eps_i, eps_i')
    std::vector<Partition>         nodes;    // indexed by bitmask x
    std::vector<std::pair<unsigned, unsigned>> covers;  // (x, x | bit j)
  };
  LatticePrediction lattice_predict(Partition const& lambda, Partition const& mu, long delta);

}  // namespace brauer

#endif  // BRAUER_BLOCKS_HPP_
