#ifndef BRAUER_ORACLE_HPP_
#define BRAUER_ORACLE_HPP_

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "brauer/cell_module.hpp"
#include "brauer/linalg.hpp"
#include "brauer/partition.hpp"

namespace brauer {

  // Largest cell module dimension the oracle will build; BRAUER_MAX_DIM
  // overrides the default of 400.
  std::size_t max_module_dim();

  // dim Hom(Delta_n(lambda), Delta_n(mu)). Solves for the image w of the
  // generator X_{v0,1,id} (x) e_lambda x in Delta_n(mu) under the defining
  // relations of Delta_n(lambda).
  std::size_t hom_dim(int n, long delta, Partition const& lambda, Partition const& mu);

  // Same dimension from the full intertwiner system M rho_lambda(g) =
  // rho_mu(g) M over the generators s_i, X_{1,2}. Intended for small
  // modules.
  std::size_t hom_dim_direct(int n, long delta, Partition const& lambda, Partition const& mu);

  // Scalar of the central element on Delta_n(mu); throws if the action is
  // not that scalar or differs from the predicted value.
  Rational central_scalar(int n, long delta, Partition const& mu);

  std::size_t gram_rank(int n, long delta, Partition const& mu);

  // [res Delta_n(mu) : S^lambda] by characters, checked against the sum of
  // c^lambda_{mu,eta} over even eta.
  std::size_t restriction_multiplicity(int n, long delta, Partition const& mu,
                                       Partition const& lambda);
  std::size_t restriction_multiplicity_lr(int n, Partition const& mu, Partition const& lambda);

  struct BlockGraph {
    int                                      n     = 0;
    long                                     delta = 0;
    std::vector<Partition>                   vertices;
    std::vector<std::pair<Partition, Partition>> edges;  // hom_dim(first -> second) > 0
  };
  BlockGraph block_graph(int n, long delta);

  struct Check {
    std::string name;
    int         n     = 0;
    long        delta = 0;
    bool        pass  = true;
    std::string witness;  // first failure
  };
  std::vector<Check> verify_blocks(int n, long delta);
  // {"checks":[{"name","params":{"n","delta"},"status","witness"?}]}
  std::string to_json(std::vector<Check> const& checks);

}  // namespace brauer

#endif  // BRAUER_ORACLE_HPP_
