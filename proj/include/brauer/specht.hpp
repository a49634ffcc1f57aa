#ifndef BRAUER_SPECHT_HPP_
#define BRAUER_SPECHT_HPP_

#include <cstdint>
#include <span>
#include <unordered_map>
#include <vector>

#include "brauer/linalg.hpp"
#include "brauer/partition.hpp"

namespace brauer {

  // Specht module S^mu over the rationals, realised inside the tabloid
  // permutation module. Basis: standard polytabloids e_T, T running over the
  // standard tableaux of shape mu ordered lexicographically by row-reading
  // word. A permutation sigma of {0..m-1} acts by relabelling: sigma e_T =
  // e_{sigma T}, so rho(sigma tau) = rho(sigma) rho(tau).
  class SpechtModule {
   public:
    explicit SpechtModule(Partition mu);

    Partition const& shape() const noexcept {
      return mu_;
    }
    int degree() const noexcept {
      return mu_.size();
    }
    std::size_t dim() const noexcept {
      return tableaux_.size();
    }

    // Row-reading words (labels 1..m) of the basis tableaux.
    std::vector<std::vector<int>> const& tableaux() const noexcept {
      return tableaux_;
    }

    // Matrix of s_i = (i, i+1), 1 <= i < m.
    Matrix const& generator(int i) const;
    // Invariant symmetric form: tabloid inner products of the basis.
    Matrix const& form() const noexcept {
      return form_;
    }

    // Matrix of sigma computed directly from the tabloid expansion.
    Matrix perm_matrix(std::span<int const> sigma) const;
    // sigma v via a word in the generators.
    Vector act_perm(std::span<int const> sigma, std::span<Rational const> v) const;

   private:
    using Tabloid = std::uint64_t;  // 4 bits per label: row index

    // Coordinates (in the standard basis) of the polytabloid of the tableau
    // whose label at box b (row-major) is labels[b].
    Vector coordinates(std::vector<int> const& labels) const;

    Partition                        mu_;
    std::vector<std::vector<int>>    tableaux_;
    std::vector<int>                 box_row_;      // row of each box, row-major
    std::vector<std::vector<int>>    columns_;      // box indices per column
    std::unordered_map<Tabloid, int> pivot_index_;  // {T_k} -> k
    Matrix                           pivot_inverse_;
    std::vector<Matrix>              generators_;
    Matrix                           form_;
  };

  // Adjacent-transposition word for sigma: sigma = s_{w[0]} s_{w[1]} ...
  // (1-based indices).
  std::vector<int> reduced_word(std::span<int const> sigma);

}  // namespace brauer

#endif  // BRAUER_SPECHT_HPP_
