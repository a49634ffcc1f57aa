#ifndef BRAUER_CELL_MODULE_HPP_
#define BRAUER_CELL_MODULE_HPP_

#include <map>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "brauer/diagram.hpp"
#include "brauer/linalg.hpp"
#include "brauer/partition.hpp"
#include "brauer/specht.hpp"

namespace brauer {

  // t disjoint arcs on {1..n}; the remaining n-2t nodes are free.
  struct PartialOneRow {
    int                              n = 0;
    std::vector<std::pair<int, int>> arcs;  // (a,b) with a < b, sorted

    std::vector<int> free_nodes() const;  // 1-based, increasing
    friend auto      operator<=>(PartialOneRow const&, PartialOneRow const&) = default;
  };

  // V_{n,t}, sorted lexicographically by arc list.
  std::vector<PartialOneRow> enumerate_v(int n, int t);

  // The (n, n-2t) half diagram with the arcs of v whose i-th free node is
  // joined to southern node i.
  BrauerDiagram half_diagram(PartialOneRow const& v);

  // Cell module Delta_n(mu), basis (v, T) with index v_index * f^mu + T_index.
  class CellModule {
   public:
    CellModule(int n, long delta, Partition mu);

    int n() const noexcept {
      return n_;
    }
    long delta() const noexcept {
      return delta_;
    }
    Partition const& shape() const noexcept {
      return specht_.shape();
    }
    int arcs() const noexcept {
      return t_;
    }
    std::size_t dim() const noexcept {
      return v_.size() * specht_.dim();
    }
    std::vector<PartialOneRow> const& v_basis() const noexcept {
      return v_;
    }
    SpechtModule const& specht() const noexcept {
      return specht_;
    }

    Vector act(BrauerDiagram const& d, std::span<Rational const> x) const;
    Matrix matrix_of(BrauerDiagram const& d) const;
    Matrix matrix_of(AlgebraElement const& a) const;
    Rational trace(BrauerDiagram const& d) const;

    Matrix const& generator(int i) const;  // s_i, 1 <= i < n
    Matrix const& x12() const;             // X_{1,2}; requires n >= 2

    Matrix gram_matrix() const;

    // True iff the central element acts as sum_{d in mu} c(d) - t(delta-1).
    bool t_action_check() const;

    // {"n","delta","mu","dim","generators":{"s1":[[...]],...,"X12":[[...]]}}
    std::string matrices_json() const;

   private:
    // Column block for d acting on X_{v,1,id}: target v index, scalar and
    // Specht permutation, or target < 0 when the product vanishes.
    struct Image {
      int              target = -1;
      Rational         scale;
      std::vector<int> perm;
    };
    Image image(BrauerDiagram const& d, std::size_t v_index) const;

    int                                n_;
    long                               delta_;
    int                                t_;
    SpechtModule                       specht_;
    std::vector<PartialOneRow>         v_;
    std::vector<BrauerDiagram>         halves_;
    std::map<std::vector<std::pair<int, int>>, int> v_index_;
    std::vector<Matrix>                generators_;
    Matrix                             x12_;
  };

  // Predicted central scalar sum_{d in mu} c(d) - t(delta - 1).
  Rational predicted_central_scalar(int n, long delta, Partition const& mu);

  struct RestrictionRule {
    std::vector<Partition> down;  // remove one box
    std::vector<Partition> up;    // add one box, size at most n-1
  };
  RestrictionRule restriction_rule(Partition const& lambda, int n);

  // lambda in Lambda_n: |lambda| <= n with the parity of n.
  bool is_weight(Partition const& lambda, int n);
  // Lambda_n, largest partitions first; omits the empty partition when
  // delta = 0.
  std::vector<Partition> weights(int n, long delta);

  std::string matrix_json(Matrix const& m);  // [["p/q",...],...]

}  // namespace brauer

#endif  // BRAUER_CELL_MODULE_HPP_
