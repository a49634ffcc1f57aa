#ifndef BRAUER_DIAGRAM_HPP_
#define BRAUER_DIAGRAM_HPP_

#include <compare>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "brauer/linalg.hpp"
#include "brauer/partition.hpp"

namespace brauer {

  // A reduced (n,t)-Brauer diagram: a perfect matching on n northern nodes
  // (indices 0..n-1) and t southern nodes (indices n..n+t-1). The partner
  // array is the canonical form, so equality is equality of matchings.
  class BrauerDiagram {
   public:
    BrauerDiagram() = default;
    // partner.size() == north + south; validated as a perfect matching.
    BrauerDiagram(int north, int south, std::vector<std::uint8_t> partner);

    static BrauerDiagram identity(int n);
    // Permutation diagram P_sigma with P_sigma * P_tau = P_{sigma tau}:
    // southern node b is joined to northern node sigma(b). sigma is given
    // 0-based as sigma[b].
    static BrauerDiagram permutation(std::span<int const> sigma);
    // X_{i,j} (1-based i < j): arcs {i,j} and {i',j'}, every other node
    // joined straight down.
    static BrauerDiagram x_hook(int n, int i, int j);
    static BrauerDiagram transposition(int n, int i, int j);  // (i j), 1-based

    // "n=4; 1-2 3-1' 4-2' 3'-4'" (t defaults to n; "n=4,t=2" otherwise).
    static BrauerDiagram parse(std::string const& text);
    std::string          to_string() const;

    int north() const noexcept {
      return north_;
    }
    int south() const noexcept {
      return south_;
    }
    // Global node index: north k (1-based) is k-1, south k is north()+k-1.
    int partner(int node) const {
      return partner_[node];
    }
    std::vector<std::uint8_t> const& partners() const noexcept {
      return partner_;
    }

    int  propagating_count() const;
    bool is_permutation() const {
      return north_ == south_ && propagating_count() == north_;
    }
    // For a permutation diagram, the sigma with *this == permutation(sigma).
    std::vector<int> as_permutation() const;

    friend bool operator==(BrauerDiagram const&, BrauerDiagram const&) = default;
    friend auto operator<=>(BrauerDiagram const&, BrauerDiagram const&) = default;

   private:
    int                       north_ = 0;
    int                       south_ = 0;
    std::vector<std::uint8_t> partner_;
  };

  // a above b; requires a.south() == b.north(). Returns the reduced product
  // and the number of closed loops removed.
  std::pair<BrauerDiagram, int> concat(BrauerDiagram const& a, BrauerDiagram const& b);

  // Vertical reflection: swaps the northern and southern boundaries.
  BrauerDiagram flip(BrauerDiagram const& d);

  // All reduced (n,n) diagrams, in a deterministic order.
  std::vector<BrauerDiagram> all_diagrams(int n);

  // Element of B_n(delta) over the rationals with delta fixed.
  class AlgebraElement {
   public:
    AlgebraElement(int n, long delta);
    AlgebraElement(BrauerDiagram const& d, long delta, Rational coeff = 1);

    static AlgebraElement identity(int n, long delta);

    int n() const noexcept {
      return n_;
    }
    long delta() const noexcept {
      return delta_;
    }
    std::map<BrauerDiagram, Rational> const& terms() const noexcept {
      return terms_;
    }
    bool     is_zero() const noexcept {
      return terms_.empty();
    }
    Rational coefficient(BrauerDiagram const& d) const;

    void add_term(BrauerDiagram const& d, Rational const& c);

    AlgebraElement& operator+=(AlgebraElement const& other);
    AlgebraElement& operator-=(AlgebraElement const& other);
    AlgebraElement& operator*=(Rational const& s);

    friend AlgebraElement operator+(AlgebraElement a, AlgebraElement const& b) {
      return a += b;
    }
    friend AlgebraElement operator-(AlgebraElement a, AlgebraElement const& b) {
      return a -= b;
    }
    friend AlgebraElement operator*(Rational const& s, AlgebraElement a) {
      return a *= s;
    }
    friend AlgebraElement operator*(AlgebraElement const& x, AlgebraElement const& y) {
      return multiply(x, y);
    }
    friend AlgebraElement multiply(AlgebraElement const& x, AlgebraElement const& y);
    friend bool operator==(AlgebraElement const&, AlgebraElement const&) = default;

    // JSON list of {"coeff": "p/q", "diagram": "..."}.
    std::string           to_json() const;
    static AlgebraElement from_json(std::string const& text, int n, long delta);

   private:
    int                               n_;
    long                              delta_;
    std::map<BrauerDiagram, Rational> terms_;
  };

  AlgebraElement flip(AlgebraElement const& x);

  // delta^loops with 0^0 = 1.
  Rational loop_factor(long delta, int loops);

  // Distinguished elements. Bounds: 1 <= i < j <= n.
  AlgebraElement e_element(int n, long delta);           // e_n
  AlgebraElement e_element(int n, int t, long delta);    // e_{n,t}
  AlgebraElement e_bar(int n, long delta);               // idempotent for all delta
  AlgebraElement x_hook(int n, int i, int j, long delta);
  AlgebraElement t_element(int n, long delta);           // sum_{i<j} X_{i,j}
  AlgebraElement transposition_sum(int n, long delta);   // sum_{i<j} (i,j)
  AlgebraElement central_element(int n, long delta);     // sum_{i<j} ((i,j) - X_{i,j})
  AlgebraElement young_symmetrizer(Partition const& lambda, int n, long delta);

  // Extends a (n-2,n-2) diagram to (n,n) by the arcs {n-1,n} and
  // {(n-1)',n'} (the image of the A1 embedding before scaling).
  BrauerDiagram add_arc_pair(BrauerDiagram const& d);
  // Embeds a (n-2,n-2) diagram into e_bar(n) B_n e_bar(n): the arcs of e_bar
  // are kept and d joins north nodes 1..n-3,n to south nodes 1..n-2.
  BrauerDiagram embed_in_e_bar(BrauerDiagram const& d);
  // B_n ⊂ B_{n+1}: adds the straight line {n+1, (n+1)'}.
  BrauerDiagram add_through_line(BrauerDiagram const& d);

}  // namespace brauer

#endif  // BRAUER_DIAGRAM_HPP_
