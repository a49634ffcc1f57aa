#ifndef BRAUER_PARTITION_HPP_
#define BRAUER_PARTITION_HPP_

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace brauer {

  // A box of a Young diagram; rows and columns count from 1 at the top left.
  struct Box {
    int row = 1;
    int col = 1;

    int content() const noexcept {
      return col - row;
    }
    // Charge of the box for loop parameter delta.
    long charge(long delta) const noexcept {
      return delta - 1 + 2L * content();
    }

    friend auto operator<=>(Box const&, Box const&) = default;
  };

  std::string to_string(Box const& b);  // "(r,c)"

  // Partition with canonical storage: weakly decreasing positive parts, no
  // trailing zeros; the empty list is the empty partition.
  class Partition {
   public:
    Partition() = default;
    explicit Partition(std::vector<int> parts);  // validates, strips zeros

    // "6,4,4,2,1"; the literal "0" (or the empty string) is the empty partition.
    static Partition parse(std::string const& text);

    std::vector<int> const& parts() const noexcept {
      return parts_;
    }
    int size() const noexcept {
      return size_;
    }
    int length() const noexcept {
      return static_cast<int>(parts_.size());
    }
    bool empty() const noexcept {
      return parts_.empty();
    }

    // Length of row r (1-based); 0 past the last row.
    int row(int r) const noexcept {
      return r >= 1 && r <= length() ? parts_[r - 1] : 0;
    }
    bool contains(Box const& b) const noexcept {
      return b.row >= 1 && b.col >= 1 && b.col <= row(b.row);
    }
    bool contains(Partition const& mu) const noexcept;  // [mu] ⊆ [this]

    std::vector<Box> boxes() const;  // row-major order
    Partition        conjugate() const;
    bool             is_rectangle() const noexcept;  // ∅ counts as one
    bool             is_even() const noexcept;

    Partition add_box(Box const& b) const;     // throws if not addable
    Partition remove_box(Box const& b) const;  // throws if not removable

    std::string to_string() const;  // "0" for ∅

    friend bool operator==(Partition const& a, Partition const& b) {
      return a.parts_ == b.parts_;
    }
    // Size first, then parts lexicographically; a total order for containers.
    friend std::strong_ordering operator<=>(Partition const& a, Partition const& b) {
      if (auto c = a.size_ <=> b.size_; c != 0) {
        return c;
      }
      return a.parts_ <=> b.parts_;
    }

   private:
    std::vector<int> parts_;
    int              size_ = 0;
  };

  // Rowwise minimum; the largest diagram contained in both.
  Partition intersect(Partition const& a, Partition const& b);

  // All partitions of n in reverse lexicographic order ((n) first).
  std::vector<Partition> partitions_of(int n);
  // All partitions contained in lambda, including ∅ and lambda itself.
  std::vector<Partition> subpartitions(Partition const& lambda);

  // Finite set of boxes in absolute coordinates of the ambient diagram.
  class SkewShape {
   public:
    SkewShape() = default;
    explicit SkewShape(std::vector<Box> boxes);  // sorts, rejects duplicates

    std::vector<Box> const& boxes() const noexcept {
      return boxes_;
    }
    int size() const noexcept {
      return static_cast<int>(boxes_.size());
    }
    bool empty() const noexcept {
      return boxes_.empty();
    }
    bool contains(Box const& b) const;

    std::map<int, int> content_counts() const;
    int                count_content(int c) const;
    std::vector<int>   contents() const;  // sorted

    // Row lengths, top to bottom, of the non-empty rows.
    std::vector<int> row_lengths() const;
    // Edge-connected components, ordered top-right to bottom-left.
    std::vector<SkewShape> components() const;

    bool is_subset_of(SkewShape const& other) const;

    friend bool operator==(SkewShape const&, SkewShape const&) = default;
    friend auto operator<=>(SkewShape const&, SkewShape const&) = default;

   private:
    std::vector<Box> boxes_;
  };

  // [lambda] \ [mu] without any containment assumption.
  SkewShape difference(Partition const& lambda, Partition const& mu);

  // (lambda/(lambda∩mu), mu/(lambda∩mu)).
  std::pair<SkewShape, SkewShape> skew(Partition const& lambda, Partition const& mu);

  // Contents of all boxes of lambda, sorted ascending.
  std::vector<int> contents(Partition const& lambda);

  // Sorted by content (distinct boxes always have distinct contents).
  std::vector<Box> addable_boxes(Partition const& lambda);
  std::vector<Box> removable_boxes(Partition const& lambda);

  // Littlewood-Richardson coefficient c^lambda_{mu,eta}, by enumerating the
  // row-by-row box additions of eta onto mu and keeping valid configurations.
  std::uint64_t lr_coefficient(Partition const& mu, Partition const& eta, Partition const& lambda);

  // For a rectangle lambda ⊇ mu: the unique eta with c^lambda_{mu,eta} != 0
  // (its parts are the row lengths of lambda/mu, bottom row first); nullopt
  // when mu == lambda.
  std::optional<Partition> unique_rectangle_eta(Partition const& mu, Partition const& lambda);

  // f^lambda via the hook length formula.
  std::uint64_t specht_dim(Partition const& lambda);
  // f^lambda by recursively stripping removable boxes.
  std::uint64_t count_standard_tableaux(Partition const& lambda);

  // Irreducible character chi^lambda at cycle type rho (Murnaghan-Nakayama).
  long mn_character(Partition const& lambda, Partition const& cycle_type);

  // Number of permutations with the given cycle type.
  std::uint64_t class_size(Partition const& cycle_type);
  std::uint64_t factorial(int n);

}  // namespace brauer

#endif  // BRAUER_PARTITION_HPP_
