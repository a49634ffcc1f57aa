#include "brauer/specht.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>

#include "brauer/error.hpp"

namespace brauer {

  namespace {
    // All signed permutations of the boxes fixing every column setwise,
    // as (image of each box index, sign).
    void for_each_column_perm(std::vector<std::vector<int>> const& columns,
                              std::size_t                          nboxes,
                              std::function<void(std::vector<int> const&, int)> const& visit) {
      std::vector<int> image(nboxes);
      std::iota(image.begin(), image.end(), 0);
      std::function<void(std::size_t, int)> rec = [&](std::size_t c, int sign) {
        if (c == columns.size()) {
          visit(image, sign);
          return;
        }
        std::vector<int> col = columns[c];
        std::vector<int> idx(col.size());
        std::iota(idx.begin(), idx.end(), 0);
        do {
          int inversions = 0;
          for (std::size_t a = 0; a < idx.size(); ++a) {
            for (std::size_t b = a + 1; b < idx.size(); ++b) {
              inversions += idx[a] > idx[b] ? 1 : 0;
            }
          }
          for (std::size_t k = 0; k < col.size(); ++k) {
            image[col[k]] = col[idx[k]];
          }
          rec(c + 1, inversions % 2 == 0 ? sign : -sign);
        } while (std::next_permutation(idx.begin(), idx.end()));
        for (int b : col) {
          image[b] = b;
        }
      };
      rec(0, 1);
    }
  }  // namespace

  std::vector<int> reduced_word(std::span<int const> sigma) {
    std::vector<int> s(sigma.begin(), sigma.end());
    int const        m = static_cast<int>(s.size());
    std::vector<int> inv(m);
    for (int x = 0; x < m; ++x) {
      inv[s[x]] = x;
    }
    // Left-multiply by s_i whenever i, i+1 appear out of order; each step
    // shortens sigma, and the recorded letters reproduce sigma.
    std::vector<int> word;
    bool             changed = true;
    while (changed) {
      changed = false;
      for (int i = 0; i + 1 < m; ++i) {
        if (inv[i] > inv[i + 1]) {
          std::swap(s[inv[i]], s[inv[i + 1]]);
          std::swap(inv[i], inv[i + 1]);
          word.push_back(i + 1);
          changed = true;
        }
      }
    }
    return word;
  }

  SpechtModule::SpechtModule(Partition mu) : mu_(std::move(mu)) {
    int const m = mu_.size();
    if (m > 15) {
      fail(ErrorKind::dimension_cap, "Specht module of degree above 15");
    }
    for (int r = 1; r <= mu_.length(); ++r) {
      for (int c = 1; c <= mu_.row(r); ++c) {
        box_row_.push_back(r - 1);
      }
    }
    columns_.resize(mu_.empty() ? 0 : mu_.row(1));
    {
      int b = 0;
      for (int r = 1; r <= mu_.length(); ++r) {
        for (int c = 1; c <= mu_.row(r); ++c) {
          columns_[c - 1].push_back(b++);
        }
      }
    }

    // Standard tableaux: place labels 1..m successively at addable corners.
    std::vector<int>                      row_fill(mu_.length(), 0);
    std::vector<std::vector<int>>         grid(mu_.length());
    std::function<void(int)>              rec = [&](int label) {
      if (label > m) {
        std::vector<int> word;
        for (auto const& row : grid) {
          word.insert(word.end(), row.begin(), row.end());
        }
        tableaux_.push_back(std::move(word));
        return;
      }
      for (int r = 0; r < mu_.length(); ++r) {
        if (row_fill[r] < mu_.row(r + 1) && (r == 0 || row_fill[r - 1] > row_fill[r])) {
          grid[r].push_back(label);
          ++row_fill[r];
          rec(label + 1);
          --row_fill[r];
          grid[r].pop_back();
        }
      }
    };
    rec(1);
    std::sort(tableaux_.begin(), tableaux_.end());

    auto tabloid_of = [&](std::vector<int> const& labels) {
      Tabloid t = 0;
      for (std::size_t b = 0; b < labels.size(); ++b) {
        t |= static_cast<Tabloid>(box_row_[b]) << (4 * (labels[b] - 1));
      }
      return t;
    };

    std::size_t const f = tableaux_.size();
    for (std::size_t k = 0; k < f; ++k) {
      pivot_index_.emplace(tabloid_of(tableaux_[k]), static_cast<int>(k));
    }
    BRAUER_ASSERT(pivot_index_.size() == f, "standard tableaux give distinct tabloids");

    // Full tabloid expansions of the basis polytabloids.
    std::vector<std::map<Tabloid, long>> expansion(f);
    std::vector<int>                     labels(m);
    for (std::size_t k = 0; k < f; ++k) {
      auto const& T = tableaux_[k];
      for_each_column_perm(columns_, static_cast<std::size_t>(m),
                           [&](std::vector<int> const& image, int sign) {
                             for (int b = 0; b < m; ++b) {
                               labels[b] = T[image[b]];
                             }
                             expansion[k][tabloid_of(labels)] += sign;
                           });
    }
    Matrix pivots(f, f);
    for (std::size_t j = 0; j < f; ++j) {
      for (auto const& [tab, c] : expansion[j]) {
        auto it = pivot_index_.find(tab);
        if (it != pivot_index_.end()) {
          pivots(static_cast<std::size_t>(it->second), j) = c;
        }
      }
    }
    pivot_inverse_ = inverse(pivots);

    form_ = Matrix(f, f);
    for (std::size_t a = 0; a < f; ++a) {
      for (std::size_t b = a; b < f; ++b) {
        long s = 0;
        for (auto const& [tab, c] : expansion[a]) {
          auto it = expansion[b].find(tab);
          if (it != expansion[b].end()) {
            s += c * it->second;
          }
        }
        form_(a, b) = s;
        form_(b, a) = s;
      }
    }

    for (int i = 1; i < m; ++i) {
      std::vector<int> sigma(m);
      std::iota(sigma.begin(), sigma.end(), 0);
      std::swap(sigma[i - 1], sigma[i]);
      generators_.push_back(perm_matrix(sigma));
    }
  }

  Matrix const& SpechtModule::generator(int i) const {
    if (i < 1 || i >= degree()) {
      fail(ErrorKind::invalid_argument, "Specht generator index out of range");
    }
    return generators_[i - 1];
  }

  Vector SpechtModule::coordinates(std::vector<int> const& labels) const {
    int const    m = degree();
    Vector       at_pivots(dim());
    std::vector<int> relabelled(m);
    for_each_column_perm(columns_, static_cast<std::size_t>(m),
                         [&](std::vector<int> const& image, int sign) {
                           Tabloid t = 0;
                           for (int b = 0; b < m; ++b) {
                             t |= static_cast<Tabloid>(box_row_[b]) << (4 * (labels[image[b]] - 1));
                           }
                           auto it = pivot_index_.find(t);
                           if (it != pivot_index_.end()) {
                             at_pivots[static_cast<std::size_t>(it->second)] += sign;
                           }
                         });
    return pivot_inverse_.apply(at_pivots);
  }

  Matrix SpechtModule::perm_matrix(std::span<int const> sigma) const {
    int const m = degree();
    if (static_cast<int>(sigma.size()) != m) {
      fail(ErrorKind::size_mismatch, "permutation degree differs from |mu|");
    }
    Matrix           out(dim(), dim());
    std::vector<int> labels(m);
    for (std::size_t j = 0; j < dim(); ++j) {
      for (int b = 0; b < m; ++b) {
        labels[b] = sigma[tableaux_[j][b] - 1] + 1;
      }
      out.set_column(j, coordinates(labels));
    }
    return out;
  }

  Vector SpechtModule::act_perm(std::span<int const> sigma, std::span<Rational const> v) const {
    if (static_cast<int>(sigma.size()) != degree() || v.size() != dim()) {
      fail(ErrorKind::size_mismatch, "act_perm: dimension mismatch");
    }
    auto const word = reduced_word(sigma);
    Vector     out(v.begin(), v.end());
    for (auto it = word.rbegin(); it != word.rend(); ++it) {
      out = generators_[*it - 1].apply(out);
    }
    return out;
  }

}  // namespace brauer
