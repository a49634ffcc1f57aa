#include "brauer/partition.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>
#include <sstream>

#include <gmpxx.h>

#include "brauer/error.hpp"

namespace brauer {

  std::string to_string(Box const& b) {
    return "(" + std::to_string(b.row) + "," + std::to_string(b.col) + ")";
  }

  ////////////////////////////////////////////////////////////////////////
  // Partition
  ////////////////////////////////////////////////////////////////////////

  Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    while (!parts_.empty() && parts_.back() == 0) {
      parts_.pop_back();
    }
    for (std::size_t i = 0; i < parts_.size(); ++i) {
      if (parts_[i] < 0 || (i > 0 && parts_[i] > parts_[i - 1])) {
        fail(ErrorKind::invalid_argument,
             "parts must be weakly decreasing nonnegative integers");
      }
    }
    size_ = std::accumulate(parts_.begin(), parts_.end(), 0);
  }

  Partition Partition::parse(std::string const& text) {
    std::string t;
    for (char c : text) {
      if (c != ' ' && c != '(' && c != ')' && c != '[' && c != ']') {
        t.push_back(c);
      }
    }
    if (t.empty() || t == "0") {
      return Partition();
    }
    std::vector<int>  parts;
    std::stringstream ss(t);
    std::string       item;
    while (std::getline(ss, item, ',')) {
      if (item.empty()
          || !std::all_of(item.begin(), item.end(), [](char c) { return c >= '0' && c <= '9'; })
          || item.size() > 6) {
        fail(ErrorKind::invalid_argument, "malformed partition '" + text + "'");
      }
      int v = std::stoi(item);
      if (v == 0) {
        fail(ErrorKind::invalid_argument,
             "zero part in partition '" + text + "' (use \"0\" for the empty partition)");
      }
      parts.push_back(v);
    }
    if (t.back() == ',') {
      fail(ErrorKind::invalid_argument, "malformed partition '" + text + "'");
    }
    return Partition(std::move(parts));
  }

  bool Partition::contains(Partition const& mu) const noexcept {
    if (mu.length() > length()) {
      return false;
    }
    for (int i = 1; i <= mu.length(); ++i) {
      if (mu.row(i) > row(i)) {
        return false;
      }
    }
    return true;
  }

  std::vector<Box> Partition::boxes() const {
    std::vector<Box> out;
    out.reserve(size_);
    for (int r = 1; r <= length(); ++r) {
      for (int c = 1; c <= row(r); ++c) {
        out.push_back({r, c});
      }
    }
    return out;
  }

  Partition Partition::conjugate() const {
    std::vector<int> conj(empty() ? 0 : parts_[0], 0);
    for (int p : parts_) {
      for (int c = 0; c < p; ++c) {
        ++conj[c];
      }
    }
    return Partition(std::move(conj));
  }

  bool Partition::is_rectangle() const noexcept {
    return std::all_of(parts_.begin(), parts_.end(), [this](int p) { return p == parts_[0]; });
  }

  bool Partition::is_even() const noexcept {
    return std::all_of(parts_.begin(), parts_.end(), [](int p) { return p % 2 == 0; });
  }

  Partition Partition::add_box(Box const& b) const {
    if (b.row < 1 || b.row > length() + 1 || b.col != row(b.row) + 1
        || (b.row > 1 && row(b.row - 1) < b.col)) {
      fail(ErrorKind::invalid_argument, "box " + brauer::to_string(b) + " is not addable");
    }
    std::vector<int> p = parts_;
    if (b.row == length() + 1) {
      p.push_back(1);
    } else {
      ++p[b.row - 1];
    }
    return Partition(std::move(p));
  }

  Partition Partition::remove_box(Box const& b) const {
    if (!contains(b) || b.col != row(b.row) || row(b.row + 1) >= b.col) {
      fail(ErrorKind::invalid_argument, "box " + brauer::to_string(b) + " is not removable");
    }
    std::vector<int> p = parts_;
    --p[b.row - 1];
    return Partition(std::move(p));
  }

  std::string Partition::to_string() const {
    if (empty()) {
      return "0";
    }
    std::string out;
    for (std::size_t i = 0; i < parts_.size(); ++i) {
      if (i > 0) {
        out += ',';
      }
      out += std::to_string(parts_[i]);
    }
    return out;
  }

  Partition intersect(Partition const& a, Partition const& b) {
    std::vector<int> p;
    for (int r = 1; r <= std::min(a.length(), b.length()); ++r) {
      p.push_back(std::min(a.row(r), b.row(r)));
    }
    return Partition(std::move(p));
  }

  std::vector<Partition> partitions_of(int n) {
    std::vector<Partition> out;
    if (n < 0) {
      return out;
    }
    std::vector<int>                          cur;
    std::function<void(int, int)> rec = [&](int remaining, int max_part) {
      if (remaining == 0) {
        out.emplace_back(cur);
        return;
      }
      for (int p = std::min(remaining, max_part); p >= 1; --p) {
        cur.push_back(p);
        rec(remaining - p, p);
        cur.pop_back();
      }
    };
    rec(n, n);
    return out;
  }

  std::vector<Partition> subpartitions(Partition const& lambda) {
    std::vector<Partition> out;
    std::vector<int>       cur;
    std::function<void(int, int)> rec = [&](int r, int bound) {
      if (r > lambda.length()) {
        out.emplace_back(cur);
        return;
      }
      for (int p = std::min(bound, lambda.row(r)); p >= 0; --p) {
        cur.push_back(p);
        if (p == 0) {
          // all later rows are zero too
          out.emplace_back(cur);
        } else {
          rec(r + 1, p);
        }
        cur.pop_back();
      }
    };
    rec(1, lambda.empty() ? 0 : lambda.row(1));
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
  }

  ////////////////////////////////////////////////////////////////////////
  // SkewShape
  ////////////////////////////////////////////////////////////////////////

  SkewShape::SkewShape(std::vector<Box> boxes) : boxes_(std::move(boxes)) {
    std::sort(boxes_.begin(), boxes_.end());
    if (std::adjacent_find(boxes_.begin(), boxes_.end()) != boxes_.end()) {
      fail(ErrorKind::invalid_argument, "duplicate box in skew shape");
    }
  }

  bool SkewShape::contains(Box const& b) const {
    return std::binary_search(boxes_.begin(), boxes_.end(), b);
  }

  std::map<int, int> SkewShape::content_counts() const {
    std::map<int, int> counts;
    for (auto const& b : boxes_) {
      ++counts[b.content()];
    }
    return counts;
  }

  int SkewShape::count_content(int c) const {
    return static_cast<int>(
        std::count_if(boxes_.begin(), boxes_.end(), [c](Box const& b) { return b.content() == c; }));
  }

  std::vector<int> SkewShape::contents() const {
    std::vector<int> out;
    for (auto const& b : boxes_) {
      out.push_back(b.content());
    }
    std::sort(out.begin(), out.end());
    return out;
  }

  std::vector<int> SkewShape::row_lengths() const {
    std::vector<int> out;
    int              current_row = 0;
    for (auto const& b : boxes_) {
      if (b.row != current_row) {
        out.push_back(0);
        current_row = b.row;
      }
      ++out.back();
    }
    return out;
  }

  std::vector<SkewShape> SkewShape::components() const {
    std::vector<int> label(boxes_.size(), -1);
    int              next = 0;
    for (std::size_t i = 0; i < boxes_.size(); ++i) {
      if (label[i] != -1) {
        continue;
      }
      std::vector<std::size_t> stack{i};
      label[i] = next;
      while (!stack.empty()) {
        Box b = boxes_[stack.back()];
        stack.pop_back();
        for (Box nb : {Box{b.row - 1, b.col}, Box{b.row + 1, b.col}, Box{b.row, b.col - 1},
                       Box{b.row, b.col + 1}}) {
          auto it = std::lower_bound(boxes_.begin(), boxes_.end(), nb);
          if (it != boxes_.end() && *it == nb) {
            auto j = static_cast<std::size_t>(it - boxes_.begin());
            if (label[j] == -1) {
              label[j] = next;
              stack.push_back(j);
            }
          }
        }
      }
      ++next;
    }
    std::vector<std::vector<Box>> groups(next);
    for (std::size_t i = 0; i < boxes_.size(); ++i) {
      groups[label[i]].push_back(boxes_[i]);
    }
    std::vector<SkewShape> out;
    for (auto& g : groups) {
      out.emplace_back(std::move(g));
    }
    // Components of a skew diagram are separated along the anti-diagonal
    // direction: top-right first means larger max content first.
    std::sort(out.begin(), out.end(), [](SkewShape const& a, SkewShape const& b) {
      return a.contents().back() > b.contents().back();
    });
    return out;
  }

  bool SkewShape::is_subset_of(SkewShape const& other) const {
    return std::includes(other.boxes_.begin(), other.boxes_.end(), boxes_.begin(), boxes_.end());
  }

  SkewShape difference(Partition const& lambda, Partition const& mu) {
    std::vector<Box> out;
    for (auto const& b : lambda.boxes()) {
      if (!mu.contains(b)) {
        out.push_back(b);
      }
    }
    return SkewShape(std::move(out));
  }

  std::pair<SkewShape, SkewShape> skew(Partition const& lambda, Partition const& mu) {
    Partition const common = intersect(lambda, mu);
    return {difference(lambda, common), difference(mu, common)};
  }

  std::vector<int> contents(Partition const& lambda) {
    std::vector<int> out;
    for (auto const& b : lambda.boxes()) {
      out.push_back(b.content());
    }
    std::sort(out.begin(), out.end());
    return out;
  }

  std::vector<Box> addable_boxes(Partition const& lambda) {
    std::vector<Box> out;
    for (int r = 1; r <= lambda.length() + 1; ++r) {
      int const c = lambda.row(r) + 1;
      if (r == 1 || lambda.row(r - 1) >= c) {
        out.push_back({r, c});
      }
    }
    std::sort(out.begin(), out.end(),
              [](Box const& a, Box const& b) { return a.content() < b.content(); });
    return out;
  }

  std::vector<Box> removable_boxes(Partition const& lambda) {
    std::vector<Box> out;
    for (int r = 1; r <= lambda.length(); ++r) {
      if (lambda.row(r + 1) < lambda.row(r)) {
        out.push_back({r, lambda.row(r)});
      }
    }
    std::sort(out.begin(), out.end(),
              [](Box const& a, Box const& b) { return a.content() < b.content(); });
    return out;
  }

  ////////////////////////////////////////////////////////////////////////
  // Littlewood-Richardson coefficients
  ////////////////////////////////////////////////////////////////////////

  namespace {
    // All ways of adding a horizontal strip of k boxes to shape, each
    // reported as the added boxes ordered right to left.
    void horizontal_strips(std::vector<int> const&        shape,
                           int                            k,
                           std::vector<int> const&        bound,
                           std::vector<std::vector<Box>>& out) {
      // Row r (0-based) may grow by at most prev(r) - shape[r], where prev is
      // the old length of the row above (so no two added boxes share a
      // column), and must stay inside bound.
      std::size_t const rows = shape.size() + 1;
      std::vector<int>  add(rows, 0);
      std::function<void(std::size_t, int)> rec = [&](std::size_t r, int left) {
        if (r == rows) {
          if (left == 0) {
            std::vector<Box> boxes;
            for (std::size_t i = 0; i < rows; ++i) {
              int const base = i < shape.size() ? shape[i] : 0;
              for (int a = add[i]; a >= 1; --a) {
                boxes.push_back({static_cast<int>(i) + 1, base + a});
              }
            }
            out.push_back(std::move(boxes));
          }
          return;
        }
        int const base  = r < shape.size() ? shape[r] : 0;
        int       limit = r == 0 ? left : shape[r - 1] - base;
        int const cap   = (r < bound.size() ? bound[r] : 0) - base;
        limit           = std::min({limit, left, cap});
        for (int a = limit; a >= 0; --a) {
          add[r] = a;
          rec(r + 1, left - a);
        }
        add[r] = 0;
      };
      rec(0, k);
    }
  }  // namespace

  std::uint64_t lr_coefficient(Partition const& mu, Partition const& eta, Partition const& lambda) {
    if (mu.size() + eta.size() != lambda.size() || !lambda.contains(mu)) {
      return 0;
    }
    if (eta.empty()) {
      return 1;
    }
    std::uint64_t count = 0;
    // previous[j] = row of b_{i-1, j+1}
    std::function<void(std::vector<int> const&, int, std::vector<int> const&)> rec =
        [&](std::vector<int> const& shape, int i, std::vector<int> const& previous) {
          if (i > eta.length()) {
            count += (shape == lambda.parts()) ? 1 : 0;
            return;
          }
          std::vector<std::vector<Box>> strips;
          horizontal_strips(shape, eta.row(i), lambda.parts(), strips);
          for (auto const& strip : strips) {
            // strip[j] is b_{i, j+1}: ordered right to left, so condition (i)
            // holds by construction; check condition (ii) against row i-1.
            bool ok = true;
            for (std::size_t j = 0; ok && j < strip.size() && i > 1; ++j) {
              ok = strip[j].row > previous[j];
            }
            if (!ok) {
              continue;
            }
            std::vector<int> next = shape;
            for (auto const& b : strip) {
              if (static_cast<int>(next.size()) < b.row) {
                next.resize(b.row, 0);
              }
              ++next[b.row - 1];
            }
            std::vector<int> rows;
            for (auto const& b : strip) {
              rows.push_back(b.row);
            }
            rec(next, i + 1, rows);
          }
        };
    rec(mu.parts(), 1, {});
    return count;
  }

  std::optional<Partition> unique_rectangle_eta(Partition const& mu, Partition const& lambda) {
    if (!lambda.is_rectangle()) {
      fail(ErrorKind::invalid_argument, "unique_rectangle_eta: lambda is not a rectangle");
    }
    if (!lambda.contains(mu)) {
      fail(ErrorKind::invalid_argument, "unique_rectangle_eta: mu is not contained in lambda");
    }
    if (mu == lambda) {
      return std::nullopt;
    }
    std::vector<int> parts;
    for (int r = lambda.length(); r >= 1; --r) {
      if (int len = lambda.row(r) - mu.row(r); len > 0) {
        parts.push_back(len);
      }
    }
    return Partition(std::move(parts));
  }

  ////////////////////////////////////////////////////////////////////////
  // Dimensions and characters
  ////////////////////////////////////////////////////////////////////////

  std::uint64_t factorial(int n) {
    std::uint64_t f = 1;
    for (int i = 2; i <= n; ++i) {
      f *= static_cast<std::uint64_t>(i);
    }
    return f;
  }

  std::uint64_t specht_dim(Partition const& lambda) {
    Partition const conj = lambda.conjugate();
    // n! / prod(hooks), accumulated as a reduced fraction to stay in range.
    std::vector<int> hooks;
    for (auto const& b : lambda.boxes()) {
      hooks.push_back((lambda.row(b.row) - b.col) + (conj.row(b.col) - b.row) + 1);
    }
    mpz_class num = 1;
    for (int i = 2; i <= lambda.size(); ++i) {
      num *= i;
    }
    mpz_class den = 1;
    for (int h : hooks) {
      den *= h;
    }
    return mpz_class(num / den).get_ui();
  }

  std::uint64_t count_standard_tableaux(Partition const& lambda) {
    static thread_local std::map<std::vector<int>, std::uint64_t> memo;
    if (lambda.size() <= 1) {
      return 1;
    }
    if (auto it = memo.find(lambda.parts()); it != memo.end()) {
      return it->second;
    }
    std::uint64_t total = 0;
    for (auto const& b : removable_boxes(lambda)) {
      total += count_standard_tableaux(lambda.remove_box(b));
    }
    memo.emplace(lambda.parts(), total);
    return total;
  }

  namespace {
    // Murnaghan-Nakayama on beta-sets: removing a rim hook of length k moves
    // a bead from b to b-k; the sign is (-1)^(beads strictly between).
    long mn_beta(std::vector<int> beta, std::vector<int> const& cycles, std::size_t idx,
                 std::map<std::pair<std::vector<int>, std::size_t>, long>& memo) {
      if (idx == cycles.size()) {
        return 1;
      }
      auto key = std::make_pair(beta, idx);
      if (auto it = memo.find(key); it != memo.end()) {
        return it->second;
      }
      int const                k = cycles[idx];
      std::set<int> const      beads(beta.begin(), beta.end());
      long                     total = 0;
      for (std::size_t i = 0; i < beta.size(); ++i) {
        int const b = beta[i];
        if (b - k < 0 || beads.count(b - k) != 0) {
          continue;
        }
        int between = 0;
        for (int x : beta) {
          between += (x > b - k && x < b) ? 1 : 0;
        }
        std::vector<int> next = beta;
        next[i]               = b - k;
        std::sort(next.begin(), next.end());
        long const sub = mn_beta(std::move(next), cycles, idx + 1, memo);
        total += (between % 2 == 0) ? sub : -sub;
      }
      memo.emplace(std::move(key), total);
      return total;
    }
  }  // namespace

  long mn_character(Partition const& lambda, Partition const& cycle_type) {
    if (lambda.size() != cycle_type.size()) {
      fail(ErrorKind::size_mismatch, "mn_character: |lambda| != |cycle type|");
    }
    std::vector<int> beta;
    int const        len = lambda.length();
    for (int i = 1; i <= len; ++i) {
      beta.push_back(lambda.row(i) + (len - i));
    }
    std::sort(beta.begin(), beta.end());
    std::map<std::pair<std::vector<int>, std::size_t>, long> memo;
    return mn_beta(std::move(beta), cycle_type.parts(), 0, memo);
  }

  std::uint64_t class_size(Partition const& cycle_type) {
    // n! / prod_k (k^{m_k} m_k!)
    mpz_class num = 1;
    for (int i = 2; i <= cycle_type.size(); ++i) {
      num *= i;
    }
    std::map<int, int> mult;
    for (int p : cycle_type.parts()) {
      ++mult[p];
    }
    mpz_class den = 1;
    for (auto [k, m] : mult) {
      for (int j = 0; j < m; ++j) {
        den *= k;
      }
      for (int j = 2; j <= m; ++j) {
        den *= j;
      }
    }
    return mpz_class(num / den).get_ui();
  }

}  // namespace brauer
