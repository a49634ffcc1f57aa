#include "brauer/blocks.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <set>

#include "json.hpp"

#include "brauer/cell_module.hpp"
#include "brauer/error.hpp"

namespace brauer {

  namespace {
    // lambda minus a set of boxes, if that is a partition.
    std::optional<Partition> remove_boxes(Partition const& lambda, std::set<Box> const& boxes) {
      std::vector<int> parts = lambda.parts();
      std::vector<int> cut(parts.size(), 0);
      for (Box const& b : boxes) {
        if (!lambda.contains(b)) {
          return std::nullopt;
        }
        ++cut[b.row - 1];
      }
      for (Box const& b : boxes) {
        if (b.col <= parts[b.row - 1] - cut[b.row - 1]) {
          return std::nullopt;  // not a final segment of its row
        }
      }
      for (std::size_t r = 0; r < parts.size(); ++r) {
        parts[r] -= cut[r];
        if (r > 0 && parts[r] > parts[r - 1]) {
          return std::nullopt;
        }
      }
      return Partition(std::move(parts));
    }

    // Largest-row box of content c in boxes, skipping those in used.
    std::optional<Box> maximal_with_content(std::vector<Box> const& boxes, int c,
                                            std::set<Box> const& used) {
      std::optional<Box> best;
      for (Box const& b : boxes) {
        if (b.content() == c && !used.contains(b) && (!best || *best < b)) {
          best = b;
        }
      }
      return best;
    }

    bool is_even_delta(long delta) {
      return delta % 2 == 0;
    }
  }  // namespace

  bool skew_is_balanced(SkewShape const& s, long delta) {
    auto const counts = s.content_counts();
    for (auto const& [c, k] : counts) {
      long const partner = 1 - delta - c;
      if (partner == c) {
        if (k % 2 != 0) {
          return false;
        }
      } else if (s.count_content(static_cast<int>(partner)) != k) {
        return false;
      }
    }
    if (is_even_delta(delta)) {
      int const top    = static_cast<int>((2 - delta) / 2);
      int       rightmost_top = 0;
      for (Box const& b : s.boxes()) {
        if (b.content() == top) {
          rightmost_top = std::max(rightmost_top, b.col);
        }
      }
      bool guarded_pair = false;
      for (Box const& b : s.boxes()) {
        if (b.content() == top && s.contains(Box{b.row + 1, b.col}) && b.col == rightmost_top) {
          guarded_pair = true;
        }
      }
      if (guarded_pair && s.count_content(top) % 2 != 0) {
        return false;
      }
    }
    return true;
  }

  bool is_balanced(Partition const& lambda, Partition const& mu, long delta) {
    auto const [a, b] = skew(lambda, mu);
    return skew_is_balanced(a, delta) && skew_is_balanced(b, delta);
  }

  Rational bias(Partition const& lambda, Partition const& tau, long delta) {
    auto const [a, b] = skew(lambda, tau);
    int const total   = a.size() + b.size();
    if (total % 2 != 0) {
      fail(ErrorKind::invalid_argument, "bias: the symmetric difference has an odd number of boxes");
    }
    long sum = 0;
    for (int c : a.contents()) {
      sum += c;
    }
    for (int c : b.contents()) {
      sum += c;
    }
    return Rational(sum - static_cast<long>(total / 2) * (1 - delta));
  }

  BlockPartition block_partition(int n, long delta) {
    if (n < 0) {
      fail(ErrorKind::invalid_argument, "block_partition: n must be nonnegative");
    }
    auto const       w = weights(n, delta);
    std::vector<int> parent(w.size());
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
      while (parent[x] != x) {
        x = parent[x] = parent[parent[x]];
      }
      return x;
    };
    for (std::size_t i = 0; i < w.size(); ++i) {
      for (std::size_t j = i + 1; j < w.size(); ++j) {
        if (is_balanced(w[i], w[j], delta)) {
          parent[find(static_cast<int>(j))] = find(static_cast<int>(i));
        }
      }
    }
    BlockPartition   out{n, delta, {}};
    std::vector<int> block_of_root(w.size(), -1);
    for (std::size_t i = 0; i < w.size(); ++i) {
      int const root = find(static_cast<int>(i));
      if (block_of_root[root] < 0) {
        block_of_root[root] = static_cast<int>(out.blocks.size());
        out.blocks.push_back(Block{w[i], {}});
      }
      out.blocks[block_of_root[root]].members.push_back(w[i]);
    }
    for (Block& b : out.blocks) {
      int const least = std::min_element(b.members.begin(), b.members.end(),
                                         [](Partition const& x, Partition const& y) {
                                           return x.size() < y.size();
                                         })
                            ->size();
      int count = 0;
      for (Partition const& p : b.members) {
        if (p.size() == least) {
          b.minimal = p;
          ++count;
        }
        for (Partition const& q : b.members) {
          BRAUER_ASSERT(is_balanced(p, q, delta),
                        "block members " + p.to_string() + " and " + q.to_string()
                            + " are not balanced");
        }
      }
      BRAUER_ASSERT(count == 1, "block without a unique minimal weight");
    }
    return out;
  }

  std::string to_json(BlockPartition const& bp) {
    nlohmann::json j;
    j["n"]     = bp.n;
    j["delta"] = bp.delta;
    j["blocks"] = nlohmann::json::array();
    for (Block const& b : bp.blocks) {
      nlohmann::json members = nlohmann::json::array();
      for (Partition const& p : b.members) {
        members.push_back(p.parts());
      }
      j["blocks"].push_back({{"minimal", b.minimal.parts()}, {"members", std::move(members)}});
    }
    return j.dump();
  }

  ////////////////////////////////////////////////////////////////////////
  // Maximal balanced subpartitions
  ////////////////////////////////////////////////////////////////////////

  std::optional<SkewShape> i_maximal_balanced_skew(Partition const& lambda, Partition const& mu,
                                                   long delta, Box const& eps) {
    if (!lambda.contains(mu)) {
      fail(ErrorKind::invalid_argument, "i_maximal_balanced_sub requires mu ⊆ lambda");
    }
    auto const skew_boxes = difference(lambda, mu).boxes();
    auto const lambda_boxes = lambda.boxes();
    if (mu.contains(eps) || !lambda.contains(eps)
        || lambda.contains(Box{eps.row, eps.col + 1}) || lambda.contains(Box{eps.row + 1, eps.col})) {
      fail(ErrorKind::invalid_argument, "eps must be a removable box of lambda lying in lambda/mu");
    }
    long const pair_sum = 1 - delta;

    std::set<Box> s{eps};
    // For a self-paired content the partner may be eps itself.
    auto seed = maximal_with_content(skew_boxes, static_cast<int>(pair_sum - eps.content()), {});
    if (!seed) {
      return std::nullopt;
    }
    s.insert(*seed);

    auto close = [&]() {
      while (true) {
        std::set<Box> added;
        for (Box const& b : lambda_boxes) {
          if (s.contains(b)) {
            continue;
          }
          for (Box const& x : s) {
            if ((b.row == x.row && b.col > x.col) || (b.col == x.col && b.row > x.row)) {
              added.insert(b);
              break;
            }
          }
        }
        if (added.empty()) {
          return;
        }
        std::set<Box> partners;
        for (Box const& a : added) {
          auto p = maximal_with_content(skew_boxes, static_cast<int>(pair_sum - a.content()), s);
          if (p) {
            partners.insert(*p);
          }
        }
        s.insert(added.begin(), added.end());
        s.insert(partners.begin(), partners.end());
      }
    };
    close();

    if (is_even_delta(delta)) {
      int const top    = static_cast<int>((2 - delta) / 2);
      int const bottom = top - 1;
      bool      vertical = false;
      for (Box const& b : s) {
        if (b.content() == top && s.contains(Box{b.row + 1, b.col})) {
          vertical = true;
        }
      }
      if (vertical) {
        auto x = maximal_with_content(lambda_boxes, top, s);
        auto y = maximal_with_content(lambda_boxes, bottom, s);
        if (x) {
          s.insert(*x);
        }
        if (y) {
          s.insert(*y);
        }
        close();
      }
    } else {
      int const  middle = static_cast<int>((1 - delta) / 2);
      bool const present =
          std::any_of(s.begin(), s.end(), [&](Box const& b) { return b.content() == middle; });
      if (present) {
        if (auto z = maximal_with_content(lambda_boxes, middle, s)) {
          s.insert(*z);
        }
        close();
      }
    }
    return SkewShape(std::vector<Box>(s.begin(), s.end()));
  }

  std::optional<Partition> i_maximal_balanced_sub(Partition const& lambda, Partition const& mu,
                                                  long delta, Box const& eps) {
    auto sk = i_maximal_balanced_skew(lambda, mu, delta, eps);
    if (!sk) {
      return std::nullopt;
    }
    std::set<Box> boxes(sk->boxes().begin(), sk->boxes().end());
    auto          out = remove_boxes(lambda, boxes);
    BRAUER_ASSERT(out.has_value(), "lambda/mu^i is not removable from lambda = " + lambda.to_string());
    BRAUER_ASSERT(is_balanced(lambda, *out, delta),
                  "lambda = " + lambda.to_string() + " and mu^i = " + out->to_string()
                      + " are not balanced");
    return out;
  }

  Partition maximal_balanced_sub(Partition const& lambda, Partition const& mu, long delta) {
    if (!lambda.contains(mu) || lambda == mu) {
      fail(ErrorKind::invalid_argument, "maximal_balanced_sub requires mu ⊊ lambda");
    }
    if (!is_balanced(lambda, mu, delta)) {
      fail(ErrorKind::invalid_argument, "maximal_balanced_sub requires a balanced pair");
    }
    std::vector<SkewShape> skews;
    for (Box const& eps : removable_boxes(lambda)) {
      if (mu.contains(eps)) {
        continue;
      }
      if (auto sk = i_maximal_balanced_skew(lambda, mu, delta, eps)) {
        i_maximal_balanced_sub(lambda, mu, delta, eps);  // post-condition checks
        skews.push_back(*sk);
      }
    }
    BRAUER_ASSERT(!skews.empty(), "no removable box of lambda/mu has a partner");
    std::optional<SkewShape> best;
    for (SkewShape const& a : skews) {
      bool minimal = true;
      for (SkewShape const& b : skews) {
        if (b != a && b.is_subset_of(a)) {
          minimal = false;
          break;
        }
      }
      if (minimal && (!best || a < *best)) {
        best = a;
      }
    }
    std::set<Box> boxes(best->boxes().begin(), best->boxes().end());
    return *remove_boxes(lambda, boxes);
  }

  ////////////////////////////////////////////////////////////////////////
  // hat and minimality
  ////////////////////////////////////////////////////////////////////////

  std::string to_string(HatStep const& step) {
    bool const  rows = step.kind == HatStep::Kind::rows;
    std::string out  = rows ? "row" : "column";
    if (step.from == step.to) {
      return out + " " + std::to_string(step.to);
    }
    return out + "s " + std::to_string(step.from) + "-" + std::to_string(step.to);
  }

  HatResult hat(Partition const& lambda, long delta) {
    std::set<Box> cur;
    for (Box const& b : lambda.boxes()) {
      cur.insert(b);
    }
    HatResult out;
    while (!cur.empty()) {
      // Twice the distance of c from (1 - delta)/2, and its sign.
      auto offset = [&](Box const& b) { return 2L * b.content() - (1 - delta); };
      auto partnered = [&](Box const& b) {
        long const want = 1 - delta - b.content();
        return std::any_of(cur.begin(), cur.end(),
                           [&](Box const& x) { return x != b && x.content() == want; });
      };
      std::vector<Box> removable;
      for (Box const& b : cur) {
        if (!cur.contains(Box{b.row, b.col + 1}) && !cur.contains(Box{b.row + 1, b.col})) {
          removable.push_back(b);
        }
      }
      long best = -1;
      for (Box const& b : removable) {
        best = std::max(best, std::labs(offset(b)));
      }
      std::optional<Box> chosen;
      for (Box const& b : removable) {
        if (std::labs(offset(b)) == best && !partnered(b)) {
          chosen = b;
          break;
        }
      }
      if (!chosen || offset(*chosen) == 0) {
        break;
      }
      HatStep step{};
      step.chosen = *chosen;
      step.to     = offset(*chosen) > 0 ? chosen->row : chosen->col;
      step.kind   = offset(*chosen) > 0 ? HatStep::Kind::rows : HatStep::Kind::columns;
      step.from   = step.to;
      for (auto it = cur.begin(); it != cur.end();) {
        int const idx = step.kind == HatStep::Kind::rows ? it->row : it->col;
        if (idx <= step.to) {
          step.from = std::min(step.from, idx);
          it        = cur.erase(it);
        } else {
          ++it;
        }
      }
      out.steps.push_back(step);
    }
    out.shape = SkewShape(std::vector<Box>(cur.begin(), cur.end()));
    return out;
  }

  bool is_minimal(Partition const& lambda, long delta) {
    SkewShape const s = hat(lambda, delta).shape;
    if (s.empty()) {
      return true;
    }
    std::set<int> rows, cols;
    for (Box const& b : s.boxes()) {
      rows.insert(b.row);
      cols.insert(b.col);
    }
    if (rows.size() == 1 || cols.size() == 1) {
      return true;
    }
    if (is_even_delta(delta) && rows.size() == 2) {
      int const second = *rows.rbegin();
      int       last   = 0;
      for (Box const& b : s.boxes()) {
        if (b.row == second) {
          last = std::max(last, b.col);
        }
      }
      return Box{second, last}.content() == -delta / 2;
    }
    return false;
  }

  Partition minimal_weight(Partition const& lambda, long delta) {
    std::optional<Partition> best;
    int                      ties = 0;
    for (Partition const& mu : subpartitions(lambda)) {
      if ((delta == 0 && mu.empty() && !lambda.empty()) || !is_balanced(lambda, mu, delta)) {
        continue;
      }
      if (!best || mu.size() < best->size()) {
        best = mu;
        ties = 1;
      } else if (mu.size() == best->size()) {
        ++ties;
      }
    }
    BRAUER_ASSERT(best.has_value(), "lambda is balanced with itself");
    BRAUER_ASSERT(ties == 1, "several least balanced subpartitions of " + lambda.to_string());
    return *best;
  }

  std::optional<Partition> hom_target(Partition const& lambda, long delta) {
    Partition const least = minimal_weight(lambda, delta);
    if (least == lambda) {
      return std::nullopt;
    }
    return maximal_balanced_sub(lambda, least, delta);
  }

  std::vector<Partition> descent_chain(Partition const& lambda, long delta) {
    std::vector<Partition> chain{lambda};
    while (auto next = hom_target(chain.back(), delta)) {
      BRAUER_ASSERT(next->size() < chain.back().size(), "hom_target did not shrink the weight");
      chain.push_back(*next);
    }
    return chain;
  }

  ////////////////////////////////////////////////////////////////////////
  // Lattice prediction
  ////////////////////////////////////////////////////////////////////////

  LatticePrediction lattice_predict(Partition const& lambda, Partition const& mu, long delta) {
    if (!lambda.contains(mu)) {
      fail(ErrorKind::invalid_argument, "lattice_predict requires mu ⊆ lambda");
    }
    if (!is_balanced(lambda, mu, delta)) {
      fail(ErrorKind::invalid_argument, "lattice_predict requires a balanced pair");
    }
    SkewShape const s = difference(lambda, mu);
    for (SkewShape const& comp : s.components()) {
      if (comp.size() != 1) {
        fail(ErrorKind::invalid_argument, "lattice_predict requires lambda/mu to be isolated boxes");
      }
    }
    LatticePrediction out;
    std::set<Box>     used;
    std::vector<Box>  boxes = s.boxes();
    std::sort(boxes.begin(), boxes.end(),
              [](Box const& a, Box const& b) { return a.content() > b.content(); });
    for (Box const& b : boxes) {
      if (used.contains(b)) {
        continue;
      }
      long const         want = 1 - delta - b.content();
      std::optional<Box> partner;
      for (Box const& x : boxes) {
        if (x != b && !used.contains(x) && x.content() == want) {
          partner = x;
        }
      }
      if (!partner) {
        fail(ErrorKind::invalid_argument, "lattice_predict: box " + to_string(b) + " has no partner");
      }
      used.insert(b);
      used.insert(*partner);
      out.pairs.emplace_back(b, *partner);
    }
    out.m = static_cast<int>(out.pairs.size());
    if (out.m > 16) {
      fail(ErrorKind::dimension_cap, "lattice_predict: more than 16 pairs");
    }
    unsigned const count = 1U << out.m;
    for (unsigned x = 0; x < count; ++x) {
      std::set<Box> removed;
      for (int j = 0; j < out.m; ++j) {
        if (x & (1U << j)) {
          removed.insert(out.pairs[j].first);
          removed.insert(out.pairs[j].second);
        }
      }
      auto node = remove_boxes(lambda, removed);
      BRAUER_ASSERT(node.has_value(), "lattice node is not a partition");
      out.nodes.push_back(*node);
      for (int j = 0; j < out.m; ++j) {
        if (!(x & (1U << j))) {
          out.covers.emplace_back(x, x | (1U << j));
        }
      }
    }
    return out;
  }

}  // namespace brauer
