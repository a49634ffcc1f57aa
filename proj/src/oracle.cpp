#include "brauer/oracle.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <numeric>

#include "json.hpp"

#include "brauer/blocks.hpp"
#include "brauer/diagram.hpp"
#include "brauer/error.hpp"

namespace brauer {

  std::size_t max_module_dim() {
    char const* env = std::getenv("BRAUER_MAX_DIM");
    if (env == nullptr || *env == '\0') {
      return 400;
    }
    std::string const text(env);
    if (!std::all_of(text.begin(), text.end(), [](char c) { return c >= '0' && c <= '9'; })
        || text.size() > 9) {
      fail(ErrorKind::invalid_argument, "BRAUER_MAX_DIM must be a positive integer");
    }
    return static_cast<std::size_t>(std::stoul(text));
  }

  namespace {
    std::uint64_t predicted_dim(int n, Partition const& mu) {
      int const     r = mu.size();
      int const     t = (n - r) / 2;
      std::uint64_t v = 1;
      // |V_{n,t}| = n! / (2^t t! r!) = C(n, r) (2t-1)!!
      for (int k = 1; k <= r; ++k) {
        v = v * static_cast<std::uint64_t>(n - r + k) / static_cast<std::uint64_t>(k);
      }
      for (int k = 2 * t - 1; k > 1; k -= 2) {
        v *= static_cast<std::uint64_t>(k);
      }
      return v * specht_dim(mu);
    }

    CellModule build(int n, long delta, Partition const& mu) {
      if (!is_weight(mu, n)) {
        fail(ErrorKind::invalid_argument,
             mu.to_string() + " is not a weight of B_" + std::to_string(n));
      }
      if (n > 12 || predicted_dim(n, mu) > max_module_dim()) {
        fail(ErrorKind::dimension_cap,
             "Delta_" + std::to_string(n) + "(" + mu.to_string()
                 + ") exceeds BRAUER_MAX_DIM = " + std::to_string(max_module_dim()));
      }
      return CellModule(n, delta, mu);
    }

    // Adds the rows of a - I; returns true once the system has full rank.
    bool add_relation(RowEchelon& sys, Matrix a) {
      for (std::size_t i = 0; i < a.rows(); ++i) {
        a(i, i) -= 1;
      }
      for (std::size_t i = 0; i < a.rows(); ++i) {
        auto const row = a.row(i);
        if (std::all_of(row.begin(), row.end(), [](Rational const& q) { return sgn(q) == 0; })) {
          continue;
        }
        sys.add(Vector(row.begin(), row.end()));
        if (sys.full()) {
          return true;
        }
      }
      return false;
    }

    bool add_rows(RowEchelon& sys, Matrix const& a) {
      for (std::size_t i = 0; i < a.rows(); ++i) {
        auto const row = a.row(i);
        if (std::all_of(row.begin(), row.end(), [](Rational const& q) { return sgn(q) == 0; })) {
          continue;
        }
        sys.add(Vector(row.begin(), row.end()));
        if (sys.full()) {
          return true;
        }
      }
      return false;
    }

    std::vector<int> identity_perm(int n) {
      std::vector<int> p(n);
      std::iota(p.begin(), p.end(), 0);
      return p;
    }
  }  // namespace

  std::size_t hom_dim(int n, long delta, Partition const& lambda, Partition const& mu) {
    if (!is_weight(lambda, n)) {
      fail(ErrorKind::invalid_argument,
           lambda.to_string() + " is not a weight of B_" + std::to_string(n));
    }
    if (delta == 0 && lambda.empty()) {
      fail(ErrorKind::invalid_argument, "the empty partition is not a weight when delta = 0");
    }
    if (predicted_dim(n, lambda) > max_module_dim()) {
      fail(ErrorKind::dimension_cap, "source module exceeds BRAUER_MAX_DIM");
    }
    CellModule const  target = build(n, delta, mu);
    std::size_t const d      = target.dim();
    if (d == 0) {
      return 0;
    }
    int const  r = lambda.size();
    int const  t = (n - r) / 2;
    RowEchelon sys(d);

    std::map<std::pair<int, int>, Matrix> swaps;
    auto swap_matrix = [&](int i, int j) -> Matrix const& {
      auto it = swaps.find({i, j});
      if (it == swaps.end()) {
        it = swaps.emplace(std::pair{i, j}, target.matrix_of(BrauerDiagram::transposition(n, i, j)))
                 .first;
      }
      return it->second;
    };

    // The generator is fixed by the stabiliser of its arcs.
    for (int k = 0; k < t; ++k) {
      int const a = r + 2 * k + 1;
      if (add_relation(sys, swap_matrix(a, a + 1))) {
        return 0;
      }
      if (k + 1 < t) {
        auto sigma = identity_perm(n);
        std::swap(sigma[a - 1], sigma[a + 1]);
        std::swap(sigma[a], sigma[a + 2]);
        if (add_relation(sys, target.matrix_of(BrauerDiagram::permutation(sigma)))) {
          return 0;
        }
      }
    }

    // Its Specht part is fixed by the Young symmetriser of lambda on 1..r,
    // (f/r!) * (column antisymmetriser) * (row symmetriser).
    if (r >= 2) {
      Matrix const id = Matrix::identity(d);
      Matrix       rows_sym = id;
      Matrix       cols_alt = id;
      int          offset   = 0;
      std::vector<std::vector<int>> columns(lambda.row(1));
      for (int row = 1; row <= lambda.length(); ++row) {
        for (int c = 1; c <= lambda.row(row); ++c) {
          columns[c - 1].push_back(offset + c);
        }
        for (int j = 2; j <= lambda.row(row); ++j) {
          Matrix factor = id;
          for (int i = 1; i < j; ++i) {
            factor = factor + swap_matrix(offset + i, offset + j);
          }
          rows_sym = rows_sym * factor;
        }
        offset += lambda.row(row);
      }
      for (auto const& col : columns) {
        for (std::size_t j = 1; j < col.size(); ++j) {
          Matrix factor = id;
          for (std::size_t i = 0; i < j; ++i) {
            factor = factor - swap_matrix(col[i], col[j]);
          }
          cols_alt = cols_alt * factor;
        }
      }
      Rational const scale = Rational(static_cast<unsigned long>(specht_dim(lambda)))
                             / Rational(static_cast<unsigned long>(factorial(r)));
      if (add_relation(sys, scale * (cols_alt * rows_sym))) {
        return 0;
      }
    }

    // X_{i,j} on the generator is a scalar multiple of a permutation of it,
    // or zero.
    std::vector<std::pair<int, int>> arcs;
    for (int k = 0; k < t; ++k) {
      arcs.emplace_back(r + 2 * k + 1, r + 2 * k + 2);
    }
    BrauerDiagram const h0 = half_diagram(PartialOneRow{n, arcs});
    for (int i = 1; i <= n; ++i) {
      for (int j = i + 1; j <= n; ++j) {
        BrauerDiagram const x = BrauerDiagram::x_hook(n, i, j);
        auto [h, loops]       = concat(x, h0);
        Rational const scale  = loop_factor(delta, loops);
        Matrix         rel    = target.matrix_of(x);
        if (h.propagating_count() == r && sgn(scale) != 0) {
          std::vector<int> sigma(n);
          for (int k = 0; k < r; ++k) {
            sigma[k] = h.partner(n + k);
          }
          int m = 0;
          for (int a = 0; a < n; ++a) {
            int const b = h.partner(a);
            if (b < n && a < b) {
              sigma[r + 2 * m]     = a;
              sigma[r + 2 * m + 1] = b;
              ++m;
            }
          }
          BrauerDiagram const p = BrauerDiagram::permutation(sigma);
          BRAUER_ASSERT(concat(p, h0).first == h, "permutation does not reproduce X_{i,j} h0");
          rel = rel - scale * target.matrix_of(p);
        }
        if (add_rows(sys, rel)) {
          return 0;
        }
      }
    }
    return sys.nullity();
  }

  std::size_t hom_dim_direct(int n, long delta, Partition const& lambda, Partition const& mu) {
    CellModule const  src = build(n, delta, lambda);
    CellModule const  dst = build(n, delta, mu);
    std::size_t const a   = dst.dim();
    std::size_t const b   = src.dim();
    if (a * b > 6000) {
      fail(ErrorKind::dimension_cap, "hom_dim_direct: more than 6000 unknowns");
    }
    if (a * b == 0) {
      return 0;
    }
    RowEchelon sys(a * b);
    auto       add_generator = [&](Matrix const& g_dst, Matrix const& g_src) {
      // (g_dst M - M g_src)_{ij}, M_{kl} at index k*b + l.
      for (std::size_t i = 0; i < a; ++i) {
        for (std::size_t j = 0; j < b; ++j) {
          Vector row(a * b);
          bool   nonzero = false;
          for (std::size_t k = 0; k < a; ++k) {
            if (sgn(g_dst(i, k)) != 0) {
              row[k * b + j] += g_dst(i, k);
              nonzero = true;
            }
          }
          for (std::size_t l = 0; l < b; ++l) {
            if (sgn(g_src(l, j)) != 0) {
              row[i * b + l] -= g_src(l, j);
              nonzero = true;
            }
          }
          if (nonzero) {
            sys.add(std::move(row));
            if (sys.full()) {
              return true;
            }
          }
        }
      }
      return false;
    };
    for (int i = 1; i < n; ++i) {
      if (add_generator(dst.generator(i), src.generator(i))) {
        return 0;
      }
    }
    if (n >= 2 && add_generator(dst.x12(), src.x12())) {
      return 0;
    }
    return sys.nullity();
  }

  Rational central_scalar(int n, long delta, Partition const& mu) {
    CellModule const M = build(n, delta, mu);
    Rational const   predicted = predicted_central_scalar(n, delta, mu);
    if (n < 2) {
      return predicted;
    }
    Matrix const m = M.matrix_of(central_element(n, delta));
    Rational     scalar;
    BRAUER_ASSERT(m.is_scalar(&scalar), "central element is not scalar on Delta_" + std::to_string(n)
                                            + "(" + mu.to_string() + ")");
    BRAUER_ASSERT(scalar == predicted, "central scalar " + to_string(scalar) + " differs from "
                                           + to_string(predicted));
    return scalar;
  }

  std::size_t gram_rank(int n, long delta, Partition const& mu) {
    return rank(build(n, delta, mu).gram_matrix());
  }

  std::size_t restriction_multiplicity_lr(int n, Partition const& mu, Partition const& lambda) {
    if (lambda.size() != n || !is_weight(mu, n)) {
      fail(ErrorKind::invalid_argument, "restriction_multiplicity needs lambda ⊢ n and mu in Lambda_n");
    }
    std::size_t total = 0;
    for (Partition const& eta : partitions_of(n - mu.size())) {
      if (eta.is_even()) {
        total += lr_coefficient(mu, eta, lambda);
      }
    }
    return total;
  }

  std::size_t restriction_multiplicity(int n, long delta, Partition const& mu,
                                       Partition const& lambda) {
    std::size_t const lr = restriction_multiplicity_lr(n, mu, lambda);
    CellModule const  M  = build(n, delta, mu);
    Rational          sum;
    for (Partition const& rho : partitions_of(n)) {
      // A permutation with cycle type rho.
      std::vector<int> sigma(n);
      int              start = 0;
      for (int len : rho.parts()) {
        for (int k = 0; k < len; ++k) {
          sigma[start + k] = start + (k + 1) % len;
        }
        start += len;
      }
      Rational const trace = M.trace(BrauerDiagram::permutation(sigma));
      sum += Rational(static_cast<unsigned long>(class_size(rho))) * mn_character(lambda, rho) * trace;
    }
    sum /= Rational(static_cast<unsigned long>(factorial(n)));
    BRAUER_ASSERT(sum.get_den() == 1 && sgn(sum) >= 0, "character multiplicity is not a natural number");
    std::size_t const chars = sum.get_num().get_ui();
    BRAUER_ASSERT(chars == lr, "restriction multiplicity of S^" + lambda.to_string() + " in Delta_"
                                   + std::to_string(n) + "(" + mu.to_string() + "): characters give "
                                   + std::to_string(chars) + ", LR sum gives " + std::to_string(lr));
    return chars;
  }

  namespace {
    struct Sweep {
      std::vector<Partition>   weights;
      std::vector<Rational>    scalars;
      std::map<std::pair<std::size_t, std::size_t>, std::size_t> homs;
    };

    Sweep sweep(int n, long delta, std::vector<Check>* checks) {
      Sweep s;
      s.weights = weights(n, delta);
      Check scal{"central_scalar_matches_prediction", n, delta, true, {}};
      for (Partition const& w : s.weights) {
        try {
          s.scalars.push_back(central_scalar(n, delta, w));
        } catch (Error const& e) {
          if (e.kind() == ErrorKind::dimension_cap) {
            throw;
          }
          s.scalars.push_back(predicted_central_scalar(n, delta, w));
          if (scal.pass) {
            scal.pass    = false;
            scal.witness = w.to_string() + ": " + e.what();
          }
        }
      }
      if (checks != nullptr) {
        checks->push_back(scal);
      }
      for (std::size_t i = 0; i < s.weights.size(); ++i) {
        for (std::size_t j = 0; j < s.weights.size(); ++j) {
          // Homomorphisms commute with the central element.
          if (i == j || s.scalars[i] != s.scalars[j]) {
            continue;
          }
          s.homs[{i, j}] = hom_dim(n, delta, s.weights[i], s.weights[j]);
        }
      }
      return s;
    }
  }  // namespace

  BlockGraph block_graph(int n, long delta) {
    Sweep const s = sweep(n, delta, nullptr);
    BlockGraph  g{n, delta, s.weights, {}};
    for (auto const& [ij, h] : s.homs) {
      if (h > 0) {
        g.edges.emplace_back(s.weights[ij.first], s.weights[ij.second]);
      }
    }
    return g;
  }

  std::vector<Check> verify_blocks(int n, long delta) {
    std::vector<Check>   checks;
    Sweep const          s  = sweep(n, delta, &checks);
    BlockPartition const bp = block_partition(n, delta);
    auto                 index_of = [&](Partition const& p) {
      return static_cast<std::size_t>(std::find(s.weights.begin(), s.weights.end(), p)
                                      - s.weights.begin());
    };

    Check edges{"hom_edges_within_blocks", n, delta, true, {}};
    for (auto const& [ij, h] : s.homs) {
      if (h > 0 && !is_balanced(s.weights[ij.first], s.weights[ij.second], delta) && edges.pass) {
        edges.pass    = false;
        edges.witness = "Hom(" + s.weights[ij.first].to_string() + " -> "
                        + s.weights[ij.second].to_string() + ") = " + std::to_string(h);
      }
    }
    checks.push_back(edges);

    Check descent{"descent_chains_realised", n, delta, true, {}};
    for (Partition const& w : s.weights) {
      auto const chain = descent_chain(w, delta);
      for (std::size_t k = 0; k + 1 < chain.size(); ++k) {
        std::size_t const h = hom_dim(n, delta, chain[k], chain[k + 1]);
        if (h == 0 && descent.pass) {
          descent.pass    = false;
          descent.witness = "Hom(" + chain[k].to_string() + " -> " + chain[k + 1].to_string() + ") = 0";
        }
      }
    }
    checks.push_back(descent);

    Check constant{"central_scalar_constant_on_blocks", n, delta, true, {}};
    Check minimal{"unique_minimal_weight", n, delta, true, {}};
    for (Block const& b : bp.blocks) {
      Rational const first = s.scalars[index_of(b.members.front())];
      for (Partition const& m : b.members) {
        if (s.scalars[index_of(m)] != first && constant.pass) {
          constant.pass    = false;
          constant.witness = b.members.front().to_string() + " vs " + m.to_string();
        }
        if (minimal_weight(m, delta) != b.minimal && minimal.pass) {
          minimal.pass    = false;
          minimal.witness = "minimal_weight(" + m.to_string() + ") = "
                            + minimal_weight(m, delta).to_string() + ", block minimum "
                            + b.minimal.to_string();
        }
      }
    }
    checks.push_back(constant);
    checks.push_back(minimal);
    return checks;
  }

  std::string to_json(std::vector<Check> const& checks) {
    nlohmann::json list = nlohmann::json::array();
    for (Check const& c : checks) {
      nlohmann::json item = {{"name", c.name},
                             {"params", {{"n", c.n}, {"delta", c.delta}}},
                             {"status", c.pass ? "pass" : "fail"}};
      if (!c.witness.empty()) {
        item["witness"] = c.witness;
      }
      list.push_back(std::move(item));
    }
    return nlohmann::json{{"checks", std::move(list)}}.dump();
  }

}  // namespace brauer
