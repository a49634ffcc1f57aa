#include "brauer/cell_module.hpp"

#include <algorithm>
#include <functional>

#include "json.hpp"

#include "brauer/error.hpp"

namespace brauer {

  std::vector<int> PartialOneRow::free_nodes() const {
    std::vector<bool> used(n + 1, false);
    for (auto [a, b] : arcs) {
      used[a] = used[b] = true;
    }
    std::vector<int> out;
    for (int k = 1; k <= n; ++k) {
      if (!used[k]) {
        out.push_back(k);
      }
    }
    return out;
  }

  std::vector<PartialOneRow> enumerate_v(int n, int t) {
    if (n < 0 || t < 0 || 2 * t > n) {
      fail(ErrorKind::invalid_argument, "V_{n,t} requires 0 <= 2t <= n");
    }
    std::vector<PartialOneRow>       out;
    std::vector<bool>                used(n + 1, false);
    std::vector<std::pair<int, int>> arcs;
    // Arcs are generated with increasing left endpoints, so each set is
    // produced once and already sorted.
    std::function<void(int)> rec = [&](int from) {
      if (static_cast<int>(arcs.size()) == t) {
        out.push_back(PartialOneRow{n, arcs});
        return;
      }
      for (int a = from; a <= n; ++a) {
        if (used[a]) {
          continue;
        }
        for (int b = a + 1; b <= n; ++b) {
          if (used[b]) {
            continue;
          }
          used[a] = used[b] = true;
          arcs.emplace_back(a, b);
          rec(a + 1);
          arcs.pop_back();
          used[a] = used[b] = false;
        }
      }
    };
    rec(1);
    std::sort(out.begin(), out.end());
    return out;
  }

  BrauerDiagram half_diagram(PartialOneRow const& v) {
    auto const                free = v.free_nodes();
    int const                 r    = static_cast<int>(free.size());
    std::vector<std::uint8_t> p(v.n + r);
    for (auto [a, b] : v.arcs) {
      p[a - 1] = static_cast<std::uint8_t>(b - 1);
      p[b - 1] = static_cast<std::uint8_t>(a - 1);
    }
    for (int i = 0; i < r; ++i) {
      p[free[i] - 1] = static_cast<std::uint8_t>(v.n + i);
      p[v.n + i]     = static_cast<std::uint8_t>(free[i] - 1);
    }
    return BrauerDiagram(v.n, r, std::move(p));
  }

  bool is_weight(Partition const& lambda, int n) {
    return lambda.size() <= n && (n - lambda.size()) % 2 == 0;
  }

  std::vector<Partition> weights(int n, long delta) {
    std::vector<Partition> out;
    for (int k = n; k >= 0; k -= 2) {
      if (k == 0 && delta == 0) {
        break;
      }
      auto parts = partitions_of(k);
      out.insert(out.end(), parts.begin(), parts.end());
    }
    return out;
  }

  CellModule::CellModule(int n, long delta, Partition mu)
      : n_(n), delta_(delta), t_(0), specht_(mu) {
    if (n < 0 || mu.size() > n || (n - mu.size()) % 2 != 0) {
      fail(ErrorKind::invalid_argument,
           "cell module needs |mu| <= n with |mu| = n mod 2 (got n=" + std::to_string(n)
               + ", mu=" + mu.to_string() + ")");
    }
    if (delta == 0 && mu.empty()) {
      fail(ErrorKind::invalid_argument, "the empty partition is not a weight when delta = 0");
    }
    t_ = (n - mu.size()) / 2;
    v_ = enumerate_v(n, t_);
    for (std::size_t i = 0; i < v_.size(); ++i) {
      halves_.push_back(half_diagram(v_[i]));
      v_index_.emplace(v_[i].arcs, static_cast<int>(i));
    }
    for (int i = 1; i < n; ++i) {
      generators_.push_back(matrix_of(BrauerDiagram::transposition(n, i, i + 1)));
    }
    if (n >= 2) {
      x12_ = matrix_of(BrauerDiagram::x_hook(n, 1, 2));
    }
  }

  CellModule::Image CellModule::image(BrauerDiagram const& d, std::size_t v_index) const {
    if (d.north() != n_ || d.south() != n_) {
      fail(ErrorKind::size_mismatch, "diagram size differs from the module's n");
    }
    auto [h, loops] = concat(d, halves_[v_index]);
    int const r     = n_ - 2 * t_;
    Image     out;
    out.scale = loop_factor(delta_, loops);
    if (h.propagating_count() < r || sgn(out.scale) == 0) {
      return out;
    }
    std::vector<std::pair<int, int>> arcs;
    std::vector<int>                 rank(n_, -1);
    int                              next = 0;
    for (int x = 0; x < n_; ++x) {
      int const y = h.partner(x);
      if (y < n_) {
        if (x < y) {
          arcs.emplace_back(x + 1, y + 1);
        }
      } else {
        rank[x] = next++;
      }
    }
    out.target = v_index_.at(arcs);
    out.perm.resize(r);
    for (int b = 0; b < r; ++b) {
      out.perm[b] = rank[h.partner(n_ + b)];
    }
    return out;
  }

  Vector CellModule::act(BrauerDiagram const& d, std::span<Rational const> x) const {
    if (x.size() != dim()) {
      fail(ErrorKind::size_mismatch, "vector dimension differs from the module's");
    }
    std::size_t const f = specht_.dim();
    Vector            out(dim());
    for (std::size_t v = 0; v < v_.size(); ++v) {
      auto const block = x.subspan(v * f, f);
      if (std::all_of(block.begin(), block.end(), [](Rational const& q) { return sgn(q) == 0; })) {
        continue;
      }
      Image const img = image(d, v);
      if (img.target < 0) {
        continue;
      }
      Vector const moved = specht_.act_perm(img.perm, block);
      for (std::size_t k = 0; k < f; ++k) {
        out[img.target * f + k] += img.scale * moved[k];
      }
    }
    return out;
  }

  Matrix CellModule::matrix_of(BrauerDiagram const& d) const {
    std::size_t const                  f = specht_.dim();
    Matrix                             out(dim(), dim());
    std::map<std::vector<int>, Matrix> cache;
    for (std::size_t v = 0; v < v_.size(); ++v) {
      Image const img = image(d, v);
      if (img.target < 0) {
        continue;
      }
      auto it = cache.find(img.perm);
      if (it == cache.end()) {
        it = cache.emplace(img.perm, specht_.perm_matrix(img.perm)).first;
      }
      Matrix const& rho = it->second;
      for (std::size_t a = 0; a < f; ++a) {
        for (std::size_t b = 0; b < f; ++b) {
          out(img.target * f + a, v * f + b) = img.scale * rho(a, b);
        }
      }
    }
    return out;
  }

  Rational CellModule::trace(BrauerDiagram const& d) const {
    Rational out;
    for (std::size_t v = 0; v < v_.size(); ++v) {
      Image const img = image(d, v);
      if (img.target != static_cast<int>(v)) {
        continue;
      }
      Matrix const rho = specht_.perm_matrix(img.perm);
      for (std::size_t k = 0; k < specht_.dim(); ++k) {
        out += img.scale * rho(k, k);
      }
    }
    return out;
  }

  Matrix CellModule::matrix_of(AlgebraElement const& a) const {
    if (a.n() != n_ || a.delta() != delta_) {
      fail(ErrorKind::size_mismatch, "algebra element does not match the module's n or delta");
    }
    Matrix out(dim(), dim());
    for (auto const& [d, c] : a.terms()) {
      out = out + c * matrix_of(d);
    }
    return out;
  }

  Matrix const& CellModule::generator(int i) const {
    if (i < 1 || i >= n_) {
      fail(ErrorKind::invalid_argument, "generator index out of range");
    }
    return generators_[i - 1];
  }

  Matrix const& CellModule::x12() const {
    if (n_ < 2) {
      fail(ErrorKind::invalid_argument, "X_{1,2} requires n >= 2");
    }
    return x12_;
  }

  Matrix CellModule::gram_matrix() const {
    std::size_t const                  f = specht_.dim();
    int const                          r = n_ - 2 * t_;
    Matrix                             out(dim(), dim());
    std::map<std::vector<int>, Matrix> cache;
    for (std::size_t v = 0; v < v_.size(); ++v) {
      BrauerDiagram const top = flip(halves_[v]);
      for (std::size_t w = 0; w < v_.size(); ++w) {
        auto [p, loops]      = concat(top, halves_[w]);
        Rational const scale = loop_factor(delta_, loops);
        if (p.propagating_count() < r || sgn(scale) == 0) {
          continue;
        }
        auto const tau = p.as_permutation();
        auto       it  = cache.find(tau);
        if (it == cache.end()) {
          it = cache.emplace(tau, specht_.form() * specht_.perm_matrix(tau)).first;
        }
        for (std::size_t a = 0; a < f; ++a) {
          for (std::size_t b = 0; b < f; ++b) {
            out(v * f + a, w * f + b) = scale * it->second(a, b);
          }
        }
      }
    }
    return out;
  }

  Rational predicted_central_scalar(int n, long delta, Partition const& mu) {
    if (!is_weight(mu, n)) {
      fail(ErrorKind::invalid_argument, "not a weight of B_n");
    }
    long sum = 0;
    for (int c : contents(mu)) {
      sum += c;
    }
    long const t = (n - mu.size()) / 2;
    return Rational(sum - t * (delta - 1));
  }

  bool CellModule::t_action_check() const {
    if (n_ < 2) {
      return true;
    }
    Matrix const m = matrix_of(central_element(n_, delta_));
    Rational     scalar;
    return m.is_scalar(&scalar) && (dim() == 0 || scalar == predicted_central_scalar(n_, delta_, shape()));
  }

  std::string matrix_json(Matrix const& m) {
    nlohmann::json rows = nlohmann::json::array();
    for (std::size_t r = 0; r < m.rows(); ++r) {
      nlohmann::json row = nlohmann::json::array();
      for (std::size_t c = 0; c < m.cols(); ++c) {
        row.push_back(to_string(m(r, c)));
      }
      rows.push_back(std::move(row));
    }
    return rows.dump();
  }

  std::string CellModule::matrices_json() const {
    nlohmann::json j;
    j["n"]     = n_;
    j["delta"] = delta_;
    j["mu"]    = shape().parts();
    j["dim"]   = dim();
    nlohmann::json gens = nlohmann::json::object();
    for (int i = 1; i < n_; ++i) {
      gens["s" + std::to_string(i)] = nlohmann::json::parse(matrix_json(generator(i)));
    }
    if (n_ >= 2) {
      gens["X12"] = nlohmann::json::parse(matrix_json(x12_));
    }
    j["generators"] = std::move(gens);
    return j.dump();
  }

  RestrictionRule restriction_rule(Partition const& lambda, int n) {
    if (!is_weight(lambda, n)) {
      fail(ErrorKind::invalid_argument, "restriction_rule: lambda is not in Lambda_n");
    }
    RestrictionRule out;
    for (Box const& b : removable_boxes(lambda)) {
      out.down.push_back(lambda.remove_box(b));
    }
    if (lambda.size() + 1 <= n - 1) {
      for (Box const& b : addable_boxes(lambda)) {
        out.up.push_back(lambda.add_box(b));
      }
    }
    return out;
  }

}  // namespace brauer
