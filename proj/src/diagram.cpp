#include "brauer/diagram.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>

#include "json.hpp"

#include "brauer/error.hpp"

namespace brauer {

  ////////////////////////////////////////////////////////////////////////
  // BrauerDiagram
  ////////////////////////////////////////////////////////////////////////

  BrauerDiagram::BrauerDiagram(int north, int south, std::vector<std::uint8_t> partner)
      : north_(north), south_(south), partner_(std::move(partner)) {
    int const total = north + south;
    if (north < 0 || south < 0 || total > 255 || static_cast<int>(partner_.size()) != total) {
      fail(ErrorKind::invalid_argument, "diagram: partner array has the wrong length");
    }
    for (int x = 0; x < total; ++x) {
      int const y = partner_[x];
      if (y >= total || y == x || partner_[y] != x) {
        fail(ErrorKind::invalid_argument, "diagram: partner array is not a perfect matching");
      }
    }
  }

  BrauerDiagram BrauerDiagram::identity(int n) {
    std::vector<std::uint8_t> p(2 * n);
    for (int k = 0; k < n; ++k) {
      p[k]     = static_cast<std::uint8_t>(n + k);
      p[n + k] = static_cast<std::uint8_t>(k);
    }
    return BrauerDiagram(n, n, std::move(p));
  }

  BrauerDiagram BrauerDiagram::permutation(std::span<int const> sigma) {
    int const                 n = static_cast<int>(sigma.size());
    std::vector<std::uint8_t> p(2 * n, 0);
    std::vector<bool>         seen(n, false);
    for (int b = 0; b < n; ++b) {
      int const a = sigma[b];
      if (a < 0 || a >= n || seen[a]) {
        fail(ErrorKind::invalid_argument, "permutation diagram: not a permutation");
      }
      seen[a]  = true;
      p[n + b] = static_cast<std::uint8_t>(a);
      p[a]     = static_cast<std::uint8_t>(n + b);
    }
    return BrauerDiagram(n, n, std::move(p));
  }

  BrauerDiagram BrauerDiagram::x_hook(int n, int i, int j) {
    if (!(1 <= i && i < j && j <= n)) {
      fail(ErrorKind::invalid_argument, "X_{i,j} requires 1 <= i < j <= n");
    }
    BrauerDiagram d = identity(n);
    auto&         p = d.partner_;
    p[i - 1]        = static_cast<std::uint8_t>(j - 1);
    p[j - 1]        = static_cast<std::uint8_t>(i - 1);
    p[n + i - 1]    = static_cast<std::uint8_t>(n + j - 1);
    p[n + j - 1]    = static_cast<std::uint8_t>(n + i - 1);
    return d;
  }

  BrauerDiagram BrauerDiagram::transposition(int n, int i, int j) {
    if (!(1 <= i && i < j && j <= n)) {
      fail(ErrorKind::invalid_argument, "transposition (i j) requires 1 <= i < j <= n");
    }
    std::vector<int> sigma(n);
    std::iota(sigma.begin(), sigma.end(), 0);
    std::swap(sigma[i - 1], sigma[j - 1]);
    return permutation(sigma);
  }

  namespace {
    int parse_node(std::string tok, int north, int south) {
      bool primed = false;
      if (!tok.empty() && tok.back() == '\'') {
        primed = true;
        tok.pop_back();
      }
      if (tok.empty() || tok.size() > 4
          || !std::all_of(tok.begin(), tok.end(), [](char c) { return c >= '0' && c <= '9'; })) {
        fail(ErrorKind::invalid_argument, "diagram: malformed node '" + tok + "'");
      }
      int const k     = std::stoi(tok);
      int const limit = primed ? south : north;
      if (k < 1 || k > limit) {
        fail(ErrorKind::invalid_argument, "diagram: node out of range '" + tok + "'");
      }
      return primed ? north + k - 1 : k - 1;
    }
  }  // namespace

  BrauerDiagram BrauerDiagram::parse(std::string const& text) {
    auto const semi = text.find(';');
    if (semi == std::string::npos) {
      fail(ErrorKind::invalid_argument, "diagram: expected 'n=<int>; pairs...'");
    }
    std::string head;
    for (char c : text.substr(0, semi)) {
      if (c != ' ') {
        head.push_back(c);
      }
    }
    int north = -1, south = -1;
    {
      std::stringstream ss(head);
      std::string       item;
      while (std::getline(ss, item, ',')) {
        auto eq = item.find('=');
        if (eq == std::string::npos) {
          fail(ErrorKind::invalid_argument, "diagram: malformed header '" + head + "'");
        }
        std::string key = item.substr(0, eq);
        std::string val = item.substr(eq + 1);
        if (val.empty() || val.size() > 3
            || !std::all_of(val.begin(), val.end(), [](char c) { return c >= '0' && c <= '9'; })) {
          fail(ErrorKind::invalid_argument, "diagram: malformed header '" + head + "'");
        }
        if (key == "n") {
          north = std::stoi(val);
        } else if (key == "t") {
          south = std::stoi(val);
        } else {
          fail(ErrorKind::invalid_argument, "diagram: unknown header key '" + key + "'");
        }
      }
    }
    if (north < 0) {
      fail(ErrorKind::invalid_argument, "diagram: missing n=");
    }
    if (south < 0) {
      south = north;
    }
    std::vector<int>  partner(north + south, -1);
    std::stringstream ss(text.substr(semi + 1));
    std::string       tok;
    while (ss >> tok) {
      auto dash = tok.find('-');
      if (dash == std::string::npos) {
        fail(ErrorKind::invalid_argument, "diagram: malformed pair '" + tok + "'");
      }
      int const x = parse_node(tok.substr(0, dash), north, south);
      int const y = parse_node(tok.substr(dash + 1), north, south);
      if (x == y || partner[x] != -1 || partner[y] != -1) {
        fail(ErrorKind::invalid_argument, "diagram: node used twice in '" + text + "'");
      }
      partner[x] = y;
      partner[y] = x;
    }
    if (std::find(partner.begin(), partner.end(), -1) != partner.end()) {
      fail(ErrorKind::invalid_argument, "diagram: some node is unmatched in '" + text + "'");
    }
    return BrauerDiagram(north, south, std::vector<std::uint8_t>(partner.begin(), partner.end()));
  }

  std::string BrauerDiagram::to_string() const {
    auto name = [this](int x) {
      return x < north_ ? std::to_string(x + 1) : std::to_string(x - north_ + 1) + "'";
    };
    std::string out = "n=" + std::to_string(north_);
    if (south_ != north_) {
      out += ",t=" + std::to_string(south_);
    }
    out += ";";
    for (int x = 0; x < north_ + south_; ++x) {
      if (partner_[x] > x) {
        out += " " + name(x) + "-" + name(partner_[x]);
      }
    }
    return out;
  }

  int BrauerDiagram::propagating_count() const {
    int count = 0;
    for (int x = 0; x < north_; ++x) {
      count += partner_[x] >= north_ ? 1 : 0;
    }
    return count;
  }

  std::vector<int> BrauerDiagram::as_permutation() const {
    if (!is_permutation()) {
      fail(ErrorKind::invalid_argument, "diagram is not a permutation");
    }
    std::vector<int> sigma(north_);
    for (int b = 0; b < south_; ++b) {
      sigma[b] = partner_[north_ + b];
    }
    return sigma;
  }

  std::pair<BrauerDiagram, int> concat(BrauerDiagram const& a, BrauerDiagram const& b) {
    if (a.south() != b.north()) {
      fail(ErrorKind::size_mismatch, "concat: a.south != b.north");
    }
    int const n = a.north();
    int const t = a.south();
    int const u = b.south();
    // Result nodes: 0..n-1 are a's north, n..n+u-1 are b's south.
    std::vector<std::uint8_t> out(n + u, 0);
    std::vector<bool>         middle_seen(t, false);

    // Enter b at its northern node m (a middle node); walk until an outer
    // node is reached. Returns the result-node index.
    auto walk_down = [&](int m) {
      while (true) {
        middle_seen[m] = true;
        int const q    = b.partner(m);
        if (q >= t) {
          return n + (q - t);
        }
        middle_seen[q] = true;
        int const p    = a.partner(n + q);
        if (p < n) {
          return p;
        }
        m = p - n;
      }
    };
    // Enter a at its southern node m.
    auto walk_up = [&](int m) {
      while (true) {
        middle_seen[m] = true;
        int const p    = a.partner(n + m);
        if (p < n) {
          return p;
        }
        middle_seen[p - n] = true;
        int const q        = b.partner(p - n);
        if (q >= t) {
          return n + (q - t);
        }
        m = q;
      }
    };

    for (int x = 0; x < n; ++x) {
      int const p = a.partner(x);
      int const y = p < n ? p : walk_down(p - n);
      out[x]      = static_cast<std::uint8_t>(y);
      out[y]      = static_cast<std::uint8_t>(x);
    }
    for (int y = 0; y < u; ++y) {
      int const q = b.partner(t + y);
      int const z = q >= t ? n + (q - t) : walk_up(q);
      out[n + y]  = static_cast<std::uint8_t>(z);
      out[z]      = static_cast<std::uint8_t>(n + y);
    }
    int loops = 0;
    for (int m = 0; m < t; ++m) {
      if (middle_seen[m]) {
        continue;
      }
      ++loops;
      int cur = m;
      do {
        middle_seen[cur] = true;
        int const q      = b.partner(cur);  // stays in the middle
        middle_seen[q]   = true;
        cur              = a.partner(n + q) - n;
      } while (cur != m);
    }
    return {BrauerDiagram(n, u, std::move(out)), loops};
  }

  BrauerDiagram flip(BrauerDiagram const& d) {
    int const                 n = d.north();
    int const                 t = d.south();
    std::vector<std::uint8_t> p(n + t);
    auto swap_side = [&](int x) { return x < n ? t + x : x - n; };
    for (int x = 0; x < n + t; ++x) {
      p[swap_side(x)] = static_cast<std::uint8_t>(swap_side(d.partner(x)));
    }
    return BrauerDiagram(t, n, std::move(p));
  }

  std::vector<BrauerDiagram> all_diagrams(int n) {
    std::vector<BrauerDiagram> out;
    int const                  total = 2 * n;
    std::vector<int>           p(total, -1);
    std::function<void()>      rec = [&]() {
      auto it = std::find(p.begin(), p.end(), -1);
      if (it == p.end()) {
        out.emplace_back(n, n, std::vector<std::uint8_t>(p.begin(), p.end()));
        return;
      }
      int const x = static_cast<int>(it - p.begin());
      for (int y = x + 1; y < total; ++y) {
        if (p[y] != -1) {
          continue;
        }
        p[x] = y;
        p[y] = x;
        rec();
        p[x] = p[y] = -1;
      }
    };
    rec();
    return out;
  }

  BrauerDiagram add_arc_pair(BrauerDiagram const& d) {
    int const m = d.north();
    if (d.south() != m) {
      fail(ErrorKind::invalid_argument, "add_arc_pair expects an (m,m) diagram");
    }
    int const n = m + 2;
    std::vector<std::uint8_t> p(2 * n);
    auto lift = [&](int x) { return x < m ? x : n + (x - m); };
    for (int x = 0; x < 2 * m; ++x) {
      p[lift(x)] = static_cast<std::uint8_t>(lift(d.partner(x)));
    }
    p[m]             = static_cast<std::uint8_t>(m + 1);
    p[m + 1]         = static_cast<std::uint8_t>(m);
    p[n + m]         = static_cast<std::uint8_t>(n + m + 1);
    p[n + m + 1]     = static_cast<std::uint8_t>(n + m);
    return BrauerDiagram(n, n, std::move(p));
  }

  BrauerDiagram embed_in_e_bar(BrauerDiagram const& d) {
    int const m = d.north();
    if (d.south() != m || m < 1) {
      fail(ErrorKind::invalid_argument, "embed_in_e_bar expects an (m,m) diagram with m >= 1");
    }
    int const n = m + 2;
    // d's north node k < m-1 stays at k, its last north node moves to n-1;
    // south nodes keep their positions.
    auto lift = [&](int x) {
      if (x < m) {
        return x == m - 1 ? n - 1 : x;
      }
      return n + (x - m);
    };
    std::vector<std::uint8_t> p(2 * n);
    for (int x = 0; x < 2 * m; ++x) {
      p[lift(x)] = static_cast<std::uint8_t>(lift(d.partner(x)));
    }
    // north arc {n-2, n-1} (1-based), south arc {(n-1)', n'}
    p[n - 3]     = static_cast<std::uint8_t>(n - 2);
    p[n - 2]     = static_cast<std::uint8_t>(n - 3);
    p[2 * n - 2] = static_cast<std::uint8_t>(2 * n - 1);
    p[2 * n - 1] = static_cast<std::uint8_t>(2 * n - 2);
    return BrauerDiagram(n, n, std::move(p));
  }

  BrauerDiagram add_through_line(BrauerDiagram const& d) {
    int const m = d.north();
    if (d.south() != m) {
      fail(ErrorKind::invalid_argument, "add_through_line expects an (m,m) diagram");
    }
    int const n = m + 1;
    auto lift = [&](int x) { return x < m ? x : n + (x - m); };
    std::vector<std::uint8_t> p(2 * n);
    for (int x = 0; x < 2 * m; ++x) {
      p[lift(x)] = static_cast<std::uint8_t>(lift(d.partner(x)));
    }
    p[m]     = static_cast<std::uint8_t>(n + m);
    p[n + m] = static_cast<std::uint8_t>(m);
    return BrauerDiagram(n, n, std::move(p));
  }

  ////////////////////////////////////////////////////////////////////////
  // AlgebraElement
  ////////////////////////////////////////////////////////////////////////

  Rational loop_factor(long delta, int loops) {
    Rational f = 1;
    for (int i = 0; i < loops; ++i) {
      f *= delta;
    }
    return f;
  }

  AlgebraElement::AlgebraElement(int n, long delta) : n_(n), delta_(delta) {
    if (n < 0) {
      fail(ErrorKind::invalid_argument, "algebra element: negative n");
    }
  }

  AlgebraElement::AlgebraElement(BrauerDiagram const& d, long delta, Rational coeff)
      : n_(d.north()), delta_(delta) {
    if (d.south() != d.north()) {
      fail(ErrorKind::invalid_argument, "algebra element needs an (n,n) diagram");
    }
    add_term(d, coeff);
  }

  AlgebraElement AlgebraElement::identity(int n, long delta) {
    return AlgebraElement(BrauerDiagram::identity(n), delta);
  }

  Rational AlgebraElement::coefficient(BrauerDiagram const& d) const {
    auto it = terms_.find(d);
    return it == terms_.end() ? Rational(0) : it->second;
  }

  void AlgebraElement::add_term(BrauerDiagram const& d, Rational const& c) {
    if (d.north() != n_ || d.south() != n_) {
      fail(ErrorKind::size_mismatch, "algebra element: diagram of the wrong size");
    }
    if (sgn(c) == 0) {
      return;
    }
    auto [it, inserted] = terms_.try_emplace(d, c);
    if (!inserted) {
      it->second += c;
      if (sgn(it->second) == 0) {
        terms_.erase(it);
      }
    }
  }

  namespace {
    void check_compatible(AlgebraElement const& x, AlgebraElement const& y) {
      if (x.n() != y.n()) {
        fail(ErrorKind::size_mismatch, "algebra elements of different n");
      }
      if (x.delta() != y.delta()) {
        fail(ErrorKind::size_mismatch, "algebra elements with different delta");
      }
    }
  }  // namespace

  AlgebraElement& AlgebraElement::operator+=(AlgebraElement const& other) {
    check_compatible(*this, other);
    for (auto const& [d, c] : other.terms_) {
      add_term(d, c);
    }
    return *this;
  }

  AlgebraElement& AlgebraElement::operator-=(AlgebraElement const& other) {
    check_compatible(*this, other);
    for (auto const& [d, c] : other.terms_) {
      add_term(d, -c);
    }
    return *this;
  }

  AlgebraElement& AlgebraElement::operator*=(Rational const& s) {
    if (sgn(s) == 0) {
      terms_.clear();
      return *this;
    }
    for (auto& [d, c] : terms_) {
      c *= s;
    }
    return *this;
  }

  AlgebraElement multiply(AlgebraElement const& x, AlgebraElement const& y) {
    check_compatible(x, y);
    AlgebraElement out(x.n_, x.delta_);
    for (auto const& [dx, cx] : x.terms_) {
      for (auto const& [dy, cy] : y.terms_) {
        auto [d, loops] = concat(dx, dy);
        Rational const f = loop_factor(x.delta_, loops);
        if (sgn(f) != 0) {
          out.add_term(d, cx * cy * f);
        }
      }
    }
    return out;
  }

  std::string AlgebraElement::to_json() const {
    nlohmann::json j = nlohmann::json::array();
    for (auto const& [d, c] : terms_) {
      j.push_back({{"coeff", brauer::to_string(c)}, {"diagram", d.to_string()}});
    }
    return j.dump();
  }

  AlgebraElement AlgebraElement::from_json(std::string const& text, int n, long delta) {
    AlgebraElement out(n, delta);
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(text);
    } catch (nlohmann::json::exception const& e) {
      fail(ErrorKind::invalid_argument, std::string("algebra element JSON: ") + e.what());
    }
    if (!j.is_array()) {
      fail(ErrorKind::invalid_argument, "algebra element JSON must be an array");
    }
    for (auto const& term : j) {
      if (!term.is_object() || !term.contains("coeff") || !term.contains("diagram")
          || !term["coeff"].is_string() || !term["diagram"].is_string()) {
        fail(ErrorKind::invalid_argument, "algebra element JSON: bad term");
      }
      out.add_term(BrauerDiagram::parse(term["diagram"].get<std::string>()),
                   parse_rational(term["coeff"].get<std::string>()));
    }
    return out;
  }

  AlgebraElement flip(AlgebraElement const& x) {
    AlgebraElement out(x.n(), x.delta());
    for (auto const& [d, c] : x.terms()) {
      out.add_term(flip(d), c);
    }
    return out;
  }

  ////////////////////////////////////////////////////////////////////////
  // Distinguished elements
  ////////////////////////////////////////////////////////////////////////

  AlgebraElement e_element(int n, long delta) {
    return e_element(n, 1, delta);
  }

  AlgebraElement e_element(int n, int t, long delta) {
    if (delta == 0) {
      fail(ErrorKind::invalid_argument, "e_{n,t} does not exist for delta = 0 (use e_bar)");
    }
    if (n < 2 || t < 0 || 2 * t > n) {
      fail(ErrorKind::invalid_argument, "e_{n,t} requires n >= 2 and 0 <= t <= n/2");
    }
    std::vector<std::uint8_t> p(2 * n);
    int const                 straight = n - 2 * t;
    for (int k = 0; k < straight; ++k) {
      p[k]     = static_cast<std::uint8_t>(n + k);
      p[n + k] = static_cast<std::uint8_t>(k);
    }
    for (int k = straight; k < n; k += 2) {
      p[k]         = static_cast<std::uint8_t>(k + 1);
      p[k + 1]     = static_cast<std::uint8_t>(k);
      p[n + k]     = static_cast<std::uint8_t>(n + k + 1);
      p[n + k + 1] = static_cast<std::uint8_t>(n + k);
    }
    Rational scale = 1;
    for (int i = 0; i < t; ++i) {
      scale /= delta;
    }
    return AlgebraElement(BrauerDiagram(n, n, std::move(p)), delta, scale);
  }

  AlgebraElement e_bar(int n, long delta) {
    if (n < 3) {
      fail(ErrorKind::invalid_argument, "e_bar(n) requires n >= 3");
    }
    return AlgebraElement(embed_in_e_bar(BrauerDiagram::identity(n - 2)), delta);
  }

  AlgebraElement x_hook(int n, int i, int j, long delta) {
    return AlgebraElement(BrauerDiagram::x_hook(n, i, j), delta);
  }

  AlgebraElement t_element(int n, long delta) {
    AlgebraElement out(n, delta);
    for (int i = 1; i <= n; ++i) {
      for (int j = i + 1; j <= n; ++j) {
        out.add_term(BrauerDiagram::x_hook(n, i, j), 1);
      }
    }
    return out;
  }

  AlgebraElement transposition_sum(int n, long delta) {
    AlgebraElement out(n, delta);
    for (int i = 1; i <= n; ++i) {
      for (int j = i + 1; j <= n; ++j) {
        out.add_term(BrauerDiagram::transposition(n, i, j), 1);
      }
    }
    return out;
  }

  AlgebraElement central_element(int n, long delta) {
    return transposition_sum(n, delta) - t_element(n, delta);
  }

  namespace {
    int permutation_sign(std::vector<int> const& sigma) {
      std::vector<bool> seen(sigma.size(), false);
      int               sign = 1;
      for (std::size_t i = 0; i < sigma.size(); ++i) {
        if (seen[i]) {
          continue;
        }
        std::size_t len = 0;
        for (std::size_t j = i; !seen[j]; j = static_cast<std::size_t>(sigma[j])) {
          seen[j] = true;
          ++len;
        }
        if (len % 2 == 0) {
          sign = -sign;
        }
      }
      return sign;
    }

    // Every permutation of {0..n-1} preserving each block setwise.
    std::vector<std::vector<int>> block_stabilizer(int n, std::vector<std::vector<int>> const& blocks) {
      std::vector<std::vector<int>> out;
      std::vector<int>              sigma(n);
      std::iota(sigma.begin(), sigma.end(), 0);
      std::function<void(std::size_t)> rec = [&](std::size_t b) {
        if (b == blocks.size()) {
          out.push_back(sigma);
          return;
        }
        std::vector<int> images = blocks[b];
        std::sort(images.begin(), images.end());
        do {
          for (std::size_t k = 0; k < images.size(); ++k) {
            sigma[blocks[b][k]] = images[k];
          }
          rec(b + 1);
        } while (std::next_permutation(images.begin(), images.end()));
        for (int x : blocks[b]) {
          sigma[x] = x;
        }
      };
      rec(0);
      return out;
    }
  }  // namespace

  AlgebraElement young_symmetrizer(Partition const& lambda, int n, long delta) {
    if (lambda.size() != n) {
      fail(ErrorKind::size_mismatch, "young_symmetrizer: |lambda| != n");
    }
    // Row-reading labelling: box (r,c) holds 0-based label offset(r) + c - 1.
    std::vector<std::vector<int>> rows, cols(lambda.empty() ? 0 : lambda.row(1));
    int                           label = 0;
    for (int r = 1; r <= lambda.length(); ++r) {
      rows.emplace_back();
      for (int c = 1; c <= lambda.row(r); ++c) {
        rows.back().push_back(label);
        cols[c - 1].push_back(label);
        ++label;
      }
    }
    auto const row_group = block_stabilizer(n, rows);
    auto const col_group = block_stabilizer(n, cols);

    std::map<std::vector<int>, Rational> sum;  // permutation -> coefficient
    for (auto const& sigma : col_group) {
      int const s = permutation_sign(sigma);
      for (auto const& tau : row_group) {
        std::vector<int> prod(n);
        for (int x = 0; x < n; ++x) {
          prod[x] = sigma[tau[x]];
        }
        sum[prod] += s;
      }
    }
    Rational const scale = Rational(static_cast<unsigned long>(specht_dim(lambda)))
                           / Rational(static_cast<unsigned long>(factorial(n)));
    AlgebraElement out(n, delta);
    for (auto const& [perm, c] : sum) {
      out.add_term(BrauerDiagram::permutation(perm), c * scale);
    }
    return out;
  }

}  // namespace brauer
