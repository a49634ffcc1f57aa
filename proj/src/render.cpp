#include "brauer/render.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <sstream>

#include "json.hpp"

namespace brauer {

  namespace {
    constexpr int kCell = 4;

    std::string centred(std::string const& text) {
      std::string out = text;
      while (static_cast<int>(out.size()) < kCell - 1) {
        out = out.size() % 2 == 0 ? " " + out : out + " ";
      }
      return out;
    }

    // Grid of rows x cols where label(r, c) is nullopt for absent cells.
    std::string grid(int rows, int cols,
                     std::function<std::optional<std::string>(int, int)> const& label) {
      std::ostringstream out;
      auto rule = [&](int r) {
        // Border under row r (0 = top border): spans the wider of rows r, r+1.
        int width = 0;
        for (int c = 1; c <= cols; ++c) {
          if ((r >= 1 && label(r, c)) || (r + 1 <= rows && label(r + 1, c))) {
            width = c;
          }
        }
        std::string line;
        for (int c = 1; c <= width; ++c) {
          line += "+" + std::string(kCell - 1, '-');
        }
        out << line << "+\n";
      };
      rule(0);
      for (int r = 1; r <= rows; ++r) {
        int last = 0;
        for (int c = 1; c <= cols; ++c) {
          if (label(r, c)) {
            last = c;
          }
        }
        std::string line;
        for (int c = 1; c <= last; ++c) {
          auto l = label(r, c);
          line += "|" + (l ? centred(*l) : std::string(kCell - 1, ' '));
        }
        out << line << "|\n";
        rule(r);
      }
      return out.str();
    }
  }  // namespace

  std::string render_partition(Partition const& lambda, std::optional<long> delta) {
    if (lambda.empty()) {
      return "(empty)\n";
    }
    return grid(lambda.length(), lambda.row(1), [&](int r, int c) -> std::optional<std::string> {
      Box const b{r, c};
      if (!lambda.contains(b)) {
        return std::nullopt;
      }
      return std::to_string(delta ? b.charge(*delta) : b.content());
    });
  }

  std::string render_skew(Partition const& lambda, Partition const& mu) {
    Partition const common = intersect(lambda, mu);
    auto [a, b]            = skew(lambda, mu);
    int const rows         = std::max(lambda.length(), mu.length());
    int const cols         = std::max(lambda.row(1), mu.row(1));
    if (rows == 0) {
      return "(empty)\n";
    }
    std::string out = grid(rows, cols, [&](int r, int c) -> std::optional<std::string> {
      Box const box{r, c};
      if (common.contains(box)) {
        return ".";
      }
      if (a.contains(box)) {
        return std::to_string(box.content());
      }
      if (b.contains(box)) {
        return "*" + std::to_string(box.content());
      }
      return std::nullopt;
    });
    out += "boxes only in lambda: " + std::to_string(a.size()) + "; boxes only in mu (marked *): "
           + std::to_string(b.size()) + "\n";
    return out;
  }

  std::string render_shape(SkewShape const& s) {
    if (s.empty()) {
      return "(empty)\n";
    }
    // Drawn from the first occupied row and column so that stripped rows
    // and columns leave no gaps at the edges.
    int top = s.boxes().front().row, left = s.boxes().front().col;
    int rows = 0, cols = 0;
    for (Box const& b : s.boxes()) {
      top  = std::min(top, b.row);
      left = std::min(left, b.col);
      rows = std::max(rows, b.row);
      cols = std::max(cols, b.col);
    }
    return grid(rows - top + 1, cols - left + 1, [&](int r, int c) -> std::optional<std::string> {
      Box const box{r + top - 1, c + left - 1};
      if (s.contains(box)) {
        return std::to_string(box.content());
      }
      // Keep the grid aligned across removed rows and columns.
      bool later = false;
      for (Box const& b : s.boxes()) {
        if (b.row == box.row && b.col > box.col) {
          later = true;
        }
      }
      return later ? std::optional<std::string>(" ") : std::nullopt;
    });
  }

  namespace {
    std::string subset_name(unsigned x, int m) {
      std::string out = "{";
      bool        first = true;
      for (int j = 0; j < m; ++j) {
        if (x & (1U << j)) {
          out += (first ? "" : ",") + std::to_string(j + 1);
          first = false;
        }
      }
      return out + "}";
    }
  }  // namespace

  std::string lattice_text(LatticePrediction const& lp) {
    std::ostringstream out;
    out << "m = " << lp.m << "\n";
    for (std::size_t j = 0; j < lp.pairs.size(); ++j) {
      auto const& [e, f] = lp.pairs[j];
      out << "pair " << j + 1 << ": " << to_string(e) << " c=" << e.content() << ", " << to_string(f)
          << " c=" << f.content() << "\n";
    }
    for (int size = lp.m; size >= 0; --size) {
      out << "level " << size << ":";
      for (unsigned x = 0; x < lp.nodes.size(); ++x) {
        if (std::popcount(x) == size) {
          out << "  " << subset_name(x, lp.m) << " " << lp.nodes[x].to_string();
        }
      }
      out << "\n";
    }
    return out.str();
  }

  std::string lattice_dot(LatticePrediction const& lp) {
    std::ostringstream out;
    out << "digraph lattice {\n";
    for (unsigned x = 0; x < lp.nodes.size(); ++x) {
      out << "  n" << x << " [label=\"" << subset_name(x, lp.m) << "\\n" << lp.nodes[x].to_string()
          << "\"];\n";
    }
    for (auto const& [x, y] : lp.covers) {
      out << "  n" << y << " -> n" << x << ";\n";
    }
    out << "}\n";
    return out.str();
  }

  std::string lattice_json(LatticePrediction const& lp) {
    nlohmann::json j;
    j["m"]     = lp.m;
    j["pairs"] = nlohmann::json::array();
    for (auto const& [e, f] : lp.pairs) {
      j["pairs"].push_back({{e.row, e.col}, {f.row, f.col}});
    }
    j["nodes"] = nlohmann::json::array();
    for (unsigned x = 0; x < lp.nodes.size(); ++x) {
      std::vector<int> subset;
      for (int b = 0; b < lp.m; ++b) {
        if (x & (1U << b)) {
          subset.push_back(b + 1);
        }
      }
      j["nodes"].push_back({{"subset", subset}, {"weight", lp.nodes[x].parts()}});
    }
    j["covers"] = nlohmann::json::array();
    for (auto const& [x, y] : lp.covers) {
      j["covers"].push_back({x, y});
    }
    return j.dump();
  }

}  // namespace brauer
