#include "brauer/brauer.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <sstream>
#include <string>

#include "json.hpp"

#include "brauer/blocks.hpp"
#include "brauer/cell_module.hpp"
#include "brauer/error.hpp"
#include "brauer/oracle.hpp"
#include "brauer/render.hpp"

struct brauer_partition {
  brauer::Partition value;
};

struct brauer_cell_module {
  brauer::CellModule value;
};

namespace {
  thread_local std::string last_error;

  brauer_status status_of(brauer::ErrorKind kind) {
    switch (kind) {
      case brauer::ErrorKind::invalid_argument:
        return BRAUER_INVALID_ARGUMENT;
      case brauer::ErrorKind::size_mismatch:
        return BRAUER_SIZE_MISMATCH;
      case brauer::ErrorKind::dimension_cap:
        return BRAUER_DIMENSION_CAP;
      case brauer::ErrorKind::internal:
        return BRAUER_INTERNAL;
    }
    return BRAUER_INTERNAL;
  }

  // Runs body, translating exceptions into status codes.
  template <typename F>
  brauer_status guarded(F&& body) {
    last_error.clear();
    try {
      body();
      return BRAUER_OK;
    } catch (brauer::Error const& e) {
      last_error = e.what();
      return status_of(e.kind());
    } catch (std::bad_alloc const&) {
      last_error = "out of memory";
      return BRAUER_INTERNAL;
    } catch (std::exception const& e) {
      last_error = e.what();
      return BRAUER_INTERNAL;
    }
  }

  template <typename T>
  T const& deref(T const* p, char const* what) {
    if (p == nullptr) {
      brauer::fail(brauer::ErrorKind::invalid_argument, std::string("null ") + what);
    }
    return *p;
  }

  template <typename T>
  void require_out(T* out) {
    if (out == nullptr) {
      brauer::fail(brauer::ErrorKind::invalid_argument, "null output pointer");
    }
  }

  char* copy_string(std::string const& s) {
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    if (out == nullptr) {
      throw std::bad_alloc();
    }
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
  }

  brauer_partition* new_partition(brauer::Partition p) {
    return new brauer_partition{std::move(p)};
  }

  brauer::Partition const& part(brauer_partition const* p) {
    return deref(p, "partition").value;
  }

  void check_format(brauer_format f, bool dot_allowed) {
    if (f != BRAUER_FORMAT_TEXT && f != BRAUER_FORMAT_JSON && !(dot_allowed && f == BRAUER_FORMAT_DOT)) {
      brauer::fail(brauer::ErrorKind::invalid_argument, "unsupported output format");
    }
  }
}  // namespace

extern "C" {

const char* brauer_last_error(void) {
  return last_error.c_str();
}

void brauer_string_free(char* s) {
  std::free(s);
}

brauer_status brauer_partition_parse(const char* text, brauer_partition** out) {
  return guarded([&] {
    require_out(out);
    *out = nullptr;
    if (text == nullptr) {
      brauer::fail(brauer::ErrorKind::invalid_argument, "null partition text");
    }
    *out = new_partition(brauer::Partition::parse(text));
  });
}

void brauer_partition_free(brauer_partition* p) {
  delete p;
}

brauer_status brauer_partition_to_string(const brauer_partition* p, char** out) {
  return guarded([&] {
    require_out(out);
    *out = copy_string(part(p).to_string());
  });
}

brauer_status brauer_partition_size(const brauer_partition* p, int* out) {
  return guarded([&] {
    require_out(out);
    *out = part(p).size();
  });
}

brauer_status brauer_is_balanced(const brauer_partition* lambda, const brauer_partition* mu,
                                 long delta, int* out) {
  return guarded([&] {
    require_out(out);
    *out = brauer::is_balanced(part(lambda), part(mu), delta) ? 1 : 0;
  });
}

brauer_status brauer_is_minimal(const brauer_partition* lambda, long delta, int* out) {
  return guarded([&] {
    require_out(out);
    *out = brauer::is_minimal(part(lambda), delta) ? 1 : 0;
  });
}

brauer_status brauer_minimal_weight(const brauer_partition* lambda, long delta,
                                    brauer_partition** out) {
  return guarded([&] {
    require_out(out);
    *out = nullptr;
    *out = new_partition(brauer::minimal_weight(part(lambda), delta));
  });
}

brauer_status brauer_hom_target(const brauer_partition* lambda, long delta,
                                brauer_partition** out) {
  return guarded([&] {
    require_out(out);
    *out   = nullptr;
    auto t = brauer::hom_target(part(lambda), delta);
    if (t) {
      *out = new_partition(*t);
    }
  });
}

brauer_status brauer_maximal_balanced_sub(const brauer_partition* lambda,
                                          const brauer_partition* mu, long delta,
                                          brauer_partition** out) {
  return guarded([&] {
    require_out(out);
    *out = nullptr;
    *out = new_partition(brauer::maximal_balanced_sub(part(lambda), part(mu), delta));
  });
}

brauer_status brauer_descent_chain(const brauer_partition* lambda, long delta,
                                   brauer_format format, char** out) {
  return guarded([&] {
    require_out(out);
    check_format(format, false);
    auto const chain = brauer::descent_chain(part(lambda), delta);
    if (format == BRAUER_FORMAT_JSON) {
      nlohmann::json j = nlohmann::json::array();
      for (auto const& p : chain) {
        j.push_back(p.parts());
      }
      *out = copy_string(j.dump());
      return;
    }
    std::string text;
    for (std::size_t k = 0; k < chain.size(); ++k) {
      text += (k == 0 ? "" : " -> ") + chain[k].to_string();
    }
    *out = copy_string(text);
  });
}

brauer_status brauer_blocks(int n, long delta, brauer_format format, char** out) {
  return guarded([&] {
    require_out(out);
    check_format(format, false);
    auto const bp = brauer::block_partition(n, delta);
    if (format == BRAUER_FORMAT_JSON) {
      *out = copy_string(brauer::to_json(bp));
      return;
    }
    std::ostringstream text;
    for (auto const& b : bp.blocks) {
      text << "minimal " << b.minimal.to_string() << ":";
      for (auto const& m : b.members) {
        text << " " << m.to_string();
      }
      text << "\n";
    }
    *out = copy_string(text.str());
  });
}

brauer_status brauer_hat(const brauer_partition* lambda, long delta, brauer_format format,
                         char** out) {
  return guarded([&] {
    require_out(out);
    check_format(format, false);
    auto const h       = brauer::hat(part(lambda), delta);
    bool const minimal = brauer::is_minimal(part(lambda), delta);
    if (format == BRAUER_FORMAT_JSON) {
      nlohmann::json j;
      j["steps"] = nlohmann::json::array();
      for (auto const& s : h.steps) {
        j["steps"].push_back({{"kind", s.kind == brauer::HatStep::Kind::rows ? "rows" : "columns"},
                              {"from", s.from},
                              {"to", s.to},
                              {"box", {s.chosen.row, s.chosen.col}}});
      }
      j["hat"] = nlohmann::json::array();
      for (auto const& b : h.shape.boxes()) {
        j["hat"].push_back({b.row, b.col});
      }
      j["classified_minimal"] = minimal;
      *out = copy_string(j.dump());
      return;
    }
    std::ostringstream text;
    if (h.steps.empty()) {
      text << "no rows or columns removed\n";
    }
    for (auto const& s : h.steps) {
      text << "remove " << brauer::to_string(s) << " (box " << brauer::to_string(s.chosen)
           << ", content " << s.chosen.content() << ")\n";
    }
    text << brauer::render_shape(h.shape);
    text << "classified " << (minimal ? "minimal" : "not minimal") << "\n";
    *out = copy_string(text.str());
  });
}

brauer_status brauer_lattice(const brauer_partition* lambda, const brauer_partition* mu,
                             long delta, brauer_format format, char** out) {
  return guarded([&] {
    require_out(out);
    check_format(format, true);
    auto const lp = brauer::lattice_predict(part(lambda), part(mu), delta);
    switch (format) {
      case BRAUER_FORMAT_JSON:
        *out = copy_string(brauer::lattice_json(lp));
        break;
      case BRAUER_FORMAT_DOT:
        *out = copy_string(brauer::lattice_dot(lp));
        break;
      default:
        *out = copy_string(brauer::lattice_text(lp));
    }
  });
}

brauer_status brauer_render_partition(const brauer_partition* lambda, int show_charge,
                                      long delta, char** out) {
  return guarded([&] {
    require_out(out);
    *out = copy_string(brauer::render_partition(
        part(lambda), show_charge ? std::optional<long>(delta) : std::nullopt));
  });
}

brauer_status brauer_render_skew(const brauer_partition* lambda, const brauer_partition* mu,
                                 char** out) {
  return guarded([&] {
    require_out(out);
    *out = copy_string(brauer::render_skew(part(lambda), part(mu)));
  });
}

brauer_status brauer_hom_dim(int n, long delta, const brauer_partition* lambda,
                             const brauer_partition* mu, size_t* out) {
  return guarded([&] {
    require_out(out);
    *out = brauer::hom_dim(n, delta, part(lambda), part(mu));
  });
}

brauer_status brauer_gram_rank(int n, long delta, const brauer_partition* mu, size_t* out) {
  return guarded([&] {
    require_out(out);
    *out = brauer::gram_rank(n, delta, part(mu));
  });
}

brauer_status brauer_central_scalar(int n, long delta, const brauer_partition* mu, char** out) {
  return guarded([&] {
    require_out(out);
    *out = copy_string(brauer::to_string(brauer::central_scalar(n, delta, part(mu))));
  });
}

brauer_status brauer_verify_blocks(int n, long delta, brauer_format format, int* all_pass,
                                   char** out) {
  return guarded([&] {
    require_out(out);
    require_out(all_pass);
    check_format(format, false);
    auto const checks = brauer::verify_blocks(n, delta);
    *all_pass         = 1;
    for (auto const& c : checks) {
      if (!c.pass) {
        *all_pass = 0;
      }
    }
    if (format == BRAUER_FORMAT_JSON) {
      *out = copy_string(brauer::to_json(checks));
      return;
    }
    std::ostringstream text;
    for (auto const& c : checks) {
      text << (c.pass ? "pass " : "FAIL ") << c.name << " (n=" << c.n << ", delta=" << c.delta << ")";
      if (!c.witness.empty()) {
        text << ": " << c.witness;
      }
      text << "\n";
    }
    *out = copy_string(text.str());
  });
}

brauer_status brauer_cell_module_new(int n, long delta, const brauer_partition* mu,
                                     brauer_cell_module** out) {
  return guarded([&] {
    require_out(out);
    *out = nullptr;
    brauer::Partition const& shape = part(mu);
    if (!brauer::is_weight(shape, n)) {
      brauer::fail(brauer::ErrorKind::invalid_argument, "not a weight of B_n");
    }
    *out = new brauer_cell_module{brauer::CellModule(n, delta, shape)};
  });
}

void brauer_cell_module_free(brauer_cell_module* m) {
  delete m;
}

brauer_status brauer_cell_module_dim(const brauer_cell_module* m, size_t* out) {
  return guarded([&] {
    require_out(out);
    *out = deref(m, "cell module").value.dim();
  });
}

brauer_status brauer_cell_module_matrices_json(const brauer_cell_module* m, char** out) {
  return guarded([&] {
    require_out(out);
    *out = copy_string(deref(m, "cell module").value.matrices_json());
  });
}

brauer_status brauer_cell_module_t_action_check(const brauer_cell_module* m, int* out) {
  return guarded([&] {
    require_out(out);
    *out = deref(m, "cell module").value.t_action_check() ? 1 : 0;
  });
}

}  // extern "C"
