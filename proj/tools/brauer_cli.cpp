// Command-line front end. Links only the C interface in brauer/brauer.h.
#include <cstdio>
#include <iostream>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "brauer/brauer.h"

namespace {

  constexpr int exit_true     = 0;
  constexpr int exit_false    = 1;
  constexpr int exit_usage    = 2;
  constexpr int exit_internal = 3;

  // Carries a failed C call out of a command handler.
  struct CallFailed {
    brauer_status status;
    std::string   message;
  };

  void check(brauer_status s) {
    if (s != BRAUER_OK) {
      throw CallFailed{s, brauer_last_error()};
    }
  }

  struct PartitionDeleter {
    void operator()(brauer_partition* p) const {
      brauer_partition_free(p);
    }
  };
  using PartitionPtr = std::unique_ptr<brauer_partition, PartitionDeleter>;

  PartitionPtr parse(std::string const& text) {
    brauer_partition* p = nullptr;
    check(brauer_partition_parse(text.c_str(), &p));
    return PartitionPtr(p);
  }

  // Takes ownership of a C string, returning it as std::string.
  std::string take(char* s) {
    std::string out = s != nullptr ? s : "";
    brauer_string_free(s);
    return out;
  }

  std::string text_of(brauer_partition const* p) {
    char* s = nullptr;
    check(brauer_partition_to_string(p, &s));
    return take(s);
  }

  int size_of(brauer_partition const* p) {
    int n = 0;
    check(brauer_partition_size(p, &n));
    return n;
  }

  void print(std::string const& s) {
    std::cout << s;
    if (s.empty() || s.back() != '\n') {
      std::cout << '\n';
    }
  }

  brauer_format format_of(std::string const& name) {
    if (name == "json") {
      return BRAUER_FORMAT_JSON;
    }
    if (name == "dot") {
      return BRAUER_FORMAT_DOT;
    }
    return BRAUER_FORMAT_TEXT;
  }

  struct Options {
    int                      n     = -1;
    long                     delta = 0;
    std::string              format = "text";
    std::vector<std::string> partitions;
    bool                     chain = false;
    bool                     charge = false;
  };

  int run_blocks(Options const& o) {
    char* out = nullptr;
    check(brauer_blocks(o.n, o.delta, format_of(o.format), &out));
    print(take(out));
    return exit_true;
  }

  int run_same_block(Options const& o) {
    auto lambda = parse(o.partitions.at(0));
    auto mu     = parse(o.partitions.at(1));
    int  same   = 0;
    check(brauer_is_balanced(lambda.get(), mu.get(), o.delta, &same));
    if (o.format == "json") {
      std::cout << "{\"same_block\":" << (same ? "true" : "false") << "}\n";
    } else {
      std::cout << (same ? "same" : "different") << '\n';
    }
    return same ? exit_true : exit_false;
  }

  int run_minimal(Options const& o) {
    auto              lambda = parse(o.partitions.at(0));
    brauer_partition* least  = nullptr;
    check(brauer_minimal_weight(lambda.get(), o.delta, &least));
    PartitionPtr      owned(least);
    std::string const l = text_of(lambda.get());
    std::string const m = text_of(least);
    bool const        minimal = l == m;
    if (o.format == "json") {
      std::cout << "{\"lambda\":\"" << l << "\",\"minimal_weight\":\"" << m
                << "\",\"minimal\":" << (minimal ? "true" : "false") << "}\n";
    } else if (minimal) {
      std::cout << l << " (minimal)\n";
    } else {
      std::cout << m << " (minimal weight of the block of " << l << ")\n";
    }
    return minimal ? exit_true : exit_false;
  }

  int run_hom_target(Options const& o) {
    auto lambda = parse(o.partitions.at(0));
    if (o.chain) {
      char* out = nullptr;
      check(brauer_descent_chain(lambda.get(), o.delta, format_of(o.format), &out));
      print(take(out));
      return exit_true;
    }
    brauer_partition* target = nullptr;
    check(brauer_hom_target(lambda.get(), o.delta, &target));
    PartitionPtr owned(target);
    if (o.format == "json") {
      std::cout << "{\"target\":" << (target ? "\"" + text_of(target) + "\"" : "null") << "}\n";
    } else {
      std::cout << (target ? text_of(target) : "none") << '\n';
    }
    return target ? exit_true : exit_false;
  }

  int run_lattice(Options const& o) {
    auto  lambda = parse(o.partitions.at(0));
    auto  mu     = parse(o.partitions.at(1));
    char* out    = nullptr;
    check(brauer_lattice(lambda.get(), mu.get(), o.delta, format_of(o.format), &out));
    print(take(out));
    return exit_true;
  }

  int run_hat(Options const& o) {
    auto  lambda = parse(o.partitions.at(0));
    char* out    = nullptr;
    check(brauer_hat(lambda.get(), o.delta, format_of(o.format), &out));
    print(take(out));
    return exit_true;
  }

  int run_verify(Options const& o) {
    int   all_pass = 0;
    char* out      = nullptr;
    check(brauer_verify_blocks(o.n, o.delta, format_of(o.format), &all_pass, &out));
    print(take(out));
    return all_pass ? exit_true : exit_false;
  }

  int run_render(Options const& o) {
    auto  lambda = parse(o.partitions.at(0));
    char* out    = nullptr;
    if (o.partitions.size() > 1) {
      auto mu = parse(o.partitions[1]);
      check(brauer_render_skew(lambda.get(), mu.get(), &out));
    } else {
      check(brauer_render_partition(lambda.get(), o.charge ? 1 : 0, o.delta, &out));
    }
    print(take(out));
    return exit_true;
  }

  int run_hom_dim(Options const& o) {
    auto   lambda = parse(o.partitions.at(0));
    auto   mu     = parse(o.partitions.at(1));
    int    n      = o.n >= 0 ? o.n : std::max(size_of(lambda.get()), size_of(mu.get()));
    size_t dim    = 0;
    check(brauer_hom_dim(n, o.delta, lambda.get(), mu.get(), &dim));
    if (o.format == "json") {
      std::cout << "{\"n\":" << n << ",\"delta\":" << o.delta << ",\"hom_dim\":" << dim << "}\n";
    } else {
      std::cout << dim << '\n';
    }
    return exit_true;
  }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Blocks of the Brauer algebra B_n(delta) in characteristic zero"};
  app.require_subcommand(1);
  Options o;

  auto add_delta = [&](CLI::App* sub, bool required) {
    auto* opt = sub->add_option("--delta", o.delta, "Loop parameter");
    if (required) {
      opt->required();
    }
  };
  auto add_format = [&](CLI::App* sub, std::vector<std::string> allowed) {
    sub->add_option("--format", o.format, "Output format")
        ->check(CLI::IsMember(std::move(allowed)));
  };
  auto add_partitions = [&](CLI::App* sub, int count, std::string const& desc) {
    sub->add_option("partitions", o.partitions, desc)->required()->expected(count);
  };

  auto* blocks = app.add_subcommand("blocks", "List the blocks of B_n(delta)");
  blocks->add_option("--n", o.n, "Number of strands")->required()->check(CLI::NonNegativeNumber);
  add_delta(blocks, true);
  add_format(blocks, {"text", "json"});

  auto* same = app.add_subcommand("same-block", "Test whether two weights share a block");
  add_delta(same, true);
  add_format(same, {"text", "json"});
  add_partitions(same, 2, "lambda mu");

  auto* minimal = app.add_subcommand("minimal", "Minimal weight in the block of lambda");
  add_delta(minimal, true);
  add_format(minimal, {"text", "json"});
  add_partitions(minimal, 1, "lambda");

  auto* target = app.add_subcommand("hom-target", "Weight receiving a homomorphism from lambda");
  add_delta(target, true);
  add_format(target, {"text", "json"});
  add_partitions(target, 1, "lambda");
  target->add_flag("--chain", o.chain, "Print the whole descent chain");

  auto* lattice = app.add_subcommand("lattice", "Predicted lattice for an isolated-box skew");
  add_delta(lattice, true);
  add_format(lattice, {"text", "json", "dot"});
  add_partitions(lattice, 2, "lambda mu");

  auto* hat = app.add_subcommand("hat", "Row and column stripping of lambda");
  add_delta(hat, true);
  add_format(hat, {"text", "json"});
  add_partitions(hat, 1, "lambda");

  auto* verify = app.add_subcommand("verify", "Check block predictions against the oracle");
  verify->add_option("--n", o.n, "Number of strands")->required()->check(CLI::NonNegativeNumber);
  add_delta(verify, true);
  add_format(verify, {"text", "json"});

  auto* render = app.add_subcommand("render", "Draw a partition, or the skew of two partitions");
  add_delta(render, false);
  render->add_flag("--charge", o.charge, "Label boxes by charge instead of content");
  render->add_option("partitions", o.partitions, "lambda [mu]")->required()->expected(1, 2);

  auto* hom_dim = app.add_subcommand("hom-dim", "dim Hom(Delta_n(lambda), Delta_n(mu))");
  hom_dim->add_option("--n", o.n, "Number of strands (default: the larger size)")
      ->check(CLI::NonNegativeNumber);
  add_delta(hom_dim, true);
  add_format(hom_dim, {"text", "json"});
  add_partitions(hom_dim, 2, "lambda mu");

  try {
    app.parse(argc, argv);
  } catch (CLI::ParseError const& e) {
    int const code = app.exit(e);
    return code == 0 ? exit_true : exit_usage;
  }

  try {
    auto* sub = app.get_subcommands().front();
    std::string const verb = sub->get_name();
    if (verb == "blocks") return run_blocks(o);
    if (verb == "same-block") return run_same_block(o);
    if (verb == "minimal") return run_minimal(o);
    if (verb == "hom-target") return run_hom_target(o);
    if (verb == "lattice") return run_lattice(o);
    if (verb == "hat") return run_hat(o);
    if (verb == "verify") return run_verify(o);
    if (verb == "render") return run_render(o);
    if (verb == "hom-dim") return run_hom_dim(o);
  } catch (CallFailed const& f) {
    std::cerr << "error: " << f.message << '\n';
    return f.status == BRAUER_INTERNAL ? exit_internal : exit_usage;
  } catch (std::exception const& e) {
    std::cerr << "error: " << e.what() << '\n';
    return exit_internal;
  }
  return exit_usage;
}
