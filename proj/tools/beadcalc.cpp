// Command-line front end. Links only the C interface.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "beadcalc/beadcalc.h"

namespace {

using Json = nlohmann::ordered_json;

struct Options {
  bool pretty = false;
  std::optional<int> max_degree;
  std::optional<int> truncation_cap;
  std::string output;
};

class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  if (path == "-") return std::string(std::istreambuf_iterator<char>(std::cin), {});
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// "0" or "" -> no legs; "3" -> 1,2,3; "a,b,c" -> those labels.
std::string legs_json(const std::string& spec, int hairs) {
  Json arr = Json::array();
  if (!spec.empty() && spec.find_first_not_of("0123456789") == std::string::npos) {
    int n = std::stoi(spec);
    for (int i = 1; i <= n; ++i) arr.push_back(std::to_string(i));
  } else if (!spec.empty()) {
    std::stringstream ss(spec);
    std::string item;
    while (std::getline(ss, item, ',')) arr.push_back(item);
  }
  for (int i = 0; i < hairs; ++i) arr.push_back("*");
  return arr.dump();
}

void diagnostic(const std::string& kind, const std::string& message) {
  std::cerr << Json{{"error", kind}, {"message", message}}.dump() << "\n";
}

class Session {
 public:
  explicit Session(const Options& opt) : opt_(opt), ctx_(bc_context_new()) {
    if (!ctx_) throw std::runtime_error("could not create a context");
  }
  ~Session() { bc_context_free(ctx_); }
  Session(const Session&) = delete;
  Session& operator=(const Session&) = delete;

  bc_context* ctx() { return ctx_; }

  // Applies caps, then emits the result of `call` or its diagnostic.
  template <class F>
  int run(F&& call) {
    int status = configure();
    if (status != BC_OK) return report(status);
    char* out = nullptr;
    status = call(ctx_, &out);
    if (status != BC_OK) return report(status);
    std::string text = out;
    bc_string_free(out);
    if (opt_.pretty) text = Json::parse(text).dump(2);
    if (opt_.output.empty()) {
      std::cout << text << "\n";
    } else {
      std::ofstream f(opt_.output, std::ios::binary);
      if (!f) {
        diagnostic("Malformed", "cannot write '" + opt_.output + "'");
        return BC_VALIDATION;
      }
      f << text << "\n";
    }
    return BC_OK;
  }

 private:
  int configure() {
    std::optional<int> cap = opt_.max_degree;
    if (!cap) {
      if (const char* env = std::getenv("BEADCALC_MAX_DEGREE")) {
        try {
          cap = std::stoi(env);
        } catch (const std::exception&) {
          diagnostic("Malformed", "BEADCALC_MAX_DEGREE must be an integer");
          return BC_VALIDATION;
        }
      }
    }
    if (cap) {
      if (int s = bc_set_max_degree(ctx_, *cap); s != BC_OK) return s;
    }
    if (opt_.truncation_cap) {
      if (int s = bc_set_truncation_cap(ctx_, *opt_.truncation_cap); s != BC_OK) return s;
    }
    return BC_OK;
  }

  int report(int status) {
    const char* err = bc_last_error(ctx_);
    std::cerr << (err && *err ? err : R"({"error":"Internal","message":"unknown failure"})") << "\n";
    return status;
  }

  const Options& opt_;
  bc_context* ctx_;
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact computations with uni-trivalent Jacobi diagrams and beads"};
  app.require_subcommand(1);
  app.fallthrough();
  Options opt;
  app.add_flag("--pretty", opt.pretty, "Indent JSON output");
  app.add_option("--max-degree", opt.max_degree, "Enumeration degree cap (default 6, or BEADCALC_MAX_DEGREE)");
  app.add_option("--truncation-cap", opt.truncation_cap, "Largest accepted hair truncation (default 7)");
  app.add_option("-o,--output", opt.output, "Write the result here instead of stdout");

  std::function<int()> action;
  std::string file, file2, legs;
  int degree = 0, hairs = 0, truncate = 0, vertex = 0, n = 0;
  bool connected = false, f_piece = false, basis = false;

  auto* canon = app.add_subcommand("canon", "Canonical encoding and sign of a diagram");
  canon->add_option("file", file, "Diagram JSON ('-' for stdin)")->required();
  canon->callback([&] {
    action = [&] {
      std::string in = read_file(file);
      return Session(opt).run([&](bc_context* c, char** o) { return bc_canon(c, in.c_str(), o); });
    };
  });

  auto* en = app.add_subcommand("enumerate", "Nonvanishing diagram classes of a degree");
  en->add_option("--degree", degree)->required();
  en->add_option("--legs", legs, "Leg count N (labels 1..N) or a comma-separated label list");
  en->add_option("--hairs", hairs, "Additional unlabeled legs");
  en->add_flag("--connected", connected);
  en->callback([&] {
    action = [&] {
      std::string l = legs_json(legs, hairs);
      return Session(opt).run(
          [&](bc_context* c, char** o) { return bc_enumerate(c, degree, l.c_str(), connected, o); });
    };
  });

  auto* dim = app.add_subcommand("dim", "Dimension of a graded piece modulo AS and IHX");
  dim->add_option("--degree", degree)->required();
  dim->add_option("--legs", legs, "Leg count N (labels 1..N) or a comma-separated label list");
  dim->add_option("--hairs", hairs, "Additional unlabeled legs");
  dim->add_flag("--connected", connected);
  dim->add_flag("--f-piece", f_piece, "Connected diagrams with a trivalent vertex only");
  dim->add_flag("--basis", basis, "Also list the basis encodings");
  dim->callback([&] {
    action = [&] {
      std::string l = legs_json(legs, hairs);
      return Session(opt).run([&](bc_context* c, char** o) {
        return bc_dim(c, degree, l.c_str(), connected, f_piece, basis, o);
      });
    };
  });

  auto* red = app.add_subcommand("reduce", "Reduce a combination modulo AS and IHX");
  red->add_option("file", file)->required();
  red->callback([&] {
    action = [&] {
      std::string in = read_file(file);
      return Session(opt).run([&](bc_context* c, char** o) { return bc_reduce(c, in.c_str(), o); });
    };
  });

  auto* split = app.add_subcommand("bead-split", "Split a beaded combination by bead degree");
  split->add_option("file", file)->required();
  split->callback([&] {
    action = [&] {
      std::string in = read_file(file);
      return Session(opt).run([&](bc_context* c, char** o) { return bc_bead_split(c, in.c_str(), o); });
    };
  });

  auto* hair = app.add_subcommand("hair", "Hair map truncated at a total degree");
  hair->add_option("file", file)->required();
  hair->add_option("--truncate", truncate)->required();
  hair->callback([&] {
    action = [&] {
      std::string in = read_file(file);
      return Session(opt).run([&](bc_context* c, char** o) { return bc_hair(c, in.c_str(), truncate, o); });
    };
  });

  auto* kernel = app.add_subcommand("kernel-check", "Per-degree vanishing of the truncated hair image");
  kernel->add_option("file", file)->required();
  kernel->add_option("--truncate", truncate)->required();
  kernel->callback([&] {
    action = [&] {
      std::string in = read_file(file);
      return Session(opt).run(
          [&](bc_context* c, char** o) { return bc_kernel_check(c, in.c_str(), truncate, o); });
    };
  });

  auto* lambda = app.add_subcommand("lambda", "Vogel's algebra");
  lambda->require_subcommand(1);
  lambda->fallthrough();
  auto* lt = lambda->add_subcommand("t", "The element t");
  lt->callback([&] {
    action = [&] { return Session(opt).run([](bc_context* c, char** o) { return bc_lambda_t(c, o); }); };
  });
  auto* lx = lambda->add_subcommand("x", "The element x_n");
  lx->add_option("n", n)->required();
  lx->callback([&] {
    action = [&] { return Session(opt).run([&](bc_context* c, char** o) { return bc_lambda_x(c, n, o); }); };
  });
  auto* lm = lambda->add_subcommand("mult", "Product a.b (a inserted into b)");
  lm->add_option("a", file)->required();
  lm->add_option("b", file2)->required();
  lm->callback([&] {
    action = [&] {
      std::string a = read_file(file), b = read_file(file2);
      return Session(opt).run([&](bc_context* c, char** o) { return bc_lambda_mult(c, a.c_str(), b.c_str(), o); });
    };
  });
  auto* li = lambda->add_subcommand("insert", "Insert an element at a trivalent vertex of a diagram");
  li->add_option("lambda", file)->required();
  li->add_option("diagram", file2)->required();
  li->add_option("--at", vertex)->required();
  li->callback([&] {
    action = [&] {
      std::string a = read_file(file), d = read_file(file2);
      return Session(opt).run(
          [&](bc_context* c, char** o) { return bc_lambda_insert(c, a.c_str(), d.c_str(), vertex, o); });
    };
  });
  auto* lv = lambda->add_subcommand("verify", "Check lhs = rhs modulo AS and IHX");
  lv->add_option("lhs", file)->required();
  lv->add_option("rhs", file2)->required();
  lv->callback([&] {
    action = [&] {
      std::string a = read_file(file), b = read_file(file2);
      return Session(opt).run([&](bc_context* c, char** o) { return bc_lambda_verify(c, a.c_str(), b.c_str(), o); });
    };
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    diagnostic("Usage", e.what());
    return BC_VALIDATION;
  }
  try {
    return action();
  } catch (const InputError& e) {
    diagnostic("Malformed", e.what());
    return BC_VALIDATION;
  } catch (const std::exception& e) {
    diagnostic("Internal", e.what());
    return BC_INTERNAL;
  }
}
