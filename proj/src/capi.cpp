#include "beadcalc/beadcalc.h"

#include <cstring>
#include <set>

#include "beadcalc/error.hpp"
#include "beadcalc/io.hpp"
#include "beadcalc/lambda.hpp"

using namespace beadcalc;
using io::Json;

struct bc_context {
  RelationEngine engine{kDefaultMaxDegree};
  int truncation_cap = kDefaultTruncation;
  int lambda_cap = kLambdaMaxDegree;
  std::string last_error;
};

namespace {

char* dup(const std::string& s) {
  char* p = static_cast<char*>(std::malloc(s.size() + 1));
  if (p) std::memcpy(p, s.c_str(), s.size() + 1);
  return p;
}

bc_status fail(bc_context* ctx, bc_status status, const char* kind, const std::string& message) {
  ctx->last_error = Json{{"error", kind}, {"message", message}}.dump();
  return status;
}

// Runs `body` and maps exceptions to status codes.
template <class F>
bc_status guarded(bc_context* ctx, char** out, F&& body) {
  if (!ctx) return BC_INTERNAL;
  ctx->last_error.clear();
  if (out) *out = nullptr;
  try {
    Json result = body();
    if (out) {
      *out = dup(result.dump());
      if (!*out) return fail(ctx, BC_INTERNAL, "Internal", "out of memory");
    }
    return BC_OK;
  } catch (const Error& e) {
    bc_status s = e.kind() == ErrorKind::CapExceeded ? BC_CAP : BC_VALIDATION;
    return fail(ctx, s, error_name(e.kind()), e.what());
  } catch (const std::exception& e) {
    return fail(ctx, BC_INTERNAL, "Internal", e.what());
  }
}

Json text(const char* s) {
  if (!s) throw Error(ErrorKind::Malformed, "missing input");
  return io::parse(s);
}

std::vector<std::string> legs_from(const char* s) {
  std::vector<std::string> legs;
  if (!s || !*s) return legs;
  Json j = io::parse(s);
  if (!j.is_array()) throw Error(ErrorKind::Malformed, "legs must be a JSON array");
  for (const auto& l : j) {
    if (l.is_string()) legs.push_back(l.get<std::string>());
    else if (l.is_number_integer()) legs.push_back(std::to_string(l.get<long long>()));
    else throw Error(ErrorKind::Malformed, "leg labels must be strings");
  }
  return legs;
}

Json lambda_json(bc_context* ctx, const Vector& v) {
  Vector reduced = ctx->engine.reduce(v, ctx->lambda_cap + 1);
  return Json{{"degree", lambda_degree(v)},
              {"antisymmetric", is_antisymmetric(v, ctx->engine)},
              {"element", io::vector_to_json(v)},
              {"reduced", io::vector_to_json(reduced)}};
}

// A Lambda argument may be a full lambda object or a bare combination.
Vector lambda_from(const Json& j) {
  if (j.is_object() && j.contains("element")) return io::vector_from_json(j["element"]);
  return io::vector_from_json(j);
}

void check_lambda_degree(bc_context* ctx, const Vector& v) {
  int d = lambda_degree(v);
  if (d > ctx->lambda_cap)
    throw Error(ErrorKind::CapExceeded, "Lambda degree " + std::to_string(d) + " exceeds the cap " +
                                            std::to_string(ctx->lambda_cap));
}

}  // namespace

extern "C" {

bc_context* bc_context_new(void) {
  try {
    return new bc_context;
  } catch (...) {
    return nullptr;
  }
}

void bc_context_free(bc_context* ctx) { delete ctx; }

const char* bc_last_error(const bc_context* ctx) { return ctx ? ctx->last_error.c_str() : ""; }

void bc_string_free(char* s) { std::free(s); }

bc_status bc_set_max_degree(bc_context* ctx, int degree) {
  return guarded(ctx, nullptr, [&] {
    if (degree < 1) throw Error(ErrorKind::Malformed, "caps must be positive");
    ctx->engine.set_max_degree(degree);
    return Json();
  });
}

bc_status bc_set_truncation_cap(bc_context* ctx, int degree) {
  return guarded(ctx, nullptr, [&] {
    if (degree < 1) throw Error(ErrorKind::Malformed, "caps must be positive");
    ctx->truncation_cap = degree;
    return Json();
  });
}

bc_status bc_set_lambda_cap(bc_context* ctx, int degree) {
  return guarded(ctx, nullptr, [&] {
    if (degree < 1) throw Error(ErrorKind::Malformed, "caps must be positive");
    ctx->lambda_cap = degree;
    return Json();
  });
}

bc_status bc_canon(bc_context* ctx, const char* diagram, char** out) {
  return guarded(ctx, out, [&] {
    Diagram d = io::diagram_from_json(text(diagram));
    CanonicalForm f = canonicalize(d);
    return Json{{"encoding", to_hex(f.encoding)},
                {"sign", f.sign},
                {"degree", d.degree()},
                {"loop_degree", d.loop_degree()}};
  });
}

bc_status bc_enumerate(bc_context* ctx, int degree, const char* legs, int connected, char** out) {
  return guarded(ctx, out, [&] {
    if (degree < 1) throw Error(ErrorKind::Malformed, "degree must be positive");
    Json arr = Json::array();
    for (const CanonicalForm& f :
         enumerate(ctx->engine.catalog(), degree, legs_from(legs), connected != 0, ctx->engine.max_degree()))
      arr.push_back(Json{{"encoding", to_hex(f.encoding)}, {"diagram", io::diagram_to_json(representative(f.encoding))}});
    return arr;
  });
}

bc_status bc_dim(bc_context* ctx, int degree, const char* legs, int connected, int f_piece, int with_basis,
                 char** out) {
  return guarded(ctx, out, [&] {
    if (degree < 1) throw Error(ErrorKind::Malformed, "degree must be positive");
    auto q = ctx->engine.quotient_basis(degree, legs_from(legs), connected != 0, f_piece != 0);
    Json j{{"degree", degree}, {"legs", q->legs}, {"connected", q->connected}, {"dimension", q->dimension()}};
    if (with_basis) {
      Json basis = Json::array();
      for (const Encoding& e : q->basis) basis.push_back(to_hex(e));
      j["basis"] = std::move(basis);
    }
    return j;
  });
}

bc_status bc_reduce(bc_context* ctx, const char* combination, char** out) {
  return guarded(ctx, out, [&] { return io::vector_to_json(ctx->engine.reduce(io::vector_from_json(text(combination)))); });
}

bc_status bc_bead_split(bc_context* ctx, const char* beaded, char** out) {
  return guarded(ctx, out, [&] {
    Json j = Json::object();
    for (const auto& [p, v] : split_by_bead_degree(io::beaded_from_json_any(text(beaded))))
      j[std::to_string(p)] = io::beaded_comb_to_json(v);
    return j;
  });
}

bc_status bc_hair(bc_context* ctx, const char* beaded, int truncation, char** out) {
  return guarded(ctx, out, [&] {
    Graded h = hair(io::beaded_from_json_any(text(beaded)), truncation, ctx->engine, ctx->truncation_cap);
    Json degrees = Json::object();
    for (int d = 1; d <= truncation; ++d) {
      auto it = h.find(d);
      Vector v = it == h.end() ? Vector() : it->second;
      degrees[std::to_string(d)] = Json{{"terms", io::vector_to_json(v)}, {"is_zero", v.empty()}};
    }
    return Json{{"truncation", truncation}, {"degrees", std::move(degrees)}};
  });
}

bc_status bc_kernel_check(bc_context* ctx, const char* beaded, int truncation, char** out) {
  return guarded(ctx, out, [&] {
    Json j = Json::object();
    for (auto [d, zero] : kernel_check(io::beaded_from_json_any(text(beaded)), truncation, ctx->engine,
                                       ctx->truncation_cap))
      j[std::to_string(d)] = zero;
    return j;
  });
}

bc_status bc_lambda_t(bc_context* ctx, char** out) {
  return guarded(ctx, out, [&] {
    Vector t = builtin_t();
    check_lambda_degree(ctx, t);
    return lambda_json(ctx, t);
  });
}

bc_status bc_lambda_x(bc_context* ctx, int n, char** out) {
  return guarded(ctx, out, [&] { return lambda_json(ctx, builtin_x(n, ctx->lambda_cap)); });
}

bc_status bc_lambda_mult(bc_context* ctx, const char* a, const char* b, char** out) {
  return guarded(ctx, out, [&] {
    Vector va = lambda_from(text(a)), vb = lambda_from(text(b));
    Vector product = lambda_mult(va, vb);
    check_lambda_degree(ctx, product);
    return lambda_json(ctx, product);
  });
}

bc_status bc_lambda_insert(bc_context* ctx, const char* lambda, const char* diagram, int vertex, char** out) {
  return guarded(ctx, out, [&] {
    Vector l = lambda_from(text(lambda));
    Diagram d = io::diagram_from_json(text(diagram));
    Vector v = insert(l, d, vertex);
    return Json{{"element", io::vector_to_json(v)}, {"reduced", io::vector_to_json(ctx->engine.reduce(v))}};
  });
}

bc_status bc_lambda_verify(bc_context* ctx, const char* lhs, const char* rhs, char** out) {
  return guarded(ctx, out, [&] {
    Vector l = lambda_from(text(lhs)), r = lambda_from(text(rhs));
    const Vector& probe = l.empty() ? r : l;
    if (probe.empty()) return Json{{"equal", true}, {"degree", 0}, {"legs", Json::array()}};
    EncodingHeader h = read_header(probe.begin()->first);
    bool equal = verify_scalar_relation(l, r, h.degree(), h.labels, ctx->engine);
    return Json{{"equal", equal}, {"degree", h.degree()}, {"legs", h.labels}};
  });
}

}  // extern "C"
