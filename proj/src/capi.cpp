#include "kzk/kzk.h"

#include <algorithm>
#include <cstdlib>
#include <cstring>
#include <fstream>
#include <new>
#include <optional>
#include <sstream>
#include <string>
#include <variant>

#include "report.hpp"

using nlohmann::json;

namespace {

template <class F>
struct Holder {
  kzk::Presentation<F> presentation;
  std::optional<kzk::GradedAutomorphism<F>> alpha;
};

thread_local std::string last_error;

struct Failure {
  kzk_status status;
  std::string message;
};

kzk_status status_of(kzk::ErrorCode code) { return static_cast<kzk_status>(static_cast<int>(code)); }

template <class Fn>
kzk_status guarded(Fn&& fn) {
  try {
    fn();
    last_error.clear();
    return KZK_OK;
  } catch (const Failure& f) {
    last_error = f.message;
    return f.status;
  } catch (const kzk::Error& e) {
    last_error = e.what();
    return status_of(e.code());
  } catch (const std::bad_alloc&) {
    last_error = "out of memory";
    return KZK_ERR_RESOURCE;
  } catch (const std::exception& e) {
    last_error = e.what();
    return KZK_ERR_INTERNAL;
  }
}

char* duplicate(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

void emit(char** json_out, const json& doc) {
  if (json_out) *json_out = duplicate(doc.dump());
}

void require(const void* ptr, const char* what) {
  if (!ptr) throw Failure{KZK_ERR_INVALID_ARGUMENT, std::string(what) + " must not be NULL"};
}

template <class F>
const kzk::GradedAutomorphism<F>& automorphism_of(const Holder<F>& h) {
  if (!h.alpha) throw Failure{KZK_ERR_NO_AUTOMORPHISM, "the presentation has no aut line"};
  return *h.alpha;
}

}  // namespace

struct kzk_presentation {
  std::variant<Holder<kzk::Rational>, Holder<kzk::PrimeField>> held;
};

namespace {

kzk_presentation* make(const kzk::PresentationSource& src, const kzk::FieldChoice& field) {
  if (field.prime) {
    auto p = kzk::build_presentation(kzk::PrimeField(field.modulus), src);
    auto alpha = kzk::build_automorphism(p, src);
    return new kzk_presentation{Holder<kzk::PrimeField>{std::move(p), std::move(alpha)}};
  }
  auto p = kzk::build_presentation(kzk::Rational(), src);
  auto alpha = kzk::build_automorphism(p, src);
  return new kzk_presentation{Holder<kzk::Rational>{std::move(p), std::move(alpha)}};
}

std::optional<kzk::FieldChoice> field_override_choice(const char* field_override) {
  if (!field_override) return std::nullopt;
  try {
    return kzk::parse_field_choice(field_override);
  } catch (const kzk::Error& e) {
    throw kzk::Error(e.code(), std::string("field override: ") + e.what());
  }
}

kzk_status parse_into(const std::string& text, const std::optional<kzk::FieldChoice>& field,
                      kzk_presentation** out) {
  return guarded([&] {
    require(out, "out");
    *out = nullptr;
    kzk::PresentationSource src = kzk::parse_source(text);
    *out = make(src, field.value_or(src.field));
  });
}

}  // namespace

extern "C" {

KZK_API const char* kzk_status_name(kzk_status status) {
  switch (status) {
    case KZK_OK: return "ok";
    case KZK_ERR_IO: return "io";
    case KZK_ERR_NO_AUTOMORPHISM: return "no-automorphism";
    default: break;
  }
  const int code = static_cast<int>(status);
  if (code >= 1 && code <= 12) return kzk::error_code_name(static_cast<kzk::ErrorCode>(code));
  return "unknown";
}

KZK_API const char* kzk_last_error(void) { return last_error.c_str(); }

KZK_API void kzk_string_free(char* s) { std::free(s); }

KZK_API kzk_status kzk_parse(const char* text, const char* field_override, kzk_presentation** out) {
  if (!text) {
    last_error = "text must not be NULL";
    return KZK_ERR_INVALID_ARGUMENT;
  }
  std::optional<kzk::FieldChoice> field;
  if (kzk_status st = guarded([&] { field = field_override_choice(field_override); }); st != KZK_OK) return st;
  return parse_into(text, field, out);
}

KZK_API kzk_status kzk_parse_file(const char* path, const char* field_override, kzk_presentation** out) {
  if (!path) {
    last_error = "path must not be NULL";
    return KZK_ERR_INVALID_ARGUMENT;
  }
  std::optional<kzk::FieldChoice> field;
  if (kzk_status st = guarded([&] { field = field_override_choice(field_override); }); st != KZK_OK) return st;
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    last_error = std::string("cannot open ") + path;
    return KZK_ERR_IO;
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  kzk_status st = parse_into(buf.str(), field, out);
  if (st != KZK_OK) last_error = std::string(path) + ": " + last_error;
  return st;
}

KZK_API void kzk_free(kzk_presentation* p) { delete p; }

KZK_API kzk_status kzk_set_cap(kzk_presentation* p, uint64_t cap) {
  return guarded([&] {
    require(p, "presentation");
    if (cap == 0) throw Failure{KZK_ERR_INVALID_ARGUMENT, "cap must be positive"};
    std::visit([&](auto& h) { h.presentation = h.presentation.with_cap(cap); }, p->held);
  });
}

KZK_API kzk_status kzk_render(const kzk_presentation* p, char** text) {
  return guarded([&] {
    require(p, "presentation");
    require(text, "text");
    std::visit(
        [&](const auto& h) {
          *text = duplicate(kzk::render_presentation(h.presentation, h.alpha ? &*h.alpha : nullptr));
        },
        p->held);
  });
}

KZK_API kzk_status kzk_summary(const kzk_presentation* p, char** json_out) {
  return guarded([&] {
    require(p, "presentation");
    std::visit([&](const auto& h) { emit(json_out, kzk::summary_json(h.presentation, h.alpha.has_value())); },
               p->held);
  });
}

KZK_API kzk_status kzk_info(const kzk_presentation* p, size_t* dim_e, size_t* degree, size_t* dim_r,
                            int* has_automorphism) {
  return guarded([&] {
    require(p, "presentation");
    std::visit(
        [&](const auto& h) {
          if (dim_e) *dim_e = h.presentation.dim_e();
          if (degree) *degree = h.presentation.degree();
          if (dim_r) *dim_r = h.presentation.relations().dim();
          if (has_automorphism) *has_automorphism = h.alpha ? 1 : 0;
        },
        p->held);
  });
}

KZK_API kzk_status kzk_hilbert(const kzk_presentation* p, size_t cutoff, size_t* dims, char** json_out) {
  return guarded([&] {
    require(p, "presentation");
    std::visit(
        [&](const auto& h) {
          auto series = h.presentation.hilbert_series(cutoff);
          if (dims) std::copy(series.begin(), series.end(), dims);
          emit(json_out, kzk::hilbert_json(series));
        },
        p->held);
  });
}

KZK_API kzk_status kzk_global_dimension(const kzk_presentation* p, int* finite, size_t* dimension, char** json_out) {
  return guarded([&] {
    require(p, "presentation");
    std::visit(
        [&](const auto& h) {
          auto g = kzk::global_dimension(h.presentation);
          if (finite) *finite = g.finite ? 1 : 0;
          if (dimension) *dimension = g.dimension;
          emit(json_out, kzk::gldim_json(g));
        },
        p->held);
  });
}

KZK_API kzk_status kzk_semicross(const kzk_presentation* p, kzk_presentation** out, char** json_out) {
  return guarded([&] {
    require(p, "presentation");
    std::visit(
        [&](const auto& h) {
          using F = std::decay_t<decltype(h.presentation.field())>;
          const auto& alpha = automorphism_of(h);
          auto twisted = kzk::semi_cross(h.presentation, alpha);
          json doc;
          doc["relations_out"] = kzk::relation_strings(twisted);
          doc["file"] = kzk::render_presentation(twisted, &alpha);
          emit(json_out, doc);
          if (out) *out = new kzk_presentation{Holder<F>{std::move(twisted), alpha}};
        },
        p->held);
  });
}

KZK_API kzk_status kzk_check_koszul(const kzk_presentation* p, size_t cutoff, int* koszul, char** json_out) {
  return guarded([&] {
    require(p, "presentation");
    std::visit(
        [&](const auto& h) {
          auto r = kzk::check_koszul(h.presentation, cutoff);
          if (koszul) *koszul = r.koszul_up_to_cutoff() ? 1 : 0;
          emit(json_out, kzk::koszul_json(r));
        },
        p->held);
  });
}

KZK_API kzk_status kzk_poincare(const kzk_presentation* p, size_t cutoff, int* passed, char** json_out) {
  return guarded([&] {
    require(p, "presentation");
    std::visit(
        [&](const auto& h) {
          auto r = kzk::poincare_identity_check(h.presentation, cutoff);
          if (passed) *passed = r.passed ? 1 : 0;
          emit(json_out, kzk::poincare_json(r));
        },
        p->held);
  });
}

KZK_API kzk_status kzk_twist_iso(const kzk_presentation* p, size_t cutoff, int* passed, char** json_out) {
  return guarded([&] {
    require(p, "presentation");
    std::visit(
        [&](const auto& h) {
          const auto& alpha = automorphism_of(h);
          auto r = kzk::verify_twist_iso(h.presentation, alpha, cutoff);
          auto twisted = kzk::semi_cross(h.presentation, alpha);
          if (passed) *passed = r.passed() ? 1 : 0;
          json doc;
          doc["relations_out"] = kzk::relation_strings(twisted);
          doc["iso_check"] = kzk::twist_iso_json(r);
          emit(json_out, doc);
        },
        p->held);
  });
}

KZK_API kzk_status kzk_gorenstein(const kzk_presentation* p, size_t cutoff, int transfer, int* consistent,
                                  char** json_out) {
  return guarded([&] {
    require(p, "presentation");
    std::visit(
        [&](const auto& h) {
          json doc;
          bool ok;
          if (transfer) {
            auto t = kzk::gorenstein_transfer_check(h.presentation, automorphism_of(h), cutoff);
            doc = kzk::gorenstein_json(t.original);
            doc["transfer"] = kzk::transfer_json(t);
            ok = t.original.verdict == kzk::GorensteinVerdict::kConsistent && t.passed;
          } else {
            auto r = kzk::check_gorenstein(h.presentation, cutoff);
            doc = kzk::gorenstein_json(r);
            ok = r.verdict == kzk::GorensteinVerdict::kConsistent;
          }
          if (consistent) *consistent = ok ? 1 : 0;
          emit(json_out, doc);
        },
        p->held);
  });
}

KZK_API kzk_status kzk_element_degree(const kzk_presentation* p, const char* element, size_t* degree) {
  return guarded([&] {
    require(p, "presentation");
    require(element, "element");
    require(degree, "degree");
    std::visit([&](const auto& h) { *degree = kzk::parse_element(h.presentation, element).degree; }, p->held);
  });
}

KZK_API kzk_status kzk_regularity(const kzk_presentation* p, const char* element, int left, size_t cutoff,
                                  int* regular, char** json_out) {
  return guarded([&] {
    require(p, "presentation");
    require(element, "element");
    std::visit(
        [&](const auto& h) {
          auto e = kzk::parse_element(h.presentation, element);
          auto r = h.presentation.regularity(e, cutoff, left ? kzk::Side::kLeft : kzk::Side::kRight);
          if (regular) *regular = r.regular() ? 1 : 0;
          emit(json_out, kzk::regularity_json(r, element));
        },
        p->held);
  });
}

}  // extern "C"
