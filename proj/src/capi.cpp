#include "nullity/nullity.h"

#include "nullity/error.hpp"
#include "nullity/formulas.hpp"
#include "nullity/report.hpp"

#include <json.hpp>

#include <cstdlib>
#include <cstring>
#include <memory>
#include <new>
#include <string>

struct nullity_ring {
  nullity::CoeffRing ring;
};

struct nullity_group {
  nullity::CayleyGroup group;
};

struct nullity_histogram {
  nullity::AnnihilatorHistogram histogram;
};

namespace {

thread_local std::string g_last_error;

nullity_status to_status(nullity::ErrorCode code) {
  switch (code) {
    case nullity::ErrorCode::parse: return NULLITY_ERR_PARSE;
    case nullity::ErrorCode::invalid_argument: return NULLITY_ERR_INVALID_ARGUMENT;
    case nullity::ErrorCode::cap_exceeded: return NULLITY_ERR_CAP_EXCEEDED;
    case nullity::ErrorCode::not_invertible: return NULLITY_ERR_NOT_INVERTIBLE;
    case nullity::ErrorCode::domain: return NULLITY_ERR_DOMAIN;
    case nullity::ErrorCode::internal: return NULLITY_ERR_INTERNAL;
    case nullity::ErrorCode::io: return NULLITY_ERR_IO;
  }
  return NULLITY_ERR_INTERNAL;
}

template <typename F>
nullity_status guarded(F&& body) {
  try {
    body();
    g_last_error.clear();
    return NULLITY_OK;
  } catch (const nullity::Error& e) {
    g_last_error = e.what();
    return to_status(e.code());
  } catch (const std::bad_alloc&) {
    g_last_error = "out of memory";
    return NULLITY_ERR_CAP_EXCEEDED;
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return NULLITY_ERR_INTERNAL;
  }
}

nullity_status null_argument(const char* what) {
  g_last_error = std::string("null argument: ") + what;
  return NULLITY_ERR_INVALID_ARGUMENT;
}

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out == nullptr) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

nullity::Limits to_limits(const nullity_limits* limits) {
  nullity::Limits l;
  if (limits != nullptr) {
    l.max_elements = limits->max_elements;
    l.max_pairs = limits->max_pairs;
    l.workers = limits->workers;
  }
  return l;
}

nullity::Side to_side(nullity_side side) {
  switch (side) {
    case NULLITY_SIDE_LEFT: return nullity::Side::left;
    case NULLITY_SIDE_RIGHT: return nullity::Side::right;
    case NULLITY_SIDE_TWOSIDED: return nullity::Side::twosided;
  }
  throw nullity::Error(nullity::ErrorCode::invalid_argument, "unknown side");
}

std::span<const std::uint32_t> vec(const uint32_t* p, const nullity_group* g) {
  return {p, g->group.order()};
}

}  // namespace

extern "C" {

const char* nullity_last_error(void) { return g_last_error.c_str(); }

const char* nullity_status_name(nullity_status status) {
  switch (status) {
    case NULLITY_OK: return "ok";
    case NULLITY_ERR_PARSE: return "parse error";
    case NULLITY_ERR_INVALID_ARGUMENT: return "invalid argument";
    case NULLITY_ERR_CAP_EXCEEDED: return "cap exceeded";
    case NULLITY_ERR_NOT_INVERTIBLE: return "not invertible";
    case NULLITY_ERR_DOMAIN: return "not applicable";
    case NULLITY_ERR_INTERNAL: return "internal error";
    case NULLITY_ERR_IO: return "i/o error";
  }
  return "unknown status";
}

void nullity_string_free(char* s) { std::free(s); }

void nullity_limits_default(nullity_limits* out) {
  if (out == nullptr) return;
  const nullity::Limits d;
  out->max_elements = d.max_elements;
  out->max_pairs = d.max_pairs;
  out->workers = d.workers;
}

nullity_status nullity_ring_parse(const char* spec, uint64_t size_cap, nullity_ring** out) {
  if (spec == nullptr || out == nullptr) return null_argument("spec/out");
  return guarded([&] {
    auto ring = nullity::CoeffRing::parse(spec, size_cap == 0 ? nullity::kDefaultRingSizeCap : size_cap);
    *out = new nullity_ring{std::move(ring)};
  });
}

void nullity_ring_free(nullity_ring* ring) { delete ring; }
uint32_t nullity_ring_size(const nullity_ring* ring) { return ring ? ring->ring.size() : 0; }
uint32_t nullity_ring_characteristic(const nullity_ring* ring) { return ring ? ring->ring.characteristic() : 0; }
int nullity_ring_is_field(const nullity_ring* ring) { return ring && ring->ring.is_field() ? 1 : 0; }

nullity_status nullity_ring_arith(const nullity_ring* ring, nullity_arith_op op, uint32_t a, uint32_t b, uint32_t* out) {
  if (ring == nullptr || out == nullptr) return null_argument("ring/out");
  return guarded([&] {
    const auto& k = ring->ring;
    if (a >= k.size() || (b >= k.size() && op != NULLITY_OP_NEG && op != NULLITY_OP_INV))
      throw nullity::Error(nullity::ErrorCode::invalid_argument, "element index out of range for " + k.spec());
    switch (op) {
      case NULLITY_OP_ADD: *out = k.add(a, b); break;
      case NULLITY_OP_SUB: *out = k.sub(a, b); break;
      case NULLITY_OP_MUL: *out = k.mul(a, b); break;
      case NULLITY_OP_NEG: *out = k.neg(a); break;
      case NULLITY_OP_INV: *out = k.inv(a); break;
      default: throw nullity::Error(nullity::ErrorCode::invalid_argument, "unknown arithmetic op");
    }
  });
}

nullity_status nullity_ring_sum_of_squares_minus_one(const nullity_ring* ring, int* solvable, uint32_t* x, uint32_t* y) {
  if (ring == nullptr || solvable == nullptr || x == nullptr || y == nullptr) return null_argument("ring/outputs");
  return guarded([&] {
    const auto w = nullity::solve_sum_of_squares_minus_one(ring->ring);
    *solvable = w ? 1 : 0;
    *x = w ? w->first : 0;
    *y = w ? w->second : 0;
  });
}

nullity_status nullity_group_parse(const char* spec, nullity_group** out) {
  if (spec == nullptr || out == nullptr) return null_argument("spec/out");
  return guarded([&] { *out = new nullity_group{nullity::CayleyGroup::parse(spec)}; });
}

nullity_status nullity_group_from_table(const uint32_t* table, size_t order, nullity_group** out) {
  if (table == nullptr || out == nullptr) return null_argument("table/out");
  return guarded([&] {
    std::vector<std::vector<std::uint32_t>> rows(order);
    for (size_t i = 0; i < order; ++i) rows[i].assign(table + i * order, table + (i + 1) * order);
    *out = new nullity_group{nullity::CayleyGroup::from_table(std::move(rows))};
  });
}

void nullity_group_free(nullity_group* group) { delete group; }
uint32_t nullity_group_order(const nullity_group* group) { return group ? group->group.order() : 0; }
uint32_t nullity_group_mul(const nullity_group* group, uint32_t i, uint32_t j) {
  if (group == nullptr || i >= group->group.order() || j >= group->group.order()) return UINT32_MAX;
  return group->group.mul(i, j);
}
int nullity_group_is_abelian(const nullity_group* group) { return group && group->group.is_abelian() ? 1 : 0; }

nullity_status nullity_gr_multiply(const nullity_ring* ring, const nullity_group* group, const uint32_t* a,
                                   const uint32_t* b, uint32_t* out) {
  if (!ring || !group || !a || !b || !out) return null_argument("ring/group/a/b/out");
  return guarded([&] {
    const nullity::GroupRing gr(ring->ring, group->group);
    const auto n = group->group.order();
    for (std::uint32_t i = 0; i < n; ++i)
      if (a[i] >= ring->ring.size() || b[i] >= ring->ring.size())
        throw nullity::Error(nullity::ErrorCode::invalid_argument, "coefficient out of range");
    gr.multiply_into(vec(a, group), vec(b, group), std::span<std::uint32_t>(out, n));
  });
}

nullity_status nullity_annihilator_size(const nullity_ring* ring, const nullity_group* group, const uint32_t* x,
                                        nullity_side side, const nullity_limits* limits, char** out) {
  if (!ring || !group || !x || !out) return null_argument("ring/group/x/out");
  return guarded([&] {
    const nullity::GroupRing gr(ring->ring, group->group);
    *out = dup_string(gr.annihilator_size(vec(x, group), to_side(side), to_limits(limits).max_elements).str());
  });
}

nullity_status nullity_histogram_compute(const nullity_ring* ring, const nullity_group* group, nullity_side side,
                                         const nullity_limits* limits, nullity_histogram** out) {
  if (!ring || !group || !out) return null_argument("ring/group/out");
  return guarded([&] {
    const nullity::GroupRing gr(ring->ring, group->group);
    *out = new nullity_histogram{nullity::annihilator_histogram(gr, to_side(side), to_limits(limits))};
  });
}

void nullity_histogram_free(nullity_histogram* h) { delete h; }
size_t nullity_histogram_length(const nullity_histogram* h) { return h ? h->histogram.counts.size() : 0; }
uint64_t nullity_histogram_count(const nullity_histogram* h, size_t k) {
  return (h && k < h->histogram.counts.size()) ? h->histogram.counts[k] : 0;
}

nullity_status nullity_histogram_probability(const nullity_histogram* h, char** out) {
  if (!h || !out) return null_argument("histogram/out");
  return guarded([&] { *out = dup_string(nullity::to_string(h->histogram.probability())); });
}

nullity_status nullity_histogram_json(const nullity_histogram* h, char** out) {
  if (!h || !out) return null_argument("histogram/out");
  return guarded([&] { *out = dup_string(nullity::record_json(nullity::to_record(h->histogram))); });
}

nullity_status nullity_probability(const nullity_ring* ring, const nullity_group* group, nullity_side side,
                                   const nullity_limits* limits, char** out) {
  if (!ring || !group || !out) return null_argument("ring/group/out");
  return guarded([&] {
    const nullity::GroupRing gr(ring->ring, group->group);
    *out = dup_string(nullity::to_string(nullity::nullity_probability(gr, to_side(side), to_limits(limits))));
  });
}

nullity_status nullity_pair_count(const nullity_ring* ring, const nullity_group* group, nullity_relation relation,
                                  const nullity_limits* limits, char** out) {
  if (!ring || !group || !out) return null_argument("ring/group/out");
  return guarded([&] {
    const nullity::GroupRing gr(ring->ring, group->group);
    const auto rel = relation == NULLITY_REL_BOTH_PRODUCTS_ZERO ? nullity::Relation::both_products_zero
                                                                : nullity::Relation::product_zero;
    *out = dup_string(std::to_string(nullity::pair_count_naive(gr, rel, to_limits(limits))));
  });
}

nullity_status nullity_formulas(const nullity_ring* ring, const nullity_group* group, nullity_side side, char** out) {
  if (!ring || !group || !out) return null_argument("ring/group/out");
  return guarded([&] {
    nlohmann::ordered_json items = nlohmann::ordered_json::array();
    for (const auto& r : nullity::formulas_for(ring->ring, group->group, to_side(side)))
      items.push_back({{"id", r.id},
                       {"variant", nullity::to_string(r.variant)},
                       {"value", nullity::to_string(r.value)},
                       {"provenance", r.provenance}});
    *out = dup_string(items.dump());
  });
}

void nullity_request_default(nullity_request* out) {
  if (out == nullptr) return;
  out->command = NULLITY_CMD_ORACLE;
  out->coeff = nullptr;
  out->group = nullptr;
  out->side = -1;
  out->variant = NULLITY_VARIANT_BOTH;
  out->format = NULLITY_FORMAT_TEXT;
  nullity_limits_default(&out->limits);
  out->threshold = nullptr;
  out->timing = 1;
}

nullity_status nullity_run(const nullity_request* request, char** report, int* exit_code) {
  if (!request || !report || !exit_code) return null_argument("request/report/exit_code");
  return guarded([&] {
    nullity::RunRequest req;
    switch (request->command) {
      case NULLITY_CMD_ORACLE: req.command = nullity::Command::oracle; break;
      case NULLITY_CMD_FORMULA: req.command = nullity::Command::formula; break;
      case NULLITY_CMD_COMPARE: req.command = nullity::Command::compare; break;
      case NULLITY_CMD_TABLE1: req.command = nullity::Command::table1; break;
      case NULLITY_CMD_CATALOG: req.command = nullity::Command::catalog; break;
      default: throw nullity::Error(nullity::ErrorCode::invalid_argument, "unknown command");
    }
    req.coeff = request->coeff ? request->coeff : "";
    req.group = request->group ? request->group : "";
    if (request->side >= 0) req.side = to_side(static_cast<nullity_side>(request->side));
    req.variant = request->variant == NULLITY_VARIANT_PRINTED   ? nullity::VariantChoice::printed
                  : request->variant == NULLITY_VARIANT_DERIVED ? nullity::VariantChoice::derived
                                                                : nullity::VariantChoice::both;
    req.format = request->format == NULLITY_FORMAT_JSON ? nullity::Format::json : nullity::Format::text;
    req.limits = to_limits(&request->limits);
    if (req.limits.max_elements == 0 || req.limits.max_pairs == 0)
      throw nullity::Error(nullity::ErrorCode::invalid_argument, "caps must be positive");
    if (request->threshold) req.threshold = nullity::parse_rational(request->threshold);
    req.timing = request->timing != 0;
    const auto result = nullity::run_command(req);
    *report = dup_string(result.output);
    *exit_code = result.exit_code;
  });
}

}  // extern "C"
