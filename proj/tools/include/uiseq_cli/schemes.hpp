#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "uiseq/simulate.hpp"

namespace uiseq::cli {

enum class SchemeKind { crtm, crt, random };

SchemeKind parse_scheme(std::string_view name);
std::string_view to_string(SchemeKind kind) noexcept;

/// p_s for random access: "optimal" is 1/(M p_a), "matched" is (M+1)/L with
/// L the CRTm period for M, anything else is parsed as a number.
double resolve_ps(std::string_view choice, std::int64_t users, double activation_probability);

struct SchemeRequest {
  SchemeKind kind = SchemeKind::crtm;
  std::int64_t users = 0;
  double activation_probability = 1.0;
  std::string ps = "optimal";  ///< random access only
  std::uint64_t samples = 500'000;
  std::uint64_t seed = 0;
  std::optional<std::int64_t> horizon;
  DelayConvention convention = DelayConvention::inclusive;
  unsigned workers = 1;
};

/// Protocol schemes use the default M users of the named construction.
SimConfig make_config(const SchemeRequest& request);

}  // namespace uiseq::cli
