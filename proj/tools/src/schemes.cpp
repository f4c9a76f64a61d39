#include "uiseq_cli/schemes.hpp"

#include <charconv>
#include <stdexcept>
#include <string>

#include "uiseq/construct.hpp"
#include "uiseq/residue.hpp"

namespace uiseq::cli {

SchemeKind parse_scheme(std::string_view name) {
  if (name == "crtm") return SchemeKind::crtm;
  if (name == "crt") return SchemeKind::crt;
  if (name == "random") return SchemeKind::random;
  throw std::invalid_argument("unknown scheme '" + std::string(name) + "' (expected crtm, crt or random)");
}

std::string_view to_string(SchemeKind kind) noexcept {
  switch (kind) {
    case SchemeKind::crtm: return "crtm";
    case SchemeKind::crt: return "crt";
    case SchemeKind::random: return "random";
  }
  return "?";
}

double resolve_ps(std::string_view choice, std::int64_t users, double activation_probability) {
  if (choice == "optimal") return optimal_ps(users, activation_probability);
  if (choice == "matched") {
    const auto period = smallest_prime_greater_than(users) * (2 * users - 1);
    return static_cast<double>(users + 1) / static_cast<double>(period);
  }
  double value = 0.0;
  const auto* end = choice.data() + choice.size();
  const auto [ptr, ec] = std::from_chars(choice.data(), end, value);
  if (ec != std::errc{} || ptr != end) {
    throw std::invalid_argument("--ps expects a probability, 'optimal' or 'matched', got '" + std::string(choice) + "'");
  }
  return value;
}

SimConfig make_config(const SchemeRequest& r) {
  SimConfig config;
  if (r.users < 1) throw std::invalid_argument("M must be >= 1");
  switch (r.kind) {
    case SchemeKind::crtm:
      config.scheme = ProtocolScheme{default_user_set(Construction::crtm, r.users)};
      break;
    case SchemeKind::crt:
      config.scheme = ProtocolScheme{default_user_set(Construction::crt, r.users)};
      break;
    case SchemeKind::random:
      config.scheme = RandomAccessScheme{resolve_ps(r.ps, r.users, r.activation_probability)};
      break;
  }
  config.users = static_cast<std::size_t>(r.users);
  config.activation_probability = r.activation_probability;
  config.samples = r.samples;
  config.master_seed = r.seed;
  config.horizon = r.horizon;
  config.convention = r.convention;
  config.workers = r.workers;
  validate(config);
  return config;
}

}  // namespace uiseq::cli
