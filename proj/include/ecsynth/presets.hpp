#pragma once

#include <array>
#include <optional>
#include <string_view>

namespace ecsynth {

struct FieldPreset {
  std::string_view name;
  std::string_view poly;
};

/// Reduction polynomials of the five binary NIST/FIPS 186 fields, smallest first.
inline constexpr std::array<FieldPreset, 5> kNistFields{{
    {"B163", "1+x^3+x^6+x^7+x^163"},
    {"B233", "1+x^74+x^233"},
    {"B283", "1+x^5+x^7+x^12+x^283"},
    {"B409", "1+x^87+x^409"},
    {"B571", "1+x^2+x^5+x^10+x^571"},
}};

/// Polynomial text for a preset name ("B163" ... "B571", case-insensitive), else nullopt.
std::optional<std::string_view> find_preset(std::string_view name);

}  // namespace ecsynth
