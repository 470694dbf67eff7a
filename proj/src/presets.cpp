#include "ecsynth/presets.hpp"

#include <algorithm>
#include <cctype>

namespace ecsynth {

std::optional<std::string_view> find_preset(std::string_view name) {
  for (const FieldPreset& p : kNistFields) {
    const bool same = name.size() == p.name.size() &&
                      std::equal(name.begin(), name.end(), p.name.begin(), [](char a, char b) {
                        return std::toupper(static_cast<unsigned char>(a)) == b;
                      });
    if (same) return p.poly;
  }
  return std::nullopt;
}

}  // namespace ecsynth
