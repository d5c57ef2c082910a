#include "lcdawg/text.hpp"

#include <algorithm>
#include <array>

#include "lcdawg/errors.hpp"

namespace lcdawg {

const char* to_string(FormatErrc code) noexcept {
    switch (code) {
        case FormatErrc::bad_magic: return "bad magic";
        case FormatErrc::unsupported_version: return "unsupported version";
        case FormatErrc::truncated: return "truncated";
        case FormatErrc::id_out_of_range: return "id out of range";
        case FormatErrc::invariant_violation: return "invariant violation";
        case FormatErrc::trailing_bytes: return "trailing bytes";
    }
    return "unknown";
}

void require_no_sentinel(std::span<const Symbol> bytes, const char* what) {
    auto it = std::find(bytes.begin(), bytes.end(), kSentinel);
    if (it != bytes.end()) {
        throw InputError(std::string(what) + " contains the reserved zero byte at offset " +
                         std::to_string(it - bytes.begin()));
    }
}

Text::Text(std::span<const Symbol> body) {
    require_no_sentinel(body, "text");
    bytes_.reserve(body.size() + 1);
    bytes_.assign(body.begin(), body.end());
    bytes_.push_back(kSentinel);
}

Text Text::from_string(std::string_view body) { return Text(as_symbols(body)); }

std::string Text::body_string() const {
    return {reinterpret_cast<const char*>(bytes_.data()), size()};
}

std::size_t Text::sigma() const noexcept {
    std::array<bool, 256> seen{};
    for (Symbol c : body()) seen[c] = true;
    return static_cast<std::size_t>(std::count(seen.begin(), seen.end(), true));
}

Text Text::reversed() const {
    std::vector<Symbol> rev(body().rbegin(), body().rend());
    return Text(rev);
}

}  // namespace lcdawg
