#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace lcdawg {

using Symbol = std::uint8_t;

inline constexpr Symbol kSentinel = 0;

// Byte string terminated by a single sentinel symbol. Valid symbols of the
// body are 1..255; the sentinel (0) appears once, at the end.
class Text {
public:
    Text() : bytes_{kSentinel} {}

    // Throws InputError if `body` contains the sentinel byte.
    explicit Text(std::span<const Symbol> body);
    static Text from_string(std::string_view body);

    // Length without the sentinel.
    std::size_t size() const noexcept { return bytes_.size() - 1; }
    bool empty() const noexcept { return size() == 0; }

    // The whole sentinel-terminated sequence (length size() + 1).
    std::span<const Symbol> terminated() const noexcept { return bytes_; }
    std::span<const Symbol> body() const noexcept { return {bytes_.data(), size()}; }
    std::string body_string() const;

    // 0-based access into the terminated sequence.
    Symbol operator[](std::size_t i) const noexcept { return bytes_[i]; }

    // Number of distinct non-sentinel symbols.
    std::size_t sigma() const noexcept;

    Text reversed() const;

private:
    std::vector<Symbol> bytes_;
};

// Throws InputError naming `what` when `bytes` contains the sentinel.
void require_no_sentinel(std::span<const Symbol> bytes, const char* what);

inline std::span<const Symbol> as_symbols(std::string_view s) noexcept {
    return {reinterpret_cast<const Symbol*>(s.data()), s.size()};
}

}  // namespace lcdawg
