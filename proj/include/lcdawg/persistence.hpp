#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <span>
#include <vector>

#include "lcdawg/index.hpp"

namespace lcdawg {

inline constexpr std::uint32_t kFormatVersion = 1;

// Binary index file, all integers little-endian:
//
//   "LCDW"  u32 version  u32 id_width  u32 sigma
//   u64 n  u64 node_count  u64 type1_count  u64 edge_count  u64 production_count
//   id root
//   node_count x  { u8 kind, id slink, id skip_target, u64 skip_len, u64 path_count }
//   edge_count x  { id hi, id lo, u8 first, u64 slen, id var }
//   production_count x { u8 tag (0 terminal, 1 pair), id left_or_symbol, id right }
//
// `id` is an unsigned integer of id_width (4 or 8) bytes; all-ones marks an
// absent id. Edges appear grouped by hi and sorted by first symbol.
std::vector<std::uint8_t> serialize(const Index& index);
std::size_t serialize(const Index& index, std::ostream& out);

// Validates everything before returning; throws FormatError.
Index deserialize(std::span<const std::uint8_t> bytes);
Index deserialize(std::istream& in);

void save_index(const Index& index, const std::filesystem::path& path);
Index load_index(const std::filesystem::path& path);

}  // namespace lcdawg
