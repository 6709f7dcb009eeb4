#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>

#include "pathlink/graph.hpp"

namespace pathlink {

// Design file, line based:
//   design <shape> host=<K n | K m n | edges>
//   # comment
//   block v1 v2 ... vk
//   edge u v            (only for host=edges)
// Whitespace-separated decimal integers. serialize(parse(f)) is the
// canonical form of f and a fixpoint of parse/serialize.
Design parse_design(std::istream& in);
Design parse_design_text(const std::string& text);
Design load_design(const std::filesystem::path& file);
std::string serialize_design(const Design& d);
void save_design(const std::filesystem::path& file, const Design& d);

// Down-link file:
//   downlink <domain-file> <codomain-file>
//   link <i> <j>
// Referenced design files are resolved relative to the down-link file.
DownLink load_downlink(const std::filesystem::path& file);
std::string serialize_downlink(const std::string& domain_file, const std::string& codomain_file,
                               const std::vector<std::pair<int, int>>& map);

std::uint64_t fnv1a64(const std::string& bytes);
std::string checksum_hex(const std::string& bytes);

}  // namespace pathlink
