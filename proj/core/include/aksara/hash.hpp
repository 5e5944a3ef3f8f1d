#pragma once

#include <cstdint>
#include <string>
#include <string_view>

namespace aksara {

// 64-bit FNV-1a. Used for config/vocabulary fingerprints in run manifests;
// not cryptographic.
std::uint64_t fnv1a64(std::string_view data);

// Hex-encoded fnv1a64, zero-padded to 16 chars.
std::string fnv1a64_hex(std::string_view data);

// Digest of a file's raw bytes. Throws aksara::Error if the file cannot be read.
std::string file_digest_hex(const std::string& path);

}  // namespace aksara
