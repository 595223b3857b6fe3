#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "mlcif/family.hpp"

namespace mlcif {

/// MLCIF_CACHE_DIR if set, else ./.mlcif-cache.
std::filesystem::path cache_dir();

std::filesystem::path mk_cache_path(int k);
std::filesystem::path mk_meta_path(int k);

/// FNV-1a 64-bit, hex encoded; the digest recorded in meta files.
std::string fnv1a_hex(const std::string& data);

/// Writes the canonical JSONL cache plus its meta sidecar (count, wall time,
/// version, digest). Single-writer via a lock file.
void write_mk_cache(int k, const std::vector<Family>& families, double wall_ms);

/// Reads a cache file back, verifying every line parses and re-serializes to
/// the identical bytes and that the digest matches the meta record.
/// IntegrityError names the offending line. Returns nullopt when no cache
/// exists.
std::optional<std::vector<Family>> read_mk_cache(int k);

/// Cached enumeration: read when present, otherwise enumerate and write.
std::vector<Family> load_or_enumerate(int k, int threads = 0, bool allow_large = false);

/// Write-then-read determinism check: the reread cache must re-serialize to
/// byte-identical content with a stable digest.
bool cache_roundtrip(int k);

}  // namespace mlcif
