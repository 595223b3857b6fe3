#include "mlcif/cache.hpp"

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <thread>

#include <json.hpp>

#include "mlcif/enumerate.hpp"
#include "mlcif/version.hpp"

namespace mlcif {

namespace fs = std::filesystem;
using nlohmann::json;

fs::path cache_dir() {
    if (const char* env = std::getenv("MLCIF_CACHE_DIR"); env && *env) return fs::path(env);
    return fs::path(".mlcif-cache");
}

fs::path mk_cache_path(int k) { return cache_dir() / "mk" / (std::to_string(k) + ".jsonl"); }
fs::path mk_meta_path(int k) { return cache_dir() / "mk" / (std::to_string(k) + ".meta.json"); }

std::string fnv1a_hex(const std::string& data) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : data) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return std::string(buf);
}

namespace {

/// Lock file held for the duration of a cache write (single-writer, many
/// readers read the completed file only).
class LockFile {
  public:
    explicit LockFile(fs::path path) : path_(std::move(path)) {
        for (int attempt = 0; attempt < 200; ++attempt) {
            if (std::FILE* f = std::fopen(path_.string().c_str(), "wx")) {
                std::fclose(f);
                held_ = true;
                return;
            }
            std::this_thread::sleep_for(std::chrono::milliseconds(25));
        }
        throw ScaleError("could not acquire cache lock " + path_.string() + " (stale lock file?)");
    }
    ~LockFile() {
        if (held_) {
            std::error_code ec;
            fs::remove(path_, ec);
        }
    }
    LockFile(const LockFile&) = delete;
    LockFile& operator=(const LockFile&) = delete;

  private:
    fs::path path_;
    bool held_ = false;
};

std::string serialize_all(const std::vector<Family>& families) {
    std::string content;
    for (const Family& f : families) {
        content += canonical_jsonl(f);
        content += '\n';
    }
    return content;
}

}  // namespace

void write_mk_cache(int k, const std::vector<Family>& families, double wall_ms) {
    const fs::path dir = mk_cache_path(k).parent_path();
    fs::create_directories(dir);
    LockFile lock(dir / (std::to_string(k) + ".lock"));

    const std::string content = serialize_all(families);
    {
        std::ofstream out(mk_cache_path(k), std::ios::binary | std::ios::trunc);
        if (!out) throw ScaleError("cannot write cache file " + mk_cache_path(k).string());
        out << content;
    }
    json meta;
    meta["k"] = k;
    meta["count"] = families.size();
    meta["wall_ms"] = wall_ms;
    meta["version"] = kVersion;
    meta["digest"] = fnv1a_hex(content);
    std::ofstream mout(mk_meta_path(k), std::ios::binary | std::ios::trunc);
    mout << meta.dump(2) << '\n';
}

std::optional<std::vector<Family>> read_mk_cache(int k) {
    const fs::path path = mk_cache_path(k);
    if (!fs::exists(path)) return std::nullopt;

    std::ifstream in(path, std::ios::binary);
    std::stringstream ss;
    ss << in.rdbuf();
    const std::string content = ss.str();

    std::vector<Family> out;
    std::istringstream lines(content);
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(lines, line)) {
        ++lineno;
        if (line.empty()) continue;
        Family f = [&] {
            try {
                json j = json::parse(line);
                const GroundParams params(j.at("k").get<int>(), j.at("n").get<int>());
                std::vector<KSet> boundary;
                for (const auto& arr : j.at("boundary")) boundary.emplace_back(arr.get<std::vector<int>>(), params.n);
                return Family::from_boundary(std::move(boundary), params);
            } catch (const IntegrityError&) {
                throw;
            } catch (const std::exception& e) {
                throw IntegrityError("cache " + path.string() + " line " + std::to_string(lineno) +
                                     " is corrupt: " + e.what());
            }
        }();
        if (canonical_jsonl(f) != line)
            throw IntegrityError("cache " + path.string() + " line " + std::to_string(lineno) +
                                 " is not in canonical serialization");
        out.push_back(std::move(f));
    }

    if (fs::exists(mk_meta_path(k))) {
        std::ifstream min(mk_meta_path(k));
        std::stringstream ms;
        ms << min.rdbuf();
        try {
            const json meta = json::parse(ms.str());
            if (meta.contains("digest") && meta.at("digest").get<std::string>() != fnv1a_hex(content))
                throw IntegrityError("cache " + path.string() + " digest mismatch against meta record");
            if (meta.contains("count") && meta.at("count").get<std::size_t>() != out.size())
                throw IntegrityError("cache " + path.string() + " count mismatch against meta record");
        } catch (const json::exception& e) {
            throw IntegrityError("cache meta " + mk_meta_path(k).string() + " is corrupt: " + e.what());
        }
    }
    return out;
}

std::vector<Family> load_or_enumerate(int k, int threads, bool allow_large) {
    if (auto cached = read_mk_cache(k)) return std::move(*cached);
    const auto start = std::chrono::steady_clock::now();
    EnumOptions opts;
    opts.threads = threads;
    opts.allow_large = allow_large;
    std::vector<Family> families = enumerate_mlcifs(k, opts);
    const double wall_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    write_mk_cache(k, families, wall_ms);
    return families;
}

bool cache_roundtrip(int k) {
    const std::vector<Family> families = load_or_enumerate(k);
    const auto reread = read_mk_cache(k);
    if (!reread) return false;
    if (serialize_all(*reread) != serialize_all(families)) return false;

    std::ifstream in(mk_cache_path(k), std::ios::binary);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str() == serialize_all(families);
}

}  // namespace mlcif
