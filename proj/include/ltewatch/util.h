#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace ltewatch {

// SHA-256 of a byte buffer, lowercase hex. Used to verify the integrity of
// the checked-in table files against data/MANIFEST.sha256.
std::string sha256_hex(const void* data, size_t len);
std::string sha256_hex(const std::string& s);

// Plain-text key=value files. '#' starts a comment, blank lines ignored,
// whitespace around key and value trimmed. Later keys override earlier ones.
class KvFile {
public:
    static KvFile load(const std::string& path);
    static KvFile parse(const std::string& text);

    bool has(const std::string& key) const;
    std::string get(const std::string& key) const;                      // throws if missing
    std::string get(const std::string& key, const std::string& def) const;
    int64_t get_int(const std::string& key, int64_t def) const;
    double get_double(const std::string& key, double def) const;

    const std::map<std::string, std::string>& entries() const { return entries_; }

private:
    std::map<std::string, std::string> entries_;
};

std::string trim(const std::string& s);
std::vector<std::string> split(const std::string& s, char sep);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

// Directory holding the .dat table files: $LTEWATCH_DATA if set, otherwise
// the compile-time default (the repository's data/ directory).
std::string data_dir();

// Deterministic 64-bit mix used to derive independent sub-seeds, e.g. one
// RNG stream per subframe of a simulated scenario.
uint64_t mix_seed(uint64_t seed, uint64_t salt);

} // namespace ltewatch
