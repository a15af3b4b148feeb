#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

namespace ltewatch {

// Code constants shipped as checked-in data files (tbcc_poly.dat,
// qpp_sizes.dat, tbs_table.dat). Files are verified against
// MANIFEST.sha256 in the same directory before use.
class CodingTables {
public:
    uint16_t crc16_poly = 0;
    std::array<uint8_t, 3> conv_polys{};   // 7-bit tap masks
    std::array<int, 32> subblock_perm{};   // inter-column permutation

    struct Qpp {
        int k;
        int f1;
        int f2;
    };
    std::vector<Qpp> qpp;

    const Qpp* find_qpp(int k) const;
    bool qpp_supported(int k) const { return find_qpp(k) != nullptr; }

    // TBS table: rows = TBS index 0..26, columns = n_rb 1..110.
    int tbs(int tbs_index, int n_rb) const;
    int tbs_rows() const { return 27; }
    int tbs_cols() const { return 110; }

    static const CodingTables& instance();

private:
    std::vector<int> tbs_;
};

// Reads one data file and checks its SHA-256 against the manifest entry.
std::string load_verified(const std::string& dir, const std::string& name);

} // namespace ltewatch
