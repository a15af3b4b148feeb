#include "ltewatch/tables.h"

#include "ltewatch/util.h"

#include <mutex>
#include <sstream>
#include <stdexcept>

namespace ltewatch {

namespace {

std::map<std::string, std::string> load_manifest(const std::string& dir) {
    std::map<std::string, std::string> out;
    std::string text = read_file(dir + "/MANIFEST.sha256");
    for (const std::string& raw : split(text, '\n')) {
        std::string line = trim(raw);
        if (line.empty() || line[0] == '#') {
            continue;
        }
        size_t sp = line.find_first_of(" \t");
        if (sp == std::string::npos) {
            throw std::runtime_error("malformed manifest line: " + line);
        }
        out[trim(line.substr(sp + 1))] = trim(line.substr(0, sp));
    }
    return out;
}

} // namespace

std::string load_verified(const std::string& dir, const std::string& name) {
    static std::mutex mu;
    static std::map<std::string, std::map<std::string, std::string>> manifests;
    std::map<std::string, std::string> manifest;
    {
        std::lock_guard<std::mutex> lock(mu);
        auto it = manifests.find(dir);
        if (it == manifests.end()) {
            it = manifests.emplace(dir, load_manifest(dir)).first;
        }
        manifest = it->second;
    }
    auto it = manifest.find(name);
    if (it == manifest.end()) {
        throw std::runtime_error(name + " not listed in MANIFEST.sha256");
    }
    std::string content = read_file(dir + "/" + name);
    std::string digest = sha256_hex(content);
    if (digest != it->second) {
        throw std::runtime_error(name + " integrity check failed (sha256 " + digest + ")");
    }
    return content;
}

const CodingTables::Qpp* CodingTables::find_qpp(int k) const {
    for (const Qpp& q : qpp) {
        if (q.k == k) {
            return &q;
        }
    }
    return nullptr;
}

int CodingTables::tbs(int tbs_index, int n_rb) const {
    if (tbs_index < 0 || tbs_index >= tbs_rows() || n_rb < 1 || n_rb > tbs_cols()) {
        throw std::out_of_range("tbs index out of range");
    }
    return tbs_[tbs_index * tbs_cols() + (n_rb - 1)];
}

const CodingTables& CodingTables::instance() {
    static CodingTables tables = [] {
        CodingTables t;
        std::string dir = data_dir();

        KvFile poly = KvFile::parse(load_verified(dir, "tbcc_poly.dat"));
        t.crc16_poly = static_cast<uint16_t>(std::stoul(poly.get("crc16_poly"), nullptr, 0));
        for (int i = 0; i < 3; ++i) {
            // polynomials written in octal, as conventional for conv codes
            t.conv_polys[i] = static_cast<uint8_t>(
                std::stoul(poly.get("conv_poly_" + std::to_string(i)), nullptr, 8));
        }
        std::vector<std::string> perm = split(poly.get("subblock_perm"), ',');
        if (perm.size() != 32) {
            throw std::runtime_error("subblock_perm must have 32 entries");
        }
        std::array<bool, 32> seen{};
        for (size_t i = 0; i < 32; ++i) {
            int v = std::stoi(trim(perm[i]));
            if (v < 0 || v > 31 || seen[v]) {
                throw std::runtime_error("subblock_perm is not a permutation");
            }
            seen[v] = true;
            t.subblock_perm[i] = v;
        }

        for (const std::string& raw : split(load_verified(dir, "qpp_sizes.dat"), '\n')) {
            std::string line = trim(raw);
            if (line.empty() || line[0] == '#') {
                continue;
            }
            std::istringstream ss(line);
            Qpp q{};
            if (!(ss >> q.k >> q.f1 >> q.f2)) {
                throw std::runtime_error("malformed qpp_sizes.dat line: " + line);
            }
            t.qpp.push_back(q);
        }

        t.tbs_.reserve(27 * 110);
        for (const std::string& raw : split(load_verified(dir, "tbs_table.dat"), '\n')) {
            std::string line = trim(raw);
            if (line.empty() || line[0] == '#') {
                continue;
            }
            std::istringstream ss(line);
            int v;
            while (ss >> v) {
                t.tbs_.push_back(v);
            }
        }
        if (t.tbs_.size() != 27u * 110u) {
            throw std::runtime_error("tbs_table.dat must hold 27x110 values");
        }
        return t;
    }();
    return tables;
}

} // namespace ltewatch
