#pragma once

#include <cstdint>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <sys/wait.h>

#include "mgcf/dataset.hpp"

namespace support {

// Self-contained splitmix64 generator for test inputs; deliberately not the
// library's generator so fixtures do not depend on library internals.
class TestRng {
public:
    explicit TestRng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        state_ += 0x9E3779B97F4A7C15ull;
        std::uint64_t z = state_;
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        return z ^ (z >> 31);
    }

    double unit() {
        return static_cast<double>(next() >> 11) * 0x1.0p-53;
    }

    double uniform(double lo, double hi) { return lo + (hi - lo) * unit(); }

    std::size_t index(std::size_t bound) {
        return static_cast<std::size_t>(next() % bound);
    }

    std::size_t between(std::size_t lo, std::size_t hi) {
        return lo + index(hi - lo + 1);
    }

    std::vector<double> series(std::size_t m, double lo = -5.0, double hi = 5.0) {
        std::vector<double> v(m);
        for (auto& x : v) x = uniform(lo, hi);
        return v;
    }

private:
    std::uint64_t state_;
};

// Unique directory under the system temp root, removed on destruction.
class TempDir {
public:
    TempDir() {
        std::string tmpl =
            (std::filesystem::temp_directory_path() / "mgcf-test-XXXXXX").string();
        if (!mkdtemp(tmpl.data())) {
            throw std::runtime_error("mkdtemp failed for " + tmpl);
        }
        path_ = tmpl;
    }

    ~TempDir() {
        std::error_code ec;
        std::filesystem::remove_all(path_, ec);
    }

    TempDir(const TempDir&) = delete;
    TempDir& operator=(const TempDir&) = delete;

    const std::filesystem::path& path() const { return path_; }

    std::filesystem::path file(const std::string& name) const {
        return path_ / name;
    }

private:
    std::filesystem::path path_;
};

inline std::string slurp(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path.string());
    std::ostringstream out;
    out << in.rdbuf();
    return out.str();
}

inline void spit(const std::filesystem::path& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + path.string());
    out << text;
}

// Runs a shell command and returns the process exit code (-1 if it did not
// exit normally).
inline int run_shell(const std::string& cmd) {
    const int status = std::system(cmd.c_str());
    if (status == -1 || !WIFEXITED(status)) return -1;
    return WEXITSTATUS(status);
}

// Random dataset with both classes present and no duplicate series (values
// are continuous, collisions have probability zero).
inline mgcf::LabeledDataset random_dataset(TestRng& rng, std::size_t n,
                                           std::size_t m,
                                           const std::string& name = "random") {
    std::vector<mgcf::TimeSeries> series;
    std::vector<int> labels;
    series.reserve(n);
    labels.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        series.push_back({rng.series(m)});
        labels.push_back(static_cast<int>(i % 2));
    }
    return {std::move(series), std::move(labels), name};
}

} // namespace support
