#pragma once

#include <stdexcept>
#include <string>

namespace ctd {

// refusal to allocate per-rank arrays beyond the configured cap
struct MemoryCapError : std::runtime_error {
    explicit MemoryCapError(const std::string& what) : std::runtime_error(what) {}
};

// a supplied group does not map the design's block set to itself
struct NotPreservedError : std::runtime_error {
    explicit NotPreservedError(const std::string& what) : std::runtime_error(what) {}
};

inline constexpr std::uint64_t kDefaultMaxRanks = std::uint64_t{1} << 27;

} // namespace ctd
