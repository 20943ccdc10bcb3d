#pragma once

#include <cstdint>
#include <map>
#include <utility>
#include <vector>

namespace wiperbench::asm51 {

// Sparse byte image over the 4 KB code space; entry point is 0x0000.
struct ObjectImage {
    std::map<std::uint16_t, std::uint8_t> bytes;

    bool empty() const { return bytes.empty(); }
    std::size_t size() const { return bytes.size(); }

    // Maximal runs of contiguous addresses, ascending.
    std::vector<std::pair<std::uint16_t, std::vector<std::uint8_t>>> runs() const {
        std::vector<std::pair<std::uint16_t, std::vector<std::uint8_t>>> out;
        for (const auto& [addr, byte] : bytes) {
            if (!out.empty() &&
                addr == out.back().first + out.back().second.size()) {
                out.back().second.push_back(byte);
            } else {
                out.push_back({addr, {byte}});
            }
        }
        return out;
    }

    friend bool operator==(const ObjectImage&, const ObjectImage&) = default;
};

}  // namespace wiperbench::asm51
