#pragma once

#include <array>
#include <string_view>

namespace qec::fixtures {

// Encoder reduction walkthrough for the seven-column EA code, Alice side.
// Each matrix is six rows "Z-block|X-block" as printed, steps 1..17.
inline constexpr std::array<std::array<std::string_view, 6>, 17> kAppendixMatrices = {{
    {{"100101|000000", "101110|000000", "110011|000000", "000000|110011", "000000|101110", "000000|100101"}},
    {{"100101|000000", "000000|100101", "110011|000000", "000000|110011", "000000|101110", "101110|000000"}},
    {{"000000|100101", "100101|000000", "010010|100001", "100001|010010", "100100|001010", "001010|100100"}},
    {{"000000|100000", "100101|000000", "010010|100100", "000001|010010", "000100|001010", "001010|100001"}},
    {{"100000|000000", "000101|100000", "010010|000100", "000001|010010", "000100|001010", "001010|000001"}},
    {{"100000|000000", "000000|100101", "010110|000000", "000000|010011", "000000|001110", "001011|000000"}},
    {{"100000|000000", "000000|100000", "010110|000000", "000000|010011", "000000|001110", "001011|000000"}},
    {{"100000|000000", "000000|100000", "000000|010110", "010010|000001", "000110|001000", "001001|000010"}},
    {{"100000|000000", "000000|100000", "000000|010000", "000010|000001", "000110|001000", "001001|000010"}},
    {{"100000|000000", "000000|100000", "010000|000000", "000010|000001", "000110|001000", "001001|000010"}},
    {{"100000|000000", "000000|100000", "010000|000000", "001000|000001", "000110|000010", "001001|001000"}},
    {{"100000|000000", "000000|100000", "010000|000000", "001000|000000", "001100|000011", "000011|000000"}},
    {{"100000|000000", "000000|100000", "010000|000000", "001000|000000", "000100|000011", "000011|000000"}},
    {{"100000|000000", "000000|100000", "010000|000000", "001000|000000", "000000|000100", "000011|000000"}},
    {{"100000|000000", "000000|100000", "010000|000000", "001000|000000", "000100|000000", "000011|000000"}},
    {{"100000|000000", "000000|100000", "010000|000000", "001000|000000", "000100|000000", "000000|000010"}},
    {{"100000|000000", "000000|100000", "010000|000000", "001000|000000", "000100|000000", "000010|000000"}},
}};

}  // namespace qec::fixtures
