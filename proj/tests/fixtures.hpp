#pragma once

#include <cstdint>
#include <vector>

// Frozen expected values used across the unit and acceptance suites.

namespace fixtures {

struct TableRow {
    std::uint32_t index;
    std::uint64_t j;
    std::uint64_t k;
    std::uint64_t m;
    char situation;  // '<' or '>'
    std::uint64_t start;
};

// The first 79 calculation rows.
inline const std::vector<TableRow>& first_table() {
    static const std::vector<TableRow> rows = {
        {1, 2, 2, 2, '<', 4},        {2, 3, 3, 6, '<', 9},        {3, 5, 5, 30, '>', 25},
        {4, 7, 5, 30, '<', 35},      {5, 7, 7, 210, '>', 49},     {6, 11, 7, 210, '>', 77},
        {7, 13, 7, 210, '>', 91},    {8, 17, 7, 210, '>', 119},   {9, 19, 7, 210, '>', 133},
        {10, 23, 7, 210, '>', 161},  {11, 29, 7, 210, '>', 203},  {12, 31, 7, 210, '<', 217},
        {13, 11, 11, 2310, '>', 121},  {14, 13, 11, 2310, '>', 143},  {15, 17, 11, 2310, '>', 187},
        {16, 19, 11, 2310, '>', 209},  {17, 23, 11, 2310, '>', 253},  {18, 29, 11, 2310, '>', 319},
        {19, 31, 11, 2310, '>', 341},  {20, 37, 11, 2310, '>', 407},  {21, 41, 11, 2310, '>', 451},
        {22, 43, 11, 2310, '>', 473},  {23, 47, 11, 2310, '>', 517},  {24, 53, 11, 2310, '>', 583},
        {25, 59, 11, 2310, '>', 649},  {26, 61, 11, 2310, '>', 671},  {27, 67, 11, 2310, '>', 737},
        {28, 71, 11, 2310, '>', 781},  {29, 73, 11, 2310, '>', 803},  {30, 79, 11, 2310, '>', 869},
        {31, 83, 11, 2310, '>', 913},  {32, 89, 11, 2310, '>', 979},  {33, 97, 11, 2310, '>', 1067},
        {34, 101, 11, 2310, '>', 1111}, {35, 103, 11, 2310, '>', 1133},
        {36, 107, 11, 2310, '>', 1177}, {37, 109, 11, 2310, '>', 1199},
        {38, 113, 11, 2310, '>', 1243}, {39, 127, 11, 2310, '>', 1397},
        {40, 131, 11, 2310, '>', 1441}, {41, 137, 11, 2310, '>', 1507},
        {42, 139, 11, 2310, '>', 1529}, {43, 149, 11, 2310, '>', 1639},
        {44, 151, 11, 2310, '>', 1661}, {45, 157, 11, 2310, '>', 1727},
        {46, 163, 11, 2310, '>', 1793}, {47, 167, 11, 2310, '>', 1837},
        {48, 173, 11, 2310, '>', 1903}, {49, 179, 11, 2310, '>', 1969},
        {50, 181, 11, 2310, '>', 1991}, {51, 191, 11, 2310, '>', 2101},
        {52, 193, 11, 2310, '>', 2123}, {53, 197, 11, 2310, '>', 2167},
        {54, 199, 11, 2310, '>', 2189}, {55, 211, 11, 2310, '<', 2321},
        {56, 13, 13, 30030, '>', 169},  {57, 17, 13, 30030, '>', 221},
        {58, 19, 13, 30030, '>', 247},  {59, 23, 13, 30030, '>', 299},
        {60, 29, 13, 30030, '>', 377},  {61, 31, 13, 30030, '>', 403},
        {62, 37, 13, 30030, '>', 481},  {63, 41, 13, 30030, '>', 533},
        {64, 43, 13, 30030, '>', 559},  {65, 47, 13, 30030, '>', 611},
        {66, 53, 13, 30030, '>', 689},  {67, 59, 13, 30030, '>', 767},
        {68, 61, 13, 30030, '>', 793},  {69, 67, 13, 30030, '>', 871},
        {70, 71, 13, 30030, '>', 923},  {71, 73, 13, 30030, '>', 949},
        {72, 79, 13, 30030, '>', 1027}, {73, 83, 13, 30030, '>', 1079},
        {74, 89, 13, 30030, '>', 1157}, {75, 97, 13, 30030, '>', 1261},
        {76, 101, 13, 30030, '>', 1313}, {77, 103, 13, 30030, '>', 1339},
        {78, 107, 13, 30030, '>', 1391}, {79, 109, 13, 30030, '>', 1417},
    };
    return rows;
}

struct JkRow {
    std::uint64_t k;
    const char* step;  // decimal; the K=53 and K=101 steps exceed 64 bits
    std::uint64_t start;
};

// The eleven J=K rows of the second table.
inline const std::vector<JkRow>& second_table() {
    static const std::vector<JkRow> rows = {
        {17, "510510", 289},
        {19, "9699690", 361},
        {23, "223092870", 529},
        {29, "6469693230", 841},
        {31, "200560490130", 961},
        {37, "7420738134810", 1369},
        {41, "304250263527210", 1681},
        {43, "13082761331670030", 1849},
        {47, "614889782588491410", 2209},
        {53, "32589158477190044730", 2809},
        {101, "232862364358497360900063316880507363070", 10201},
    };
    return rows;
}

inline const std::vector<std::uint64_t>& primes_to_100() {
    static const std::vector<std::uint64_t> primes = {2,  3,  5,  7,  11, 13, 17, 19, 23,
                                                      29, 31, 37, 41, 43, 47, 53, 59, 61,
                                                      67, 71, 73, 79, 83, 89, 97};
    return primes;
}

struct ReplayFixture {
    const char* label;
    std::uint64_t a;
    std::uint64_t d;
    std::vector<std::uint64_t> survivors;  // list after removing the pattern
};

// The seven patterns of the n = 100 walkthrough and the list after each.
inline const std::vector<ReplayFixture>& replay_100() {
    auto odds_from_3 = [] {
        std::vector<std::uint64_t> s = {2};
        for (std::uint64_t v = 3; v <= 99; v += 2) {
            s.push_back(v);
        }
        return s;
    };
    static const std::vector<ReplayFixture> steps = {
        {"A", 4, 2, odds_from_3()},
        {"B", 9, 6,
         {2, 3, 5, 7, 11, 13, 17, 19, 23, 25, 29, 31, 35, 37, 41, 43, 47,
          49, 53, 55, 59, 61, 65, 67, 71, 73, 77, 79, 83, 85, 89, 91, 95, 97}},
        {"C", 25, 30,
         {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 35, 37, 41, 43, 47, 49,
          53, 59, 61, 65, 67, 71, 73, 77, 79, 83, 89, 91, 95, 97}},
        {"D", 35, 30,
         {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 49, 53,
          59, 61, 67, 71, 73, 77, 79, 83, 89, 91, 97}},
        {"E", 49, 210,
         {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59,
          61, 67, 71, 73, 77, 79, 83, 89, 91, 97}},
        {"F", 77, 210,
         {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59,
          61, 67, 71, 73, 79, 83, 89, 91, 97}},
        {"G", 91, 210,
         {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59,
          61, 67, 71, 73, 79, 83, 89, 97}},
    };
    return steps;
}

}  // namespace fixtures
