// Values transcribed from printed tables. Grid cells: a projection label,
// "X" for a forced zero, "." for neither.
#pragma once

#include <array>
#include <string_view>
#include <vector>

namespace fixtures {

inline const std::vector<std::vector<std::string_view>> kGrid1432657 = {
    {".", "28", "X", "X", "24", "X", "18", "11"},
    {".", ".", "X", "X", "25", "X", "19", "12"},
    {".", ".", ".", "X", "26", "6", "20", "13"},
    {".", ".", ".", ".", "27", "7", "21", "14"},
    {".", ".", ".", ".", ".", "8", "22", "15"},
    {".", "3", ".", ".", "X", ".", "23", "16"},
    {"4", "1", "9", ".", "X", ".", ".", "17"},
    {"2", "X", "5", "10", "X", ".", "X", "."},
};

inline const std::vector<std::vector<std::string_view>> kGridTamari7 = {
    {".", "28", "26", "23", "19", "14", "8", "1"},
    {".", ".", "27", "24", "20", "15", "9", "2"},
    {".", ".", ".", "25", "21", "16", "10", "3"},
    {".", ".", ".", ".", "22", "17", "11", "4"},
    {".", ".", ".", ".", ".", "18", "12", "5"},
    {".", ".", ".", "X", "X", ".", "13", "6"},
    {".", ".", "X", "X", "X", "X", ".", "7"},
    {".", "X", "X", "X", "X", "X", "X", "."},
};

inline const std::vector<std::vector<std::string_view>> kGridBipartite7 = {
    {".", "28", "X", "25", "X", "20", "X", "13"},
    {".", ".", "X", "26", "X", "21", "7", "14"},
    {".", ".", ".", "27", "X", "22", "8", "15"},
    {".", ".", ".", ".", "3", "23", "9", "16"},
    {".", ".", ".", ".", ".", "24", "10", "17"},
    {".", "4", ".", "X", ".", ".", "11", "18"},
    {"5", "1", ".", "X", ".", "X", ".", "19"},
    {"2", "X", "6", "X", "12", "X", ".", "."},
};

inline const std::vector<std::vector<std::string_view>> kGridBipartite8 = {
    {".", "36", "X", "33", "X", "28", "X", "21", "13"},
    {".", ".", "X", "34", "X", "29", "X", "22", "14"},
    {".", ".", ".", "35", "X", "30", "7", "23", "15"},
    {".", ".", ".", ".", "X", "31", "8", "24", "16"},
    {".", ".", ".", ".", ".", "32", "9", "25", "17"},
    {".", ".", ".", "3", ".", ".", "10", "26", "18"},
    {".", "4", ".", "X", ".", "X", ".", "27", "19"},
    {"5", "1", "11", "X", ".", "X", ".", ".", "20"},
    {"2", "X", "6", "X", "12", "X", ".", "X", "."},
};

inline const std::vector<std::vector<int>> kUTamari3 = {
    {1,0,0,0,0,0},
    {1,1,0,0,0,0},
    {1,1,1,0,0,0},
    {1,0,0,1,0,0},
    {0,0,0,1,1,0},
    {1,0,0,1,0,1},
};

inline const std::vector<std::vector<int>> kUBipartite7 = {
    {1,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0},
    {0,1,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0},
    {0,0,1,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0},
    {1,0,0,1,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0},
    {0,1,0,0,1,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0},
    {0,1,0,0,0,1,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0},
    {0,0,0,0,0,0,1,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0},
    {0,0,0,0,0,0,1,1,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0},
    {0,0,0,0,0,0,1,1,1,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0},
    {0,0,0,0,0,0,1,1,1,1,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0},
    {0,0,0,0,0,0,1,1,1,1,1,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0},
    {0,1,0,0,0,1,0,0,0,0,0,1,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0},
    {0,0,0,0,0,0,0,0,0,0,0,0,1,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0},
    {0,0,0,0,0,0,0,0,0,0,0,0,1,1,0,0,0,0,0,0,0,0,0,0,0,0,0,0},
    {0,0,0,0,0,0,0,0,0,0,0,0,1,1,1,0,0,0,0,0,0,0,0,0,0,0,0,0},
    {0,0,0,0,0,0,0,0,0,0,0,0,1,1,1,1,0,0,0,0,0,0,0,0,0,0,0,0},
    {0,0,0,0,0,0,0,0,0,0,0,0,1,1,1,1,1,0,0,0,0,0,0,0,0,0,0,0},
    {0,0,0,0,0,0,0,0,0,0,0,0,1,1,1,1,1,1,0,0,0,0,0,0,0,0,0,0},
    {0,0,0,0,0,0,0,0,0,0,0,0,1,1,1,1,1,1,1,0,0,0,0,0,0,0,0,0},
    {0,0,0,0,0,0,0,0,0,0,0,0,1,0,0,0,0,0,0,1,0,0,0,0,0,0,0,0},
    {0,0,0,0,0,0,1,0,0,0,0,0,0,0,0,0,0,0,0,1,1,0,0,0,0,0,0,0},
    {0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,1,1,1,0,0,0,0,0,0},
    {0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,1,1,1,1,0,0,0,0,0},
    {0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,1,1,1,1,1,0,0,0,0},
    {0,0,0,0,0,0,0,0,0,0,0,0,1,0,0,0,0,0,0,1,0,0,0,0,1,0,0,0},
    {0,0,0,0,0,0,0,0,0,0,0,0,1,1,0,0,0,0,0,0,0,0,0,0,1,1,0,0},
    {0,0,0,0,0,0,1,1,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,1,1,1,0},
    {0,0,0,0,0,0,0,0,0,0,0,0,1,0,0,0,0,0,0,1,0,0,0,0,1,0,0,1},
};

inline const std::vector<std::string_view> kSingletons132 = {"1234", "2134", "1243", "2143", "2413", "4213", "2431", "4231", "4321"};

inline const std::vector<std::string_view> kIdealPerms2123243212 = {"12345", "13245", "31245", "32145", "32415", "34215", "32451", "34251", "34521", "35421", "53421", "54321"};

}  // namespace fixtures
