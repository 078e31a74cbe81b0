#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

// The published classification counts that the enumerators must reproduce,
// plus determinant certificates frozen from an independent implementation.
// Used by the CLI --expect-paper comparisons and by the test suite.
namespace minev::published {

inline const std::vector<int> rooted_size_histogram = {1,   0,   1,   2,  6,  14, 42, 107,
                                                       190, 194, 136, 68, 27, 4,  2};
inline constexpr int rooted_total = 794;
inline constexpr int rooted_maximal_count = 48;
inline const std::map<int, int> rooted_ell0_histogram = {{0, 743}, {1, 36}, {2, 10},
                                                         {3, 3},   {4, 1},  {6, 1}};

inline const std::map<int, int> maverick_level_members = {
    {2, 1},    {3, 2},    {4, 6},    {5, 18},  {6, 67},  {7, 291}, {8, 1410}, {9, 6817},
    {10, 677}, {11, 1304}, {12, 1237}, {13, 775}, {14, 408}, {15, 221}, {16, 107}, {17, 42},
    {18, 13},  {19, 3}};
inline const std::map<int, int> maverick_histogram = {{9, 13},   {10, 629}, {11, 1304},
                                                      {12, 1237}, {13, 775}, {14, 408},
                                                      {15, 221},  {16, 107}, {17, 42},
                                                      {18, 13},   {19, 3}};
inline constexpr int maverick_total = 4752;

inline const std::map<int, int> twisted_histogram = {{10, 48},  {11, 133}, {12, 220}, {13, 236},
                                                     {14, 210}, {15, 162}, {16, 96},  {17, 40},
                                                     {18, 13},  {19, 3}};
inline constexpr int twisted_total = 1161;

// det(101 I + 50 A) over the zero-length augmented extension of each
// forbidden rooting; all strictly negative.
inline const std::vector<std::pair<std::string, std::string>> forbidden_scaled_dets = {
    {"K2-bar", "-47966111899"},
    {"S3", "-109916992989199"},
    {"K3", "-2360074309299"},
    {"C5", "-5871449126664099"},
    {"C7", "-15147869381536228899"},
    {"P8-mid", "-93674491842652868799"},
    {"P10-end", "-19353781995997570623599"},
    {"K7", "-995143961959026399"},
};

inline constexpr int appendix_pool_size = 75;
inline constexpr int appendix_pd_pass = 40;
inline constexpr int appendix_collected = 7;
inline const std::map<std::string, int> appendix_classification = {
    {"E6", 4}, {"E7", 2}, {"E6p-rooted", 1}};

inline const std::map<int, int> glg_catalog_by_order = {{1, 1},   {2, 1},   {3, 2},   {4, 6},
                                                        {5, 18},  {6, 47},  {7, 130}, {8, 382},
                                                        {9, 1210}, {10, 4016}};
inline constexpr int glg_minimal_count = 31;

inline constexpr double lambda_star = 2.0198008870904673;
inline constexpr double lambda_prime = 2.021235416051777;

}  // namespace minev::published
