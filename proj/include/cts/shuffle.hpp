#pragma once

#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace cts {

// All interleavings of u and v. Throws CapExceeded when |u|+|v| > cap.
std::set<std::string> shuffle_pair(std::string_view u, std::string_view v, std::size_t cap = 14);
std::set<std::string> shuffle_tuple(const std::vector<std::string>& words, std::size_t cap = 14);

// Whether w is an interleaving of words (search over position vectors).
bool in_shuffle(std::string_view w, const std::vector<std::string>& words);

}  // namespace cts
