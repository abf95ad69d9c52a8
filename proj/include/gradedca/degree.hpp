#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace gradedca {

/// A multi-degree in Z^d.
using Degree = std::vector<std::int64_t>;

/// Number of cluster variables carrying each degree.
using DegreeDistribution = std::map<Degree, std::size_t>;

Degree operator+(const Degree& a, const Degree& b);
Degree operator-(const Degree& a, const Degree& b);
Degree operator-(const Degree& a);
bool is_zero_degree(const Degree& d);

/// `[a,b,...]`
std::string to_string(const Degree& d);
/// `{[1]:6, [0]:8, [-1]:6}`
std::string to_string(const DegreeDistribution& dist);

std::size_t total_count(const DegreeDistribution& dist);

}  // namespace gradedca
