#ifndef MAGLAB_FILE_FORMATS_HPP
#define MAGLAB_FILE_FORMATS_HPP

#include <iosfwd>
#include <string>

#include "maglab/linalg.hpp"
#include "maglab/metric_space.hpp"
#include "maglab/real_line.hpp"

namespace maglab {

/// Point-cloud file: header line `dim=<N> p=<p>` (p accepts `inf`), then one
/// point per line as whitespace-separated decimals. `#` starts a comment.
PointCloud load_point_cloud(const std::string& path);
PointCloud read_point_cloud(std::istream& in, const std::string& source);

/// Distance-matrix file: first line `n=<n>`, then n rows of n decimals.
SquareMatrix load_distance_matrix(const std::string& path);
SquareMatrix read_distance_matrix(std::istream& in, const std::string& source);

/// Interval-union file: one `a b` pair per line, unsorted and overlapping
/// allowed; normalized on load.
IntervalUnion load_interval_union(const std::string& path);
IntervalUnion read_interval_union(std::istream& in, const std::string& source);

}  // namespace maglab

#endif  // MAGLAB_FILE_FORMATS_HPP
