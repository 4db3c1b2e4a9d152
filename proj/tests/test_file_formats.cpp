#include <doctest.h>

#include <cmath>
#include <functional>
#include <sstream>

#include "maglab/file_formats.hpp"
#include "test_support.hpp"

using namespace maglab;

namespace {

Errc catch_code(const std::function<void()>& fn) {
    try {
        fn();
    } catch (const Error& e) {
        return e.code();
    }
    FAIL("expected a maglab::Error");
    return Errc::invalid_argument;
}

}  // namespace

TEST_CASE("point cloud files") {
    std::istringstream good(
        "# square corners\n"
        "dim=2 p=1\n"
        "0 0\n"
        "1 0   # a trailing comment\n"
        "0 1\n"
        "1 1\n");
    const PointCloud cloud = read_point_cloud(good, "test");
    CHECK(cloud.dim == 2);
    CHECK(cloud.p == 1.0);
    REQUIRE(cloud.size() == 4);
    CHECK(cloud.points[1][0] == 1.0);

    std::istringstream chebyshev("dim=1 p=inf\n0\n2\n");
    CHECK(std::isinf(read_point_cloud(chebyshev, "test").p));

    std::istringstream empty("");
    CHECK(catch_code([&] { read_point_cloud(empty, "test"); }) ==
          Errc::input_parse_error);
    std::istringstream bad_header("dim=2\n0 0\n");
    CHECK(catch_code([&] { read_point_cloud(bad_header, "test"); }) ==
          Errc::input_parse_error);
    std::istringstream wrong_arity("dim=2 p=2\n0 0 0\n");
    CHECK(catch_code([&] { read_point_cloud(wrong_arity, "test"); }) ==
          Errc::input_parse_error);
    std::istringstream bad_number("dim=1 p=2\nx\n");
    CHECK(catch_code([&] { read_point_cloud(bad_number, "test"); }) ==
          Errc::input_parse_error);
    std::istringstream bad_p("dim=1 p=0.5\n0\n");
    CHECK(catch_code([&] { read_point_cloud(bad_p, "test"); }) ==
          Errc::input_parse_error);
}

TEST_CASE("distance matrix files") {
    std::istringstream good("n=2\n0 1\n1 0\n");
    const SquareMatrix d = read_distance_matrix(good, "test");
    REQUIRE(d.size() == 2);
    CHECK(d(0, 1) == 1.0);

    std::istringstream missing_row("n=3\n0 1 2\n1 0 1\n");
    CHECK(catch_code([&] { read_distance_matrix(missing_row, "test"); }) ==
          Errc::input_parse_error);
    std::istringstream ragged("n=2\n0 1\n1\n");
    CHECK(catch_code([&] { read_distance_matrix(ragged, "test"); }) ==
          Errc::input_parse_error);
    std::istringstream no_header("0 1\n1 0\n");
    CHECK(catch_code([&] { read_distance_matrix(no_header, "test"); }) ==
          Errc::input_parse_error);
}

TEST_CASE("interval union files normalize on load") {
    std::istringstream good(
        "# overlapping on purpose\n"
        "2 3\n"
        "0 1\n"
        "0.5 1.5\n");
    const IntervalUnion u = read_interval_union(good, "test");
    REQUIRE(u.intervals().size() == 2);
    CHECK(u.intervals()[0].lo == 0.0);
    CHECK(u.intervals()[0].hi == 1.5);
    CHECK(u.intervals()[1].lo == 2.0);

    std::istringstream triple("0 1 2\n");
    CHECK(catch_code([&] { read_interval_union(triple, "test"); }) ==
          Errc::input_parse_error);
    std::istringstream inverted("3 2\n");
    CHECK(catch_code([&] { read_interval_union(inverted, "test"); }) ==
          Errc::input_parse_error);
}

TEST_CASE("missing files raise parse errors") {
    CHECK(catch_code([] { load_point_cloud("/nonexistent/p.pts"); }) ==
          Errc::input_parse_error);
    CHECK(catch_code([] { load_distance_matrix("/nonexistent/d.dist"); }) ==
          Errc::input_parse_error);
    CHECK(catch_code([] { load_interval_union("/nonexistent/u.iu"); }) ==
          Errc::input_parse_error);
}
