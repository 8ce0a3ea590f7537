#include <doctest.h>

#include <limits>
#include <string>
#include <vector>

#include "mgcf/dataset.hpp"
#include "mgcf/error.hpp"
#include "support.hpp"

using namespace mgcf;

namespace {

LabeledDataset load_from_text(const support::TempDir& dir, const std::string& name,
                              const std::string& text,
                              const std::optional<LabelMap>& map = std::nullopt) {
    const auto path = dir.file(name);
    support::spit(path, text);
    return load_ucr(path, map);
}

} // namespace

TEST_CASE("loader parses rows and applies an explicit label map") {
    support::TempDir dir;
    const auto ds = load_from_text(dir, "two_TRAIN.tsv",
                                   "1 0.0 0.0\n-1 1.0 1.0\n",
                                   LabelMap{{-1.0, 0}, {1.0, 1}});
    CHECK(ds.size() == 2);
    CHECK(ds.length() == 2);
    CHECK(ds.label(0) == 1);
    CHECK(ds.label(1) == 0);
    CHECK(ds.series(0).values == std::vector<double>{0.0, 0.0});
    CHECK(ds.series(1).values == std::vector<double>{1.0, 1.0});
    CHECK(ds.name() == "two");
}

TEST_CASE("loader maps raw labels ascending by default") {
    support::TempDir dir;
    const auto ds = load_from_text(dir, "raw.tsv", "5 1 2 3\n-5 4 5 6\n5 7 8 9\n");
    CHECK(ds.label(0) == 1);
    CHECK(ds.label(1) == 0);
    CHECK(ds.label(2) == 1);
}

TEST_CASE("loader accepts tabs, extra spaces, CRLF and blank lines") {
    support::TempDir dir;
    const auto ds =
        load_from_text(dir, "messy.tsv", "0\t1.5\t-2.5\r\n\n1  3.0   4.0\r\n\n");
    CHECK(ds.size() == 2);
    CHECK(ds.length() == 2);
    CHECK(ds.series(0).values == std::vector<double>{1.5, -2.5});
}

TEST_CASE("loader names the line of a ragged row") {
    support::TempDir dir;
    const auto path = dir.file("ragged.tsv");
    support::spit(path, "0 1 2 3\n1 1 2\n");
    CHECK_THROWS_WITH_AS(load_ucr(path), doctest::Contains("line 2"), FormatError);
}

TEST_CASE("loader names the line of an unparseable token") {
    support::TempDir dir;
    const auto path = dir.file("bad.tsv");
    support::spit(path, "0 1 2\n1 x 2\n");
    CHECK_THROWS_WITH_AS(load_ucr(path), doctest::Contains("line 2"), FormatError);
}

TEST_CASE("loader rejects more than two raw labels") {
    support::TempDir dir;
    const auto path = dir.file("three.tsv");
    support::spit(path, "0 1 2\n1 1 2\n2 1 2\n");
    CHECK_THROWS_AS(load_ucr(path), FormatError);
}

TEST_CASE("loader rejects a missing file and non-finite values") {
    support::TempDir dir;
    CHECK_THROWS_AS(load_ucr(dir.file("absent.tsv")), FormatError);
    const auto path = dir.file("inf.tsv");
    support::spit(path, "0 1 2\n1 inf 2\n");
    CHECK_THROWS_AS(load_ucr(path), FormatError);
}

TEST_CASE("loader rejects a label map missing a raw label") {
    support::TempDir dir;
    const auto path = dir.file("map.tsv");
    support::spit(path, "1 1 2\n2 1 2\n");
    CHECK_THROWS_AS(load_ucr(path, LabelMap{{1.0, 0}, {3.0, 1}}), FormatError);
}

TEST_CASE("dataset construction validates its invariants") {
    const TimeSeries a{{1.0, 2.0}};
    const TimeSeries b{{3.0, 4.0}};
    const TimeSeries longer{{1.0, 2.0, 3.0}};

    CHECK_THROWS_AS(LabeledDataset({a}, {0}, "one"), FormatError);
    CHECK_THROWS_AS(LabeledDataset({a, b}, {0}, "shortlabels"), FormatError);
    CHECK_THROWS_AS(LabeledDataset({a, longer}, {0, 1}, "ragged"), FormatError);
    CHECK_THROWS_AS(LabeledDataset({a, b}, {0, 2}, "badlabel"), FormatError);
    CHECK_THROWS_AS(LabeledDataset({a, b}, {1, 1}, "oneclass"), FormatError);
    const TimeSeries nan{{1.0, std::numeric_limits<double>::quiet_NaN()}};
    CHECK_THROWS_AS(LabeledDataset({a, nan}, {0, 1}, "nan"), FormatError);
    CHECK_NOTHROW(LabeledDataset({a, b}, {0, 1}, "ok"));
}

TEST_CASE("class_indices filters ascending") {
    const LabeledDataset ds({{{1.0}}, {{2.0}}, {{3.0}}}, {0, 1, 0}, "tri");
    CHECK(ds.class_indices(0) == std::vector<std::size_t>{0, 2});
    CHECK(ds.class_indices(1) == std::vector<std::size_t>{1});
    CHECK(ds.class_count(0) == 2);
    CHECK(ds.class_count(1) == 1);
}

TEST_CASE("write then reload reproduces every value bit for bit") {
    support::TempDir dir;
    support::TestRng rng(411);
    std::vector<TimeSeries> series;
    std::vector<int> labels;
    for (std::size_t i = 0; i < 6; ++i) {
        std::vector<double> v = rng.series(17, -1e6, 1e6);
        v[0] = 0.1;
        v[1] = -1.0 / 3.0;
        v[2] = 1e-300;
        series.push_back({std::move(v)});
        labels.push_back(static_cast<int>(i & 1));
    }
    const LabeledDataset ds(series, labels, "roundtrip");

    const auto path = dir.file("roundtrip_TRAIN.tsv");
    write_ucr(ds, path);
    const auto back = load_ucr(path);
    REQUIRE(back.size() == ds.size());
    CHECK(back.labels() == ds.labels());
    for (std::size_t i = 0; i < ds.size(); ++i) {
        CHECK(back.series(i).values == ds.series(i).values);
    }

    const auto again = dir.file("again_TRAIN.tsv");
    write_ucr(back, again);
    CHECK(support::slurp(path) == support::slurp(again));
}

TEST_CASE("dataset name strips the partition suffix") {
    support::TempDir dir;
    CHECK(load_from_text(dir, "Foo_TRAIN.tsv", "0 1 2\n1 3 4\n").name() == "Foo");
    CHECK(load_from_text(dir, "Foo_TEST.tsv", "0 1 2\n1 3 4\n").name() == "Foo");
    CHECK(load_from_text(dir, "Bar.tsv", "0 1 2\n1 3 4\n").name() == "Bar");
}

TEST_CASE("json dump carries the dataset shape") {
    const LabeledDataset ds({{{1.0, 2.0}}, {{3.0, 4.0}}}, {0, 1}, "tiny");
    const std::string j = dataset_to_json(ds);
    CHECK(j.find("\"name\"") != std::string::npos);
    CHECK(j.find("\"tiny\"") != std::string::npos);
    CHECK(j.find("\"n\"") != std::string::npos);
    CHECK(j.find("\"m\"") != std::string::npos);
    CHECK(j.find("\"labels\"") != std::string::npos);
    CHECK(j.find("\"series\"") != std::string::npos);
}
