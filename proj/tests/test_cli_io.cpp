#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <charconv>
#include <sstream>

#include "doctest.h"
#include "wavestab/cli.hpp"
#include "wavestab/report.hpp"

using namespace wavestab;

TEST_CASE("parse_key_value_file: comments, blanks, whitespace") {
    std::istringstream in(
        "# run setup\n"
        "scheme = ftbs\n"
        "\n"
        "courant=0.9   # trailing comment\n"
        "  cells = 200\n"
        "steps = 400\n");
    const auto kv = cli::parse_key_value_file(in);
    CHECK(kv.size() == 4);
    CHECK(kv.at("scheme") == "ftbs");
    CHECK(kv.at("courant") == "0.9");
    CHECK(kv.at("cells") == "200");
    CHECK(kv.at("steps") == "400");
}

TEST_CASE("parse_key_value_file: empty input is a valid empty configuration") {
    std::istringstream in("");
    CHECK(cli::parse_key_value_file(in).empty());
    std::istringstream comments("# nothing here\n\n");
    CHECK(cli::parse_key_value_file(comments).empty());
}

TEST_CASE("parse_key_value_file: unknown keys are named in the error") {
    std::istringstream in("schem = ftbs\n");
    try {
        cli::parse_key_value_file(in);
        FAIL("expected UsageError");
    } catch (const cli::UsageError& e) {
        CHECK(std::string(e.what()).find("schem") != std::string::npos);
    }
}

TEST_CASE("parse_key_value_file: malformed lines report the line number") {
    std::istringstream in("scheme = lax\nnot a pair\n");
    try {
        cli::parse_key_value_file(in);
        FAIL("expected UsageError");
    } catch (const cli::UsageError& e) {
        CHECK(std::string(e.what()).find("line 2") != std::string::npos);
    }
}

TEST_CASE("config_file_keys covers the documented set") {
    const auto& keys = cli::config_file_keys();
    CHECK(keys.size() == 11);
    for (const char* k : {"scheme", "courant", "a", "dx", "cells", "steps", "ic", "ic_mode",
                          "ic_seed", "out", "format"})
        CHECK(std::find(keys.begin(), keys.end(), k) != keys.end());
}

TEST_CASE("format_double_csv round-trips") {
    for (double v : {1.0, 0.1, -2.75, 1.1180339887498949, 1e-13, 12345.678901234567}) {
        const std::string s = format_double_csv(v);
        double back = 0.0;
        std::from_chars(s.data(), s.data() + s.size(), back);
        CHECK(back == v);
    }
    CHECK(format_double_csv(1.0) == "1");
}

TEST_CASE("write_report: CSV layout is header + rows with LF endings") {
    Table t;
    t.columns = {"scheme", "courant", "verdict"};
    t.rows.push_back({std::string("lax"), 0.5, std::string("STABLE")});
    t.rows.push_back({std::string("ftcs"), 0.5, std::string("UNSTABLE")});
    std::ostringstream out;
    write_report(t, out, ReportFormat::Csv);
    CHECK(out.str() ==
          "scheme,courant,verdict\n"
          "lax,0.5,STABLE\n"
          "ftcs,0.5,UNSTABLE\n");
}

TEST_CASE("write_report: cells containing commas are quoted") {
    Table t;
    t.columns = {"corner"};
    t.rows.push_back({std::string("xi1=-1, xi2=+1")});
    std::ostringstream out;
    write_report(t, out, ReportFormat::Csv);
    CHECK(out.str() == "corner\n\"xi1=-1, xi2=+1\"\n");
}

TEST_CASE("write_report: empty row list emits a header-only CSV") {
    Table t;
    t.columns = {"a", "b"};
    std::ostringstream out;
    write_report(t, out, ReportFormat::Csv);
    CHECK(out.str() == "a,b\n");
}

TEST_CASE("write_report: aligned table pads columns") {
    Table t;
    t.columns = {"scheme", "c"};
    t.rows.push_back({std::string("lax"), static_cast<std::int64_t>(1)});
    t.rows.push_back({std::string("ftbs"), static_cast<std::int64_t>(2)});
    std::ostringstream out;
    write_report(t, out, ReportFormat::AlignedTable);
    CHECK(out.str() ==
          "scheme  c\n"
          "lax     1\n"
          "ftbs    2\n");
}

TEST_CASE("write_report rejects ragged rows") {
    Table t;
    t.columns = {"a", "b"};
    t.rows.push_back({std::string("only one")});
    std::ostringstream out;
    CHECK_THROWS_AS(write_report(t, out, ReportFormat::Csv), std::runtime_error);
}

TEST_CASE("emit_report: unwritable destination") {
    Table t;
    t.columns = {"a"};
    ReportSink sink;
    sink.out_path = "/nonexistent-dir/report.csv";
    sink.format = ReportFormat::Csv;
    CHECK_THROWS_AS(emit_report(t, sink), std::runtime_error);
}

TEST_CASE("run_cli exit codes: usage errors are 1, help is 0") {
    auto run = [](std::vector<const char*> args) {
        args.insert(args.begin(), "wavestab");
        return cli::run_cli(static_cast<int>(args.size()), args.data());
    };
    CHECK(run({"no-such-command"}) == 1);
    CHECK(run({"analyze"}) == 1);                      // missing scheme/courant
    CHECK(run({"analyze", "--scheme", "lax"}) == 1);   // missing courant
    CHECK(run({"analyze", "--schem", "lax"}) == 1);    // unknown flag
    CHECK(run({"analyze", "--scheme", "lax", "--courant", "abc"}) == 1);
    CHECK(run({"help"}) == 0);
}
