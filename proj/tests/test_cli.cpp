#include <gtest/gtest.h>

#include <sstream>

#include "cli.hpp"

using chernum::Json;

namespace {

struct Outcome {
    int status;
    std::string out;
    std::string err;
};

Outcome run(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int status = chernum::cli::run(args, out, err);
    return {status, out.str(), err.str()};
}

}  // namespace

TEST(Cli, Partitions) {
    const auto r = run({"partitions", "4"});
    EXPECT_EQ(r.status, 0);
    EXPECT_EQ(r.out, "[4]\n[3,1]\n[2,2]\n[2,1,1]\n[1,1,1,1]\n");
    EXPECT_EQ(run({"partitions", "0"}).out, "[]\n");
    EXPECT_EQ(run({"partitions", "3", "--json"}).out, "[[3],[2,1],[1,1,1]]\n");
    EXPECT_EQ(run({"partitions", "-1"}).status, 2);
}

TEST(Cli, LGenusJson) {
    const auto r = run({"genus", "--kind", "l", "--n", "4", "--json"});
    EXPECT_EQ(r.status, 0);
    EXPECT_EQ(r.out, R"({"n":4,"coeffs":{"[4]":"14/45","[3,1]":"-14/45","[2,2]":"1/15","[2,1,1]":"4/45","[1,1,1,1]":"-1/45"}})"
                     "\n");
    EXPECT_EQ(run({"genus", "--kind", "l", "--n", "4", "--format", "json"}).out, r.out);
}

TEST(Cli, GenusVariants) {
    EXPECT_EQ(run({"genus", "--kind", "todd", "--n", "3", "--json"}).out, R"({"n":3,"coeffs":{"[2,1]":"1/24"}})"
                                                                          "\n");
    EXPECT_EQ(run({"genus", "--kind", "chi-y", "--n", "2", "--p", "1", "--json"}).out,
              R"({"n":2,"coeffs":{"[2]":"-5/6","[1,1]":"1/6"}})"
              "\n");
    EXPECT_EQ(run({"genus", "--kind", "chi-y", "--n", "2", "--y", "-1", "--json"}).out,
              R"({"n":2,"coeffs":{"[2]":"1"}})"
              "\n");
    const auto all = run({"genus", "--kind", "chi-y", "--n", "3", "--json"});
    EXPECT_EQ(all.status, 0);
    EXPECT_EQ(Json::parse(all.out).at("components").size(), 4u);
}

TEST(Cli, GenusUsageErrors) {
    auto r = run({"genus", "--kind", "chi-y", "--n", "3", "--p", "4"});
    EXPECT_EQ(r.status, 2);
    EXPECT_NE(r.err.find("p out of range"), std::string::npos);
    EXPECT_EQ(run({"genus", "--kind", "l", "--n", "3"}).status, 2);
    EXPECT_EQ(run({"genus", "--kind", "todd", "--n", "2", "--p", "1"}).status, 2);
    EXPECT_EQ(run({"genus", "--kind", "chi-y", "--n", "2", "--p", "1", "--y", "2"}).status, 2);
    EXPECT_EQ(run({"genus", "--kind", "chi-y", "--n", "2", "--y", "1/0"}).status, 2);
    EXPECT_EQ(run({"genus", "--kind", "chi-y", "--n", "2", "--y", "0.5"}).status, 2);
    EXPECT_EQ(run({"genus", "--kind", "a-hat", "--n", "2"}).status, 2);
    EXPECT_EQ(run({"genus", "--kind", "todd", "--n", "0"}).status, 2);
}

TEST(Cli, Intersect) {
    auto r = run({"intersect", "--n", "5"});
    EXPECT_EQ(r.status, 2);
    EXPECT_NE(r.err.find("intersection requires even complex dimension"), std::string::npos);
    EXPECT_TRUE(r.out.empty());
    r = run({"intersect", "--n", "4"});
    EXPECT_EQ(r.status, 0);
    EXPECT_NE(r.out.find("dimension 2 of 5"), std::string::npos);
    EXPECT_NE(r.out.find("equals span{c_4, L_2}: yes"), std::string::npos);
    const Json j = Json::parse(run({"intersect", "--n", "6", "--json"}).out);
    EXPECT_EQ(j.at("ambient"), 11);
    EXPECT_EQ(j.at("basis").size(), 2u);
}

TEST(Cli, Spaces) {
    EXPECT_EQ(Json::parse(run({"space", "--kind", "EP", "--n", "6", "--json"}).out).at("basis").size(), 4u);
    EXPECT_EQ(Json::parse(run({"space", "--kind", "CHI", "--n", "8", "--json"}).out).at("basis").size(), 5u);
    const auto csv = run({"space", "--kind", "HT", "--n", "4", "--format", "csv"});
    EXPECT_EQ(csv.status, 0);
    EXPECT_EQ(csv.out.substr(0, csv.out.find('\n')), R"("[4]","[3,1]","[2,2]","[2,1,1]","[1,1,1,1]")");
    const auto ep = run({"space", "--kind", "EP", "--n", "3"});
    EXPECT_EQ(ep.status, 2);
    EXPECT_NE(ep.err.find("EP requires even complex dimension"), std::string::npos);
}

TEST(Cli, ChernNumbers) {
    const auto r = run({"chern-numbers", "--manifold", "p1xP1", "--json"});
    EXPECT_EQ(r.status, 0);
    EXPECT_EQ(r.out, R"({"manifold":"P1xP1","n":2,"chern_numbers":{"[2]":"4","[1,1]":"8"}})"
                     "\n");
    const auto bad = run({"chern-numbers", "--manifold", "P2xx"});
    EXPECT_EQ(bad.status, 2);
    EXPECT_NE(bad.err.find("malformed manifold expression"), std::string::npos);
}

TEST(Cli, UsageErrors) {
    EXPECT_EQ(run({}).status, 2);
    EXPECT_EQ(run({"frobnicate"}).status, 2);
    EXPECT_EQ(run({"partitions", "4", "--format", "xml"}).status, 2);
    EXPECT_EQ(run({"verify", "--max-n", "1"}).status, 2);
    EXPECT_EQ(run({"verify", "--format", "csv"}).status, 2);
    EXPECT_EQ(run({"--help"}).status, 0);
}

TEST(Cli, VerifyJsonLines) {
    const auto a = run({"verify", "--max-n", "4", "--json"});
    EXPECT_EQ(a.status, 0);
    EXPECT_EQ(a.out, run({"verify", "--max-n", "4", "--json"}).out);
    std::istringstream lines(a.out);
    std::string line, last;
    while (std::getline(lines, line)) {
        const Json j = Json::parse(line);
        last = line;
    }
    const Json summary = Json::parse(last);
    EXPECT_TRUE(summary.at("ok").get<bool>());
    EXPECT_EQ(summary.at("failed"), 0);
}

TEST(Cli, JsonOutputsRoundTrip) {
    const auto v = chernum::chern_vector_from_json(Json::parse(run({"genus", "--kind", "todd", "--n", "4", "--json"}).out));
    EXPECT_EQ(v, chernum::todd_vector(4));
    const auto s = chernum::subspace_from_json(Json::parse(run({"space", "--kind", "HT", "--n", "6", "--json"}).out));
    EXPECT_TRUE(chernum::subspace_equal(s, chernum::subspace_HT(6)));
}
