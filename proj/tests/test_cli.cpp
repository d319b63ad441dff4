#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>
#include <sstream>

#include "bandet/band.hpp"
#include "bandet/oracle.hpp"
#include "cli.hpp"

using bandet::cli::run;

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result invoke(std::vector<std::string> args) {
    std::ostringstream out;
    std::ostringstream err;
    const int code = run(args, out, err);
    return {code, out.str(), err.str()};
}

std::string line_with(const std::string& text, const std::string& prefix) {
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        if (line.rfind(prefix, 0) == 0) {
            return line;
        }
    }
    return {};
}

std::string last_line(const std::string& text) {
    const auto end = text.find_last_not_of('\n');
    const auto start = text.rfind('\n', end);
    return text.substr(start == std::string::npos ? 0 : start + 1, end - (start == std::string::npos ? 0 : start + 1) + 1);
}

}  // namespace

TEST_CASE("det") {
    auto r = invoke({"det", "--n", "10", "--k", "2", "--l", "2", "--a", "1", "--b", "0"});
    CHECK(r.code == 0);
    CHECK(line_with(r.out, "det:") == "det: 3");
    CHECK(line_with(r.out, "method:") == "method: closed");
    CHECK_FALSE(line_with(r.out, "case:").empty());

    r = invoke({"det", "--n", "5", "--k", "5", "--l", "1", "--a", "1", "--b", "0"});
    CHECK(line_with(r.out, "det:") == "det: 0");
    CHECK(line_with(r.out, "factored:") == "factored: (-1)^4·0");

    const auto closed = invoke({"det", "--n", "8", "--k", "3", "--l", "2", "--a", "1", "--b", "2"});
    const auto bareiss = invoke({"det", "--n", "8", "--k", "3", "--l", "2", "--a", "1", "--b", "2", "--method", "bareiss"});
    CHECK(bareiss.code == 0);
    CHECK(line_with(closed.out, "det:") == line_with(bareiss.out, "det:"));
    CHECK(line_with(bareiss.out, "method:") == "method: bareiss");

    r = invoke({"det", "--n", "7", "--k", "3", "--method", "recurrence", "--a", "2", "--b", "5"});
    CHECK(r.code == 0);
    CHECK(line_with(r.out, "det:") == "det: " + bandet::det_case1(7, 3, 2, 5).to_string());

    r = invoke({"det", "--n", "4", "--k", "4", "--a", "1", "--b", "b", "--method", "laplace"});
    CHECK(line_with(r.out, "det:") == "det: b^4-3b^3+3b^2-b");
    CHECK(line_with(r.out, "factored:") == "factored: (b-1)^3·b");

    r = invoke({"det", "--n", "6", "--k", "1", "--l", "3"});
    CHECK(r.code == 0);
    CHECK_FALSE(line_with(r.out, "normalized:").empty());
}

TEST_CASE("det errors") {
    CHECK(invoke({"det", "--n", "3", "--k", "2", "--a", "1", "--b", "1"}).code == 2);
    CHECK(invoke({"det", "--n", "0", "--k", "2"}).code == 2);
    CHECK(invoke({"det", "--n", "3", "--k", "2", "--bogus"}).code == 2);
    CHECK(invoke({"det", "--n", "3", "--k", "2", "--a", "x"}).code == 2);
    CHECK(invoke({"det", "--n", "5", "--k", "2", "--l", "2", "--method", "recurrence"}).code == 2);
    CHECK(invoke({"det", "--n", "3", "--k", "2", "--a", "1", "--b", "b", "--method", "bareiss"}).code == 2);
    const auto r = invoke({"det", "--n", "13", "--k", "2", "--method", "laplace"});
    CHECK(r.code == 3);
    CHECK(r.err.find("exceeds limit") != std::string::npos);
    CHECK(invoke({}).code == 2);
    CHECK(invoke({"det", "--n", "3", "--k", "1", "table"}).code == 2);
    CHECK(invoke({"--help"}).code == 0);
}

TEST_CASE("table final rows") {
    CHECK(last_line(invoke({"table", "menage-a", "10"}).out) == "10,488592,-4,244294,244298");
    CHECK(last_line(invoke({"table", "menage-b", "10"}).out) == "10,159737,3,79870,79867");
    CHECK(last_line(invoke({"table", "excedance-k2", "10"}).out) == "10,1013,9,511,502");
    CHECK(invoke({"table", "menage-a", "3"}).out == "n,per,det,even,odd\n1,0,0,0,0\n2,0,0,0,0\n3,1,1,1,0\n");
    CHECK(last_line(invoke({"table", "menage-b", "10", "--format", "json"}).out) ==
          R"({"det":"3","even":"79870","n":10,"odd":"79867","per":"159737"})");
    CHECK(invoke({"table", "menage-c", "3"}).code == 2);
}

TEST_CASE("table output is deterministic") {
    for (const char* family : {"menage-a", "menage-b", "excedance-k2"}) {
        CHECK(invoke({"table", family, "9"}).out == invoke({"table", family, "9"}).out);
        CHECK(invoke({"table", family, "9", "--format", "json"}).out ==
              invoke({"table", family, "9", "--format", "json"}).out);
    }
}

TEST_CASE("table respects size guards from the environment") {
    ::setenv("BANDET_MAX_RYSER", "8", 1);
    const auto r = invoke({"table", "menage-a", "10"});
    ::unsetenv("BANDET_MAX_RYSER");
    CHECK(r.code == 3);
}

TEST_CASE("perm") {
    auto r = invoke({"perm", "--family", "menage-b", "--n", "7", "--brute"});
    CHECK(r.code == 0);
    CHECK(line_with(r.out, "even:") == "even: 104");
    CHECK(line_with(r.out, "odd:") == "odd: 102");
    CHECK(line_with(r.out, "enumeration:") == "enumeration: agrees");

    r = invoke({"perm", "--matrix", "1,1,1;1,1,1;1,1,1"});
    CHECK(line_with(r.out, "even:") == "even: 3");
    CHECK(line_with(r.out, "odd:") == "odd: 3");

    r = invoke({"perm", "--matrix", "0,1,1,1;0,0,1,1;1,0,0,1;1,1,0,0"});
    CHECK(line_with(r.out, "det:") == "det: -1 (closed_form)");

    CHECK(invoke({"perm", "--matrix", "1,2;0,1"}).code == 2);
    CHECK(invoke({"perm", "--matrix", "1,0;0"}).code == 2);
    CHECK(invoke({"perm"}).code == 2);
    CHECK(invoke({"perm", "--family", "menage-a", "--n", "12", "--brute"}).code == 3);
}

TEST_CASE("census") {
    auto r = invoke({"census", "--n", "4", "--k", "2", "--list"});
    CHECK(r.code == 0);
    CHECK(r.out ==
          "1423 even\n2143 even\n2413 odd\n3124 even\n3142 odd\n3412 even\n3421 odd\n4132 even\n4213 even\n"
          "4312 odd\n4321 even\n");
    r = invoke({"census", "--n", "4"});
    CHECK(r.out == "n,k,per,det,even,odd\n4,1,1,-1,0,1\n4,2,11,3,7,4\n4,3,11,-3,4,7\n4,4,1,1,1,0\n");
    r = invoke({"census", "--n", "10", "--k", "2", "--format", "json"});
    CHECK(r.out == "{\"det\":\"9\",\"even\":\"511\",\"k\":2,\"n\":10,\"odd\":\"502\",\"per\":\"1013\"}\n");
    CHECK(invoke({"census", "--n", "4", "--list"}).code == 2);
}

TEST_CASE("check") {
    auto r = invoke({"check", "--level", "quick"});
    CHECK(r.code == 0);
    CHECK(r.out.find("FAIL") == std::string::npos);
    CHECK(r.out.find("cases passed") != std::string::npos);

    r = invoke({"check", "--level", "full"});
    CHECK(r.code == 0);

    r = invoke({"check", "--inject-fault", "sign"});
    CHECK(r.code == 1);
    CHECK(r.out.find("FAIL closed form vs laplace: n=3 k=2 l=2") != std::string::npos);
    CHECK(invoke({"check", "--level", "medium"}).code == 2);
}

TEST_CASE("bench") {
    auto r = invoke({"bench", "1"});
    CHECK(r.code == 0);
    CHECK(r.out.find("1,") != std::string::npos);
    CHECK(r.out.find(",yes") != std::string::npos);
    r = invoke({"bench", "8,16,32"});
    CHECK(r.code == 0);
    CHECK(r.out.find(",no") == std::string::npos);
    CHECK(invoke({"bench", "20", "--method", "laplace"}).code == 3);
    CHECK(invoke({"bench", "8", "--a", "1", "--b", "b"}).code == 2);
}
