#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>
#include <sys/wait.h>

#include "doctest.h"

#include "json.hpp"

namespace {

struct Run {
    int code = -1;
    std::string out;
};

Run run(const std::string& args) {
    std::string cmd = std::string(WDK_BINARY) + " " + args + " 2>&1";
    Run r;
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::array<char, 4096> buf{};
    while (auto n = fread(buf.data(), 1, buf.size(), pipe)) r.out.append(buf.data(), n);
    int status = pclose(pipe);
    r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

std::string temp(const std::string& name) { return (std::filesystem::temp_directory_path() / ("wdk_cli_" + name)).string(); }

std::string write(const std::string& name, const std::string& text) {
    auto path = temp(name);
    std::ofstream(path) << text;
    return path;
}

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    return {std::istreambuf_iterator<char>(in), {}};
}

}  // namespace

TEST_CASE("solve prints the side and writes a witness that verifies") {
    auto k3 = write("k3.json", R"({"vertices":3,"edges":[[0,1],[0,2],[1,2]]})");
    auto out = temp("k3_witness.json");
    auto r = run("solve --mode tree -k 3 --input " + k3 + " --output " + out);
    CHECK(r.code == 0);
    CHECK(r.out.find("side=tangle") != std::string::npos);
    CHECK(r.out.find("width_param=tw>=2") != std::string::npos);
    auto v = run("verify --witness " + out + " --input " + k3);
    CHECK(v.code == 0);

    auto j = nlohmann::json::parse(slurp(out));
    CHECK(j["schema_version"] == 1);
    auto& o = j["oriented"];
    for (std::size_t i = 0; i < o.size(); ++i) {
        auto flipped = j;
        std::swap(flipped["oriented"][i]["A"], flipped["oriented"][i]["B"]);
        if (flipped["oriented"][i] == o[i]) continue;
        auto bad = write("k3_bad.json", flipped.dump());
        auto bv = run("verify --witness " + bad + " --input " + k3);
        CHECK(bv.code != 0);
        CHECK(bv.out.find("violation") != std::string::npos);
    }
}

TEST_CASE("verify names the offending node of a tree") {
    auto p3 = write("p3.json", R"({"vertices":3,"edges":[[0,1],[1,2]]})");
    auto out = temp("p3_witness.json");
    CHECK(run("solve --mode tree -k 3 --input " + p3 + " --output " + out).code == 0);
    CHECK(run("verify --witness " + out + " --input " + p3).code == 0);
    auto r = run("verify --witness " + out + " --input " + p3 + " -k 2");
    CHECK(r.code != 0);
    CHECK(r.out.find("node") != std::string::npos);
}

TEST_CASE("branch mode reports branch-width and tangle number") {
    auto star = write("star3.json", R"({"vertices":4,"edges":[[0,1],[0,2],[0,3]]})");
    auto r = run("solve --mode branch -k 2 --input " + star);
    CHECK(r.code == 0);
    CHECK(r.out.find("side=tangle") != std::string::npos);
    CHECK(r.out.find("branch_width=1") != std::string::npos);
    CHECK(r.out.find("tangle_number=2") != std::string::npos);
    CHECK(r.out.find("note:") != std::string::npos);
}

TEST_CASE("matroid mode") {
    auto mk3 = write("mk3.json", R"({"type":"graphic","graph":{"vertices":3,"edges":[[0,1],[0,2],[1,2]]}})");
    auto r = run("solve --mode matroid-tree -k 3 --input " + mk3);
    CHECK(r.code == 0);
    CHECK(r.out.find("side=tree") != std::string::npos);
    auto lin = write("lin.json", R"({"type":"linear_gf2","rows":["110","011"]})");
    CHECK(run("solve --mode matroid-tree -k 2 --input " + lin).code == 0);
}

TEST_CASE("DIMACS input") {
    auto d = write("c4.gr", "c four-cycle\np edge 4 4\ne 1 2\ne 2 3\ne 3 4\ne 4 1\n");
    auto r = run("solve --mode path -k 3 --input " + d);
    CHECK(r.code == 0);
    CHECK(r.out.find("side=tangle") != std::string::npos);
}

TEST_CASE("custom families") {
    auto k2 = write("k2.json", R"({"vertices":2,"edges":[[0,1]]})");
    auto fam = write("fam.json", R"({"stars":[[{"A":[0,1],"B":[]}],[{"A":[],"B":[0,1]}]]})");
    auto r = run("solve --mode custom -k 1 --input " + k2 + " --family " + fam);
    CHECK(r.code == 0);
    CHECK(r.out.find("side=tree") != std::string::npos);
    auto outside = write("fam_bad.json", R"({"stars":[[{"A":[0],"B":[0,1]}]]})");
    CHECK(run("solve --mode custom -k 1 --input " + k2 + " --family " + outside).code == 2);
}

TEST_CASE("exit codes") {
    auto bad = write("bad.json", R"({"vertices":2,"edges":[[0,5]]})");
    CHECK(run("solve --mode tree -k 2 --input " + bad).code == 2);
    CHECK(run("solve --mode tree -k 2 --input " + temp("missing.json")).code == 2);
    auto huge = write("huge.json", R"({"vertices":20,"edges":[]})");
    CHECK(run("solve --mode tree -k 2 --input " + huge).code == 3);
    auto k2 = write("k2b.json", R"({"vertices":2,"edges":[[0,1]]})");
    CHECK(run("solve --mode nonsense -k 2 --input " + k2).code == 2);
}

TEST_CASE("suite output is reproducible") {
    auto a = temp("suite_a.csv"), b = temp("suite_b.csv"), svg = temp("suite.svg"), jl = temp("suite.jsonl");
    auto r1 = run("suite --modes tree,branch --max-n 3 --random 2 --seed 7 --csv " + a + " --jsonl " + jl + " --svg " + svg);
    auto r2 = run("suite --modes tree,branch --max-n 3 --random 2 --seed 7 --jobs 1 --csv " + b);
    CHECK(r1.code == 0);
    CHECK(r2.code == 0);
    CHECK(slurp(a) == slurp(b));
    CHECK(slurp(a).rfind("instance,mode,k,side,value,verified,ms\n", 0) == 0);
    CHECK(slurp(svg).find("<svg") != std::string::npos);
    CHECK(slurp(jl).find("\"verified\":true") != std::string::npos);
}
