#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <fstream>
#include <string>

#include <nlohmann/json.hpp>

using json = nlohmann::json;

namespace {

struct RunResult {
    int exit_code = -1;
    std::string out;
};

RunResult run(const std::string& args) {
    std::string cmd = std::string(NFQ_BIN) + " " + args + " 2>/dev/null";
    std::array<char, 4096> buf{};
    RunResult r;
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::size_t n;
    while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), n);
    int status = pclose(pipe);
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

std::string write_temp(const std::string& name, const std::string& content) {
    std::string path = "/tmp/nfq_test_" + name;
    std::ofstream out(path);
    out << content;
    return path;
}

// Minimal structural validator for the subset of JSON Schema the published
// schemas use: type, properties, required, items.
bool type_matches(const json& schema_type, const json& value) {
    std::string t = schema_type.get<std::string>();
    if (t == "object") return value.is_object();
    if (t == "array") return value.is_array();
    if (t == "string") return value.is_string();
    if (t == "integer") return value.is_number_integer();
    if (t == "boolean") return value.is_boolean();
    if (t == "number") return value.is_number();
    return false;
}

bool validates(const json& schema, const json& value) {
    if (schema.contains("type") && !type_matches(schema["type"], value)) return false;
    if (value.is_object()) {
        if (schema.contains("required"))
            for (const auto& key : schema["required"])
                if (!value.contains(key.get<std::string>())) return false;
        if (schema.contains("properties"))
            for (auto& [key, sub] : schema["properties"].items())
                if (value.contains(key) && !validates(sub, value[key])) return false;
    }
    if (value.is_array() && schema.contains("items"))
        for (const auto& item : value)
            if (!validates(schema["items"], item)) return false;
    return true;
}

json load_schema(const std::string& name) {
    std::ifstream in(std::string(NF_SCHEMA_DIR) + "/" + name + ".json");
    REQUIRE(in.good());
    return json::parse(in);
}

void check_schema(const std::string& verb, const std::string& output) {
    json parsed = json::parse(output);
    CHECK(validates(load_schema(verb), parsed));
}

}  // namespace

TEST_CASE("frobdim command") {
    auto r = run("frobdim builtin:truncpoly:4");
    CHECK(r.exit_code == 0);
    CHECK(r.out == "dim_k=5 frobdim=5\n");

    auto cyc = run("frobdim builtin:cycle:3,3");
    CHECK(cyc.exit_code == 0);
    CHECK(cyc.out == "dim_k=18 frobdim=20\n");

    auto a1 = run("frobdim builtin:An:1");
    CHECK(a1.exit_code == 0);
    CHECK(a1.out == "dim_k=1 frobdim=1\n");

    auto j = run("--format json frobdim builtin:matrix:2");
    CHECK(j.exit_code == 0);
    check_schema("frobdim", j.out);
    CHECK(json::parse(j.out)["frobdim"] == 4);
}

TEST_CASE("basis command") {
    auto r = run("basis builtin:An:3");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("Delta(e2) = a2⊗a1") != std::string::npos);

    auto j = run("--format json basis builtin:truncpoly:2");
    CHECK(j.exit_code == 0);
    check_schema("basis", j.out);
    auto parsed = json::parse(j.out);
    CHECK(parsed["frobdim"] == 3);
    CHECK(parsed["basis"].size() == 3);

    // deterministic byte-for-byte output
    auto again = run("--format json basis builtin:truncpoly:2");
    CHECK(again.out == j.out);
}

TEST_CASE("counit command") {
    auto yes = run("counit builtin:truncpoly:3 --delta 0");
    CHECK(yes.exit_code == 0);
    CHECK(yes.out.find("counit exists") != std::string::npos);
    CHECK(yes.out.find("eps(x^3) = 1") != std::string::npos);

    auto no = run("counit builtin:truncpoly:3 --delta 1");
    CHECK(no.exit_code == 0);
    CHECK(no.out.find("no counit") != std::string::npos);

    // explicit coefficient matrix: the identity-pattern coproduct on 2x2
    // matrices (E_11 basis index 0, E_12 1, E_21 2, E_22 3)
    std::string path = write_temp("delta.json", R"({"delta": [
        [0, 0, "1"], [1, 2, "1"], [2, 1, "1"], [3, 3, "1"]]})");
    auto trace = run("--format json counit builtin:matrix:2 --delta-file " + path);
    CHECK(trace.exit_code == 0);
    check_schema("counit", trace.out);
    auto parsed = json::parse(trace.out);
    CHECK(parsed["exists"] == true);

    auto oob = run("counit builtin:truncpoly:2 --delta 9");
    CHECK(oob.exit_code == 2);
}

TEST_CASE("gentle command") {
    auto r = run("gentle builtin:An:4 --verify");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("d = 1") != std::string::npos);
    CHECK(r.out.find("(agree)") != std::string::npos);

    auto j = run("--format json gentle builtin:An:4 --verify");
    CHECK(j.exit_code == 0);
    check_schema("gentle", j.out);
    auto parsed = json::parse(j.out);
    CHECK(parsed["d"] == 1);
    CHECK(parsed["verify"]["agree"] == true);

    // a line with the composition through the middle vertex removed
    std::string mid = write_temp(
        "mid22.quiver",
        "vertices 5\na1: 1->2\na2: 2->3\nb1: 3->4\nb2: 4->5\nrel a2.b1\n");
    auto mid_run = run("gentle file:" + mid + " --verify");
    CHECK(mid_run.exit_code == 0);
    CHECK(mid_run.out.find("d = 6") != std::string::npos);
    CHECK(mid_run.out.find("(agree)") != std::string::npos);

    // two strands crossing at one vertex
    std::string cross = write_temp(
        "cross.quiver",
        "vertices 5\na1: 1->2\na2: 2->3\nb1: 4->2\nb2: 2->5\nrel b1.a2\nrel a1.b2\n");
    auto cross_run = run("gentle file:" + cross + " --verify");
    CHECK(cross_run.exit_code == 0);
    CHECK(cross_run.out.find("d = 2") != std::string::npos);

    // a non-gentle input is a validation failure
    std::string fan = write_temp("fan.quiver", "vertices 4\na: 1->2\nb: 1->3\nc: 1->4\n");
    auto bad = run("gentle file:" + fan);
    CHECK(bad.exit_code == 2);

    // cyclic gentle presentations are outside the algorithm's domain
    auto cyc = run("gentle builtin:cycle:2,2");
    CHECK(cyc.exit_code == 2);
}

TEST_CASE("census command") {
    auto r = run("--format json census --max-vertices 3 --max-arrows 3");
    CHECK(r.exit_code == 0);
    check_schema("census", r.out);
    auto parsed = json::parse(r.out);
    CHECK(parsed["holds"] == true);

    auto empty = run("census --max-vertices 0 --max-arrows 0");
    CHECK(empty.exit_code == 0);
}

TEST_CASE("validate command") {
    std::string good = write_temp("good.quiver",
                                  "vertices 3\na: 1->2\nb: 2->3\nrel a.b\n");
    auto r = run("--format json validate file:" + good);
    CHECK(r.exit_code == 0);
    check_schema("validate", r.out);
    auto parsed = json::parse(r.out);
    CHECK(parsed["admissible"] == true);
    CHECK(parsed["gentle"] == true);
    CHECK(parsed["dim_k"] == 5);

    std::string loop = write_temp("loop.quiver", "vertices 1\nx: 1->1\nbound 3\n");
    auto bad = run("validate file:" + loop);
    CHECK(bad.exit_code == 2);

    std::string syntax = write_temp("syntax.quiver", "vertices 3\nrel a\n");
    auto parse_fail = run("validate file:" + syntax);
    CHECK(parse_fail.exit_code == 1);
}

TEST_CASE("construct commands") {
    auto quot = run("construct quotient builtin:An:3 --ideal a1.a2 --delta 0");
    CHECK(quot.exit_code == 0);
    CHECK(quot.out.find("dim_k=5") != std::string::npos);
    CHECK(quot.out.find("Delta(e2) = a2⊗a1") != std::string::npos);
    CHECK(quot.out.find("bimodule=ok") != std::string::npos);

    auto dsum = run("--format json construct dsum builtin:truncpoly:1 builtin:truncpoly:1 "
                    "--delta 0,0");
    CHECK(dsum.exit_code == 0);
    check_schema("construct", dsum.out);
    auto parsed = json::parse(dsum.out);
    CHECK(parsed["dim_k"] == 4);
    CHECK(parsed["verify"]["bimodule"] == true);

    auto op = run("--format json construct op builtin:matrix:2 --delta 0");
    CHECK(op.exit_code == 0);
    check_schema("construct", op.out);

    auto tensor = run("construct tensor builtin:cyclicgroup:2 builtin:cyclicgroup:2 "
                      "--delta 0,0");
    CHECK(tensor.exit_code == 0);
    CHECK(tensor.out.find("coassociative=ok") != std::string::npos);
}

TEST_CASE("construct pullback") {
    std::string qa = write_temp("pb_a.quiver",
                                "vertices 4\nalpha: 1->2\nbeta: 2->3\ndelta: 2->4\n"
                                "rel alpha.delta\n");
    std::string qb = write_temp("pb_b.quiver",
                                "vertices 4\nalpha: 1->2\nbeta: 2->3\ngamma: 3->4\n"
                                "rel alpha.beta.gamma\n");
    std::string qc = write_temp("pb_c.quiver", "vertices 3\nalpha: 1->2\nbeta: 2->3\n");

    // basis order A: e1 e2 e3 e4 alpha beta delta alpha.beta
    std::string fa = write_temp("pb_fa.json", R"({"images": [
        ["1","0","0","0","0","0"],
        ["0","1","0","0","0","0"],
        ["0","0","1","0","0","0"],
        ["0","0","0","0","0","0"],
        ["0","0","0","1","0","0"],
        ["0","0","0","0","1","0"],
        ["0","0","0","0","0","0"],
        ["0","0","0","0","0","1"]]})");
    // basis order B: e1 e2 e3 e4 alpha beta gamma alpha.beta beta.gamma
    std::string fb = write_temp("pb_fb.json", R"({"images": [
        ["1","0","0","0","0","0"],
        ["0","1","0","0","0","0"],
        ["0","0","1","0","0","0"],
        ["0","0","0","0","0","0"],
        ["0","0","0","1","0","0"],
        ["0","0","0","0","1","0"],
        ["0","0","0","0","0","0"],
        ["0","0","0","0","0","1"],
        ["0","0","0","0","0","0"]]})");

    std::string base = "construct pullback file:" + qa + " file:" + qb + " file:" + qc +
                       " --fa " + fa + " --fb " + fb;
    auto ok = run("--format json " + base + " --delta 0,0");
    CHECK(ok.exit_code == 0);
    check_schema("construct", ok.out);
    auto parsed = json::parse(ok.out);
    CHECK(parsed["dim_k"] == 11);
    CHECK(parsed["verify"]["bimodule"] == true);
    CHECK(parsed["verify"]["coassociative"] == true);

    // the second canonical coproduct of B pushes to zero, not to C's
    auto incompatible = run(base + " --delta 0,1");
    CHECK(incompatible.exit_code == 2);
}

TEST_CASE("usage errors exit with code 1") {
    CHECK(run("frobdim sandwich").exit_code == 1);
    CHECK(run("frobdim builtin:nosuch:3").exit_code == 1);
    CHECK(run("frobdim").exit_code == 1);
    CHECK(run("nosuchverb").exit_code == 1);
    CHECK(run("frobdim file:/does/not/exist").exit_code == 1);
}

TEST_CASE("identical invocations are byte identical") {
    for (const char* cmd : {"frobdim builtin:cycle:2,2", "basis builtin:matrix:2",
                            "--format json gentle builtin:An:5 --verify",
                            "--format json census --max-vertices 2 --max-arrows 2"}) {
        auto a = run(cmd);
        auto b = run(cmd);
        CHECK(a.exit_code == b.exit_code);
        CHECK(a.out == b.out);
    }
}
