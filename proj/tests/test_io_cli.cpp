#include <doctest.h>

#include <unistd.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "lenfun/cli.hpp"
#include "lenfun/io.hpp"
#include "lenfun/rng.hpp"

using namespace lenfun;

namespace {

struct TempDir {
    std::filesystem::path path;
    TempDir() {
        path = std::filesystem::temp_directory_path() /
               ("lenfun-test-" + std::to_string(::getpid()));
        std::filesystem::create_directories(path);
    }
    ~TempDir() { std::filesystem::remove_all(path); }

    std::string write(const std::string& name, const std::string& content) const {
        const std::filesystem::path file = path / name;
        std::ofstream out(file);
        out << content;
        return file.string();
    }
};

struct CliResult {
    int code;
    std::string out;
    std::string err;
};

CliResult cli(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    const int code = run_cli(args, out, err);
    return CliResult{code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("serialization round trips") {
    Rng rng(109);
    for (int k = 0; k < 80; ++k) {
        const SpectrumTree tree = random_tree(rng);
        CHECK(parse_spectrum(spectrum_to_json(tree)) == tree);
        const IdealDescriptor i = random_ideal(rng, tree);
        CHECK(parse_ideal(ideal_to_json(i)) == i);
        const CanonicalLengthFn l = random_canonical_fn(rng, tree);
        const LengthFnFile parsed = parse_lengthfn(lengthfn_to_json(l));
        CHECK(std::get<CanonicalLengthFn>(parsed) == l);
        const ZLengthFn zl = random_zlengthfn(rng);
        CHECK(std::get<ZLengthFn>(parse_lengthfn(lengthfn_to_json(zl))) == zl);
    }
}

TEST_CASE("parse errors on malformed inputs") {
    CHECK_THROWS_AS(parse_spectrum(Json::parse("{\"nodes\": 3}")), ParseError);
    CHECK_THROWS_AS(parse_spectrum(Json::parse(R"({"nodes":[{"id":"A","kind":"weird"}]})")),
                    ParseError);
    CHECK_THROWS_AS(parse_ideal(Json::parse("\"half\"")), ParseError);
    CHECK_THROWS_AS(parse_ideal(Json::parse(R"({"components":[{"id":"A","gamma":"-1/2"}]})")),
                    ParseError);
    CHECK_THROWS_AS(parse_lengthfn(Json::parse(R"({"z_weights":[{"prime":"x","value":"1"}]})")),
                    ParseError);
    CHECK_THROWS_AS(parse_zideal(Json::parse(R"({"generator": -3})")), ParseError);
}

TEST_CASE("cli: tree evaluation matches the documented examples") {
    TempDir dir;
    const std::string one_node = dir.write(
        "tree.json", R"({"nodes":[{"id":"M","parent":null,"kind":"discrete"}]})");
    const std::string t_m = dir.write("lf.json", R"({"sigma_t":["M"]})");
    const std::string unit = dir.write("unit.json", R"("unit")");

    const CliResult r1 =
        cli({"eval", "--spectrum", one_node, "--lengthfn", t_m, "--ideal", unit});
    CHECK(r1.code == 0);
    CHECK(r1.out == "0/1\n");

    const std::string v_m = dir.write("v.json", R"({"sigma_v":[{"id":"M","lambda":"1"}]})");
    const std::string cut3 = dir.write(
        "cut3.json", R"({"components":[{"id":"M","gamma":"3","inclusive":true}]})");
    const CliResult r2 =
        cli({"eval", "--spectrum", one_node, "--lengthfn", v_m, "--ideal", cut3});
    CHECK(r2.code == 0);
    CHECK(r2.out == "3/1\n");

    const std::string broken = dir.write("broken.json", R"({"components": 7})");
    const CliResult r3 =
        cli({"eval", "--spectrum", one_node, "--lengthfn", t_m, "--ideal", broken});
    CHECK(r3.code == 2);

    // Semantic problems exit with the validation code.
    const std::string bad_cut = dir.write(
        "bad_cut.json", R"({"components":[{"id":"M","gamma":"0","inclusive":true}]})");
    const CliResult r4 =
        cli({"eval", "--spectrum", one_node, "--lengthfn", t_m, "--ideal", bad_cut});
    CHECK(r4.code == 3);
}

TEST_CASE("cli: integer backend evaluation") {
    TempDir dir;
    const std::string weights = dir.write(
        "z.json", R"({"z_weights":[], "default":"1"})");
    const std::string twelve = dir.write("n.json", R"({"generator": 12})");
    const CliResult r1 = cli({"eval", "--lengthfn", weights, "--ideal", twelve});
    CHECK(r1.code == 0);
    CHECK(r1.out == "3/1\n");

    const std::string presentation = dir.write(
        "mod.json", R"({"generators": 2, "presentation": [[2,0],[0,4]]})");
    const CliResult r2 = cli({"eval", "--lengthfn", weights, "--module", presentation});
    CHECK(r2.code == 0);
    CHECK(r2.out == "3/1\n");

    const std::string rank = dir.write("rank.json", R"({"rank_multiple":"1/2"})");
    const std::string zero = dir.write("zero.json", R"({"generator": 0})");
    const CliResult r3 = cli({"eval", "--lengthfn", rank, "--ideal", zero});
    CHECK(r3.code == 0);
    CHECK(r3.out == "1/2\n");
}

TEST_CASE("cli: spectral systems evaluate as singular lengths") {
    TempDir dir;
    const std::string tree = dir.write(
        "tree.json", R"({"nodes":[{"id":"M","parent":null,"kind":"dense"}]})");
    const std::string delta = dir.write("delta.json", R"x({"spectral_delta":["(0)","M"]})x");
    const std::string prime = dir.write(
        "prime.json", R"({"components":[{"id":"M","gamma":"0","inclusive":false}]})");
    const CliResult r1 =
        cli({"eval", "--spectrum", tree, "--lengthfn", delta, "--ideal", prime});
    CHECK(r1.code == 0);
    CHECK(r1.out == "inf\n");
    const std::string unit = dir.write("unit.json", R"("unit")");
    const CliResult r2 =
        cli({"eval", "--spectrum", tree, "--lengthfn", delta, "--ideal", unit});
    CHECK(r2.code == 0);
    CHECK(r2.out == "0/1\n");
}

TEST_CASE("cli: canonicalize round trips and validation failures") {
    TempDir dir;
    const std::string tree = dir.write(
        "tree.json",
        R"({"nodes":[{"id":"P","parent":null,"kind":"dense"},
                     {"id":"M","parent":"P","kind":"discrete"}]})");
    const std::string lf = dir.write(
        "lf.json", R"({"sigma_t":["P"],"sigma_v":[{"id":"M","lambda":"2"}]})");
    const CliResult r1 = cli({"canonicalize", "--spectrum", tree, "--lengthfn", lf});
    CHECK(r1.code == 0);
    const Json out = Json::parse(r1.out);
    CHECK(out["sigma_t"] == Json::array({"P"}));
    CHECK(out["sigma_v"][0]["id"] == "M");
    CHECK(out["sigma_v"][0]["lambda"] == "2/1");

    // A spectral system canonicalizes onto torsion classes at its primes.
    const std::string delta = dir.write("delta.json", R"x({"spectral_delta":["(0)","P"]})x");
    const CliResult r2 = cli({"canonicalize", "--spectrum", tree, "--lengthfn", delta});
    CHECK(r2.code == 0);
    CHECK(Json::parse(r2.out)["sigma_t"] == Json::array({"P"}));

    // The rank class needs an idempotent prime.
    const std::string bad = dir.write("bad.json", R"({"sigma_r":[{"id":"M","alpha":"1"}]})");
    const CliResult r3 = cli({"canonicalize", "--spectrum", tree, "--lengthfn", bad});
    CHECK(r3.code == 3);
}

TEST_CASE("cli: scenarios and exit codes") {
    const CliResult unknown = cli({"scenario", "no-such-suite"});
    CHECK(unknown.code == 2);

    const CliResult missing = cli({"eval"});
    CHECK(missing.code == 2);

    const CliResult grassmann =
        cli({"scenario", "grassmann", "--seed", "1", "--cases", "100"});
    CHECK(grassmann.code == 0);
    const Json report = Json::parse(grassmann.out);
    CHECK(report["failures"].empty());
    CHECK(report["cases"] == 100);

    // Byte-identical reports modulo the wall time.
    const CliResult again =
        cli({"scenario", "grassmann", "--seed", "1", "--cases", "100"});
    Json a = Json::parse(grassmann.out);
    Json b = Json::parse(again.out);
    a.erase("wall_ms");
    b.erase("wall_ms");
    CHECK(a == b);

    Json c = Json::parse(cli({"scenario", "grassmann", "--seed", "2", "--cases", "100"}).out);
    c.erase("wall_ms");
    CHECK(a != c);
}

TEST_CASE("cli: the counterexample scenario reports its witness") {
    const CliResult r = cli({"scenario", "ex-global", "--seed", "9", "--cases", "50"});
    CHECK(r.code == 0);
    const Json report = Json::parse(r.out);
    bool found = false;
    for (const auto& note : report["notes"]) {
        const std::string text = note.get<std::string>();
        if (text.find("inf") != std::string::npos && text.find("0/1") != std::string::npos)
            found = true;
    }
    CHECK(found);
}
