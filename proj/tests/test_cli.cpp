#include <catch2/catch_amalgamated.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

namespace fs = std::filesystem;

namespace {

std::string bin() {
    const char* b = std::getenv("TGRS_BIN");
    REQUIRE(b != nullptr);
    return b;
}

int run(const std::string& args) {
    std::string cmd = bin() + " " + args + " > /dev/null 2>&1";
    int rc = std::system(cmd.c_str());
    return WEXITSTATUS(rc);
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    REQUIRE(in.good());
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

struct TempDir {
    fs::path path;
    TempDir() {
        path = fs::temp_directory_path() / ("tgrs_cli_test_" + std::to_string(::getpid()));
        fs::create_directories(path);
    }
    ~TempDir() { fs::remove_all(path); }
    std::string file(const std::string& name) const { return (path / name).string(); }
};

}  // namespace

TEST_CASE("keygen, encrypt, decrypt round trip reproduces the message file") {
    TempDir d;
    REQUIRE(run("--seed 5 keygen --p 31 --n 30 --k 10 --t 8 --hook 4 --eta 7 --sk " +
                d.file("key.sk") + " --pk " + d.file("key.pub")) == 0);
    {
        std::ofstream msg(d.file("msg.txt"));
        msg << "1 2 3 4 5 6 7 8 9 10\n";
    }
    REQUIRE(run("--seed 6 encrypt --pub " + d.file("key.pub") + " --msg " + d.file("msg.txt") +
                " -o " + d.file("ct.txt")) == 0);
    REQUIRE(run("decrypt --key " + d.file("key.sk") + " --pub " + d.file("key.pub") + " --ct " +
                d.file("ct.txt") + " -o " + d.file("out.txt")) == 0);
    CHECK(slurp(d.file("out.txt")) == slurp(d.file("msg.txt")));
}

TEST_CASE("attack subcommand recovers a working key") {
    TempDir d;
    REQUIRE(run("--seed 3 keygen --p 31 --n 30 --k 10 --t 8 --hook 4 --eta 7 --sk " +
                d.file("key.sk") + " --pk " + d.file("key.pub")) == 0);
    REQUIRE(run("--seed 1 attack --pub " + d.file("key.pub") + " -o " + d.file("report.txt")) ==
            0);
    std::string rep = slurp(d.file("report.txt"));
    CHECK(rep.find("verified=true") != std::string::npos);
    CHECK(rep.find("case=1") != std::string::npos);
    CHECK(rep.find("h=4 t=8") != std::string::npos);
    CHECK(rep.find("TGRS-KEY v1") != std::string::npos);
}

TEST_CASE("distinguish subcommand emits measurements and a verdict") {
    TempDir d;
    REQUIRE(run("--seed 2 keygen --p 31 --n 30 --k 8 --t 4 --hook 3 --eta 1 --sk " +
                d.file("key.sk") + " --pk " + d.file("key.pub")) == 0);
    REQUIRE(run("--seed 9 distinguish --in " + d.file("key.pub") + " -o " + d.file("dis.txt")) ==
            0);
    std::string rep = slurp(d.file("dis.txt"));
    CHECK(rep.find("a=0") != std::string::npos);
    CHECK(rep.find("dim=") != std::string::npos);
    CHECK(rep.find("bound=") != std::string::npos);
    CHECK(rep.find("random=") != std::string::npos);
    CHECK(rep.find("verdict=Structured") != std::string::npos);
}

TEST_CASE("identical invocations produce byte-identical outputs") {
    TempDir d;
    std::string kg = "--seed 11 keygen --p 31 --n 24 --k 8 --t 5 --hook 3 --eta 2";
    REQUIRE(run(kg + " --sk " + d.file("a.sk") + " --pk " + d.file("a.pub")) == 0);
    REQUIRE(run(kg + " --sk " + d.file("b.sk") + " --pk " + d.file("b.pub")) == 0);
    CHECK(slurp(d.file("a.sk")) == slurp(d.file("b.sk")));
    CHECK(slurp(d.file("a.pub")) == slurp(d.file("b.pub")));
}

TEST_CASE("attack output is identical for 1 and 4 threads") {
    TempDir d;
    REQUIRE(run("--seed 3 keygen --p 31 --n 30 --k 10 --t 8 --hook 4 --eta 7 --sk " +
                d.file("key.sk") + " --pk " + d.file("key.pub")) == 0);
    REQUIRE(run("--seed 1 --threads 1 attack --pub " + d.file("key.pub") + " -o " +
                d.file("r1.txt")) == 0);
    REQUIRE(run("--seed 1 --threads 4 attack --pub " + d.file("key.pub") + " -o " +
                d.file("r4.txt")) == 0);
    CHECK(slurp(d.file("r1.txt")) == slurp(d.file("r4.txt")));
}

TEST_CASE("exit codes") {
    TempDir d;
    // usage error: unknown flag
    CHECK(run("keygen --nonsense 3") == 1);
    // usage error: missing input file
    CHECK(run("encrypt --pub " + d.file("absent.pub") + " --msg " + d.file("absent.txt")) == 1);
    // domain error: tiny twist is unsupported by the attack
    REQUIRE(run("--seed 2 keygen --p 31 --n 30 --k 10 --t 1 --hook 5 --eta 7 --sk " +
                d.file("t1.sk") + " --pk " + d.file("t1.pub")) == 0);
    CHECK(run("--seed 2 attack --pub " + d.file("t1.pub") + " -o " + d.file("t1.rep")) == 2);
    // domain error: malformed key file
    {
        std::ofstream bad(d.file("bad.pub"));
        bad << "TGRS-PUB v1\nfield 31 1\n";
    }
    CHECK(run("encrypt --pub " + d.file("bad.pub") + " --msg " + d.file("absent.txt")) != 0);
}

TEST_CASE("default seed is 0 and is recorded in the manifest") {
    TempDir d;
    REQUIRE(run("keygen --p 31 --n 24 --k 8 --t 5 --hook 3 --eta 2 --sk " + d.file("d.sk") +
                " --pk " + d.file("d.pub")) == 0);
    REQUIRE(run("--seed 0 keygen --p 31 --n 24 --k 8 --t 5 --hook 3 --eta 2 --sk " +
                d.file("e.sk") + " --pk " + d.file("e.pub")) == 0);
    std::string def = slurp(d.file("d.sk"));
    CHECK(def == slurp(d.file("e.sk")));
    CHECK(def.find("seed=0") != std::string::npos);
}

TEST_CASE("lemmas subcommands") {
    TempDir d;
    REQUIRE(run("lemmas --check sum --p 5 --k 6 --samples 50 -o " + d.file("sum.txt")) == 0);
    {
        std::string rep = slurp(d.file("sum.txt"));
        CHECK(rep.find("name=sum") != std::string::npos);
        CHECK(rep.find("verdict=FAIL") == std::string::npos);
    }
    REQUIRE(run("lemmas --check census --p 3 --s 2 --u 2 -o " + d.file("census.txt")) == 0);
    {
        std::string rep = slurp(d.file("census.txt"));
        CHECK(rep.find("measured=216") != std::string::npos);
        CHECK(rep.find("measured=72") != std::string::npos);
        CHECK(rep.find("measured=36") != std::string::npos);
        CHECK(rep.find("verdict=erratum") != std::string::npos);
        CHECK(rep.find("verdict=FAIL") == std::string::npos);
    }
    REQUIRE(run("lemmas --check density --p 3 --s 2 --u 2 --j 1 -o " + d.file("density.txt")) ==
            0);
    {
        std::string rep = slurp(d.file("density.txt"));
        CHECK(rep.find("measured=8/9") != std::string::npos);
        CHECK(rep.find("verdict=ok") != std::string::npos);
    }
    REQUIRE(run("--seed 4 lemmas --check gdensity --p 11 --k 17 --t 17 --samples 20000 -o " +
                d.file("g.txt")) == 0);
    CHECK(slurp(d.file("g.txt")).find("verdict=ok") != std::string::npos);
    REQUIRE(run("--seed 4 lemmas --check triples --p 17 --k 17 --t 17 --hook 4 --samples 20000 "
                "-o " + d.file("tr.txt")) == 0);
    CHECK(slurp(d.file("tr.txt")).find("name=triples") != std::string::npos);
}

TEST_CASE("lemmas reports are identical for 1 and 4 threads") {
    TempDir d;
    REQUIRE(run("--seed 4 --threads 1 lemmas --check gdensity --p 11 --k 17 --t 17 "
                "--samples 30000 -o " + d.file("g1.txt")) == 0);
    REQUIRE(run("--seed 4 --threads 4 lemmas --check gdensity --p 11 --k 17 --t 17 "
                "--samples 30000 -o " + d.file("g4.txt")) == 0);
    CHECK(slurp(d.file("g1.txt")) == slurp(d.file("g4.txt")));
}
