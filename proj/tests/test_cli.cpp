#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <string>

#include "chaoswave/key.hpp"
#include "chaoswave/pgm.hpp"
#include "chaoswave/pipeline.hpp"
#include "support/corpus.hpp"

namespace fs = std::filesystem;
using namespace chaoswave;

namespace {

std::string cli_bin() {
    const char* bin = std::getenv("CHAOSWAVE_CLI_BIN");
    return bin ? bin : "";
}

int run(const std::string& args) {
    const std::string cmd = cli_bin() + " " + args + " >/dev/null 2>&1";
    const int status = std::system(cmd.c_str());
    if (status == -1) return -1;
    return WEXITSTATUS(status);
}

struct TempDir {
    fs::path path;
    TempDir() : path(fs::temp_directory_path() / "chaoswave_cli_test") {
        fs::remove_all(path);
        fs::create_directories(path);
    }
    ~TempDir() { fs::remove_all(path); }
    std::string file(const char* name) const { return (path / name).string(); }
};

} // namespace

TEST_SUITE("cli") {

TEST_CASE("keygen, encrypt, decrypt round trip on disk") {
    if (cli_bin().empty()) {
        MESSAGE("CHAOSWAVE_CLI_BIN not set; skipping CLI checks");
        return;
    }
    TempDir dir;
    const GrayImage image = testsupport::synthetic_image(9, 64, 64);
    write_pgm(image, dir.file("plain.pgm"));

    REQUIRE(run("keygen --out " + dir.file("fresh.key")) == 0);
    const SecretKey fresh = load_key_file(dir.file("fresh.key"));
    CHECK(fresh.m == 0.489);
    CHECK(fresh.x0 != 0.123456); // fresh x0, default everything else

    REQUIRE(run("encrypt --in " + dir.file("plain.pgm") + " --out " + dir.file("c.cwc") +
                " --key " + dir.file("fresh.key")) == 0);
    REQUIRE(run("decrypt --in " + dir.file("c.cwc") + " --out " + dir.file("back.pgm") +
                " --key " + dir.file("fresh.key")) == 0);

    // raster must match byte for byte
    std::ifstream a(dir.file("plain.pgm"), std::ios::binary);
    std::ifstream b(dir.file("back.pgm"), std::ios::binary);
    const std::string plain_bytes((std::istreambuf_iterator<char>(a)),
                                  std::istreambuf_iterator<char>());
    const std::string back_bytes((std::istreambuf_iterator<char>(b)),
                                 std::istreambuf_iterator<char>());
    CHECK(plain_bytes == back_bytes);

    // blob is the documented container
    const CipherBlob blob = CipherBlob::load(dir.file("c.cwc"));
    CHECK(blob.rows == 64);
    CHECK(blob.payload.size() == 4 * 64 * 64);
}

TEST_CASE("key file from the environment variable") {
    if (cli_bin().empty()) {
        MESSAGE("CHAOSWAVE_CLI_BIN not set; skipping CLI checks");
        return;
    }
    TempDir dir;
    const GrayImage image = testsupport::synthetic_image(10, 16, 16);
    write_pgm(image, dir.file("plain.pgm"));
    save_key_file(SecretKey{}, dir.file("env.key"));

    const std::string cmd = "CHAOSWAVE_KEY=" + dir.file("env.key") + " " + cli_bin() +
                            " encrypt --in " + dir.file("plain.pgm") + " --out " +
                            dir.file("c.cwc") + " >/dev/null 2>&1";
    REQUIRE(WEXITSTATUS(std::system(cmd.c_str())) == 0);
    CHECK(fs::exists(dir.file("c.cwc")));
}

TEST_CASE("preview and analyze produce their artifacts") {
    if (cli_bin().empty()) {
        MESSAGE("CHAOSWAVE_CLI_BIN not set; skipping CLI checks");
        return;
    }
    TempDir dir;
    const GrayImage image = testsupport::synthetic_image(11, 64, 64);
    write_pgm(image, dir.file("plain.pgm"));
    save_key_file(SecretKey{}, dir.file("k.key"));

    REQUIRE(run("preview --in " + dir.file("plain.pgm") + " --out " + dir.file("prev.pgm") +
                " --key " + dir.file("k.key")) == 0);
    const GrayImage preview = read_pgm(dir.file("prev.pgm"));
    CHECK(preview.rows == 64);
    CHECK(preview.cols == 64);

    REQUIRE(run("analyze --in " + dir.file("plain.pgm") + " --out " + dir.file("report") +
                " --key " + dir.file("k.key") + " --seed 0 --format json") == 0);
    CHECK(fs::exists(dir.path / "report" / "report.json"));
    CHECK(fs::exists(dir.path / "report" / "histogram_plain.csv"));
    CHECK(fs::exists(dir.path / "report" / "histogram_cipher.csv"));
    CHECK(fs::exists(dir.path / "report" / "pairs_cipher_diagonal.csv"));

    REQUIRE(run("analyze --in " + dir.file("plain.pgm") + " --out " + dir.file("report_csv") +
                " --key " + dir.file("k.key") + " --format csv") == 0);
    CHECK(fs::exists(dir.path / "report_csv" / "report.csv"));
}

TEST_CASE("failure classes map to distinct exit codes") {
    if (cli_bin().empty()) {
        MESSAGE("CHAOSWAVE_CLI_BIN not set; skipping CLI checks");
        return;
    }
    TempDir dir;
    const GrayImage image = testsupport::synthetic_image(12, 16, 16);
    write_pgm(image, dir.file("plain.pgm"));
    save_key_file(SecretKey{}, dir.file("k.key"));

    // missing key file: I/O error
    CHECK(run("encrypt --in " + dir.file("plain.pgm") + " --out " + dir.file("c.cwc") +
              " --key " + dir.file("missing.key")) == 3);

    // malformed input image: format error, distinct from the I/O class
    std::ofstream(dir.file("bad.pgm")) << "P2\n2 2\n255\n0 0 0 0\n";
    CHECK(run("encrypt --in " + dir.file("bad.pgm") + " --out " + dir.file("c.cwc") + " --key " +
              dir.file("k.key")) == 4);

    // out-of-domain key parameters: parameter error
    std::ofstream(dir.file("bad.key")) << "x0=0.5\nm=2.0\nn1=1\nn2=2\nn3=3\nn4=4\nalpha=0.2\n";
    CHECK(run("encrypt --in " + dir.file("plain.pgm") + " --out " + dir.file("c.cwc") +
              " --key " + dir.file("bad.key")) == 5);

    // usage errors come from the option parser with its own nonzero codes
    const int usage = run("encrypt --in " + dir.file("plain.pgm"));
    CHECK(usage != 0);
    CHECK(usage != 3);
    CHECK(usage != 4);
    CHECK(usage != 5);

    // decrypting with the wrong key is not an error: garbage comes back
    REQUIRE(run("encrypt --in " + dir.file("plain.pgm") + " --out " + dir.file("c.cwc") +
                " --key " + dir.file("k.key")) == 0);
    SecretKey wrong;
    wrong.x0 = 0.123456 + 1e-14;
    save_key_file(wrong, dir.file("wrong.key"));
    CHECK(run("decrypt --in " + dir.file("c.cwc") + " --out " + dir.file("garbage.pgm") +
              " --key " + dir.file("wrong.key")) == 0);
    const GrayImage garbage = read_pgm(dir.file("garbage.pgm"));
    CHECK(garbage.pixels != image.pixels);
}

} // TEST_SUITE
