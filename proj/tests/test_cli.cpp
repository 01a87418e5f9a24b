#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "stego/image.hpp"
#include "stego/prng.hpp"
#include "support/synthetic.hpp"

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

struct CliResult {
    int code = -1;
    std::string out;
};

class TempDir {
public:
    TempDir() {
        dir_ = fs::temp_directory_path() /
               ("stego_cli_test_" + std::to_string(::getpid()));
        fs::create_directories(dir_);
    }
    ~TempDir() {
        std::error_code ec;
        fs::remove_all(dir_, ec);
    }
    fs::path operator/(const std::string& name) const { return dir_ / name; }

private:
    fs::path dir_;
};

CliResult run_cli(const TempDir& tmp, const std::string& args) {
    const fs::path out_file = tmp / "stdout.txt";
    const std::string cmd = std::string(STEGO_CLI_BIN) + " " + args + " > " +
                            out_file.string() + " 2> /dev/null";
    const int status = std::system(cmd.c_str());
    CliResult r;
    r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    std::ifstream in(out_file);
    std::getline(in, r.out);
    return r;
}

std::vector<std::uint8_t> slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

void spit(const fs::path& p, const std::vector<std::uint8_t>& bytes) {
    std::ofstream out(p, std::ios::binary);
    out.write(reinterpret_cast<const char*>(bytes.data()),
              static_cast<std::streamsize>(bytes.size()));
}

stego::Image noisy_cover_12() {
    stego::Image img(12, 12);
    for (int y = 0; y < 12; ++y)
        for (int x = 0; x < 12; ++x) img.at(x, y) = x % 2 ? 255 : 0;
    return img;
}

} // namespace

TEST_CASE("cli embed/extract round trip with sidecar") {
    TempDir tmp;
    auto cover = testsupport::natural_cover(50, 72, 72);
    stego::save_pgm(cover, tmp / "c.pgm");

    stego::Prng rng(stego::StegoKey{17});
    auto msg = testsupport::random_bytes(rng, 64);
    spit(tmp / "m.bin", msg);

    auto emb = run_cli(tmp, "embed --cover " + (tmp / "c.pgm").string() + " --message " +
                                (tmp / "m.bin").string() + " --key 42 --out " +
                                (tmp / "s.pgm").string());
    REQUIRE(emb.code == 0);
    auto summary = json::parse(emb.out);
    CHECK(summary["payload_bytes"] == 64);
    CHECK(fs::exists(tmp / "s.pgm"));
    CHECK(fs::exists(tmp / "s.pgm.meta.json"));

    auto ext = run_cli(tmp, "extract --cover " + (tmp / "c.pgm").string() + " --stego " +
                                (tmp / "s.pgm").string() + " --key 42 --out " +
                                (tmp / "r.bin").string());
    REQUIRE(ext.code == 0);
    CHECK(slurp(tmp / "r.bin") == msg);

    SUBCASE("extraction via the sidecar") {
        auto meta = run_cli(tmp, "extract --cover " + (tmp / "c.pgm").string() +
                                     " --stego " + (tmp / "s.pgm").string() + " --key 42" +
                                     " --meta " + (tmp / "s.pgm.meta.json").string() +
                                     " --out " + (tmp / "r2.bin").string());
        REQUIRE(meta.code == 0);
        CHECK(slurp(tmp / "r2.bin") == msg);
    }
    SUBCASE("sidecar fingerprint catches a wrong key") {
        auto bad = run_cli(tmp, "extract --cover " + (tmp / "c.pgm").string() +
                                    " --stego " + (tmp / "s.pgm").string() + " --key 43" +
                                    " --meta " + (tmp / "s.pgm.meta.json").string() +
                                    " --out " + (tmp / "r3.bin").string());
        CHECK(bad.code == 5);
    }
}

TEST_CASE("cli capacity reports the 1.5 bpp figure") {
    TempDir tmp;
    stego::save_pgm(noisy_cover_12(), tmp / "noisy.pgm");
    auto r = run_cli(tmp, "capacity --cover " + (tmp / "noisy.pgm").string());
    REQUIRE(r.code == 0);
    CHECK(json::parse(r.out)["capacity_bits"] == 216);
}

TEST_CASE("cli oversize message exits 2 and writes nothing") {
    TempDir tmp;
    stego::save_pgm(noisy_cover_12(), tmp / "c.pgm");
    spit(tmp / "big.bin", std::vector<std::uint8_t>(1000, 0x55));
    auto r = run_cli(tmp, "embed --cover " + (tmp / "c.pgm").string() + " --message " +
                              (tmp / "big.bin").string() + " --out " +
                              (tmp / "s.pgm").string());
    CHECK(r.code == 2);
    CHECK(!fs::exists(tmp / "s.pgm"));
}

TEST_CASE("cli attack subcommands") {
    TempDir tmp;
    auto cover = testsupport::natural_cover(51, 96, 96);
    stego::save_pgm(cover, tmp / "img.pgm");

    auto chi = run_cli(tmp, "attack --method chisq --image " + (tmp / "img.pgm").string());
    REQUIRE(chi.code == 0);
    auto rep = json::parse(chi.out);
    CHECK(rep["method"] == "chisq");
    CHECK(rep["estimate"].get<double>() >= 0.0);
    CHECK(rep["estimate"].get<double>() <= 1.0);

    stego::save_pgm(stego::Image(24, 24, 77), tmp / "const.pgm");
    auto rs = run_cli(tmp, "attack --method rs --image " + (tmp / "const.pgm").string());
    REQUIRE(rs.code == 0);
    CHECK(json::parse(rs.out)["error"] == "degenerate");

    stego::Image tweaked = cover;
    tweaked.at(5, 5) ^= 1;
    stego::save_pgm(tweaked, tmp / "tweaked.pgm");
    auto cooc = run_cli(tmp, "attack --method cooc --cover " + (tmp / "img.pgm").string() +
                                 " --stego " + (tmp / "tweaked.pgm").string() +
                                 " --dx 1 --dy 0");
    REQUIRE(cooc.code == 0);
    CHECK(json::parse(cooc.out)["estimate"].get<double>() >= 0.0);
}

TEST_CASE("cli segment, psnr and cooc render") {
    TempDir tmp;
    auto cover = testsupport::natural_cover(52, 64, 64);
    stego::save_pgm(cover, tmp / "c.pgm");

    auto seg = run_cli(tmp, "segment --cover " + (tmp / "c.pgm").string() + " --out " +
                                (tmp / "mask.pgm").string());
    REQUIRE(seg.code == 0);
    auto mask = stego::load_pgm(tmp / "mask.pgm");
    CHECK(mask.width == 64);
    for (auto p : mask.pixels) CHECK((p == 0 || p == 128 || p == 255));

    auto pq = run_cli(tmp, "psnr --a " + (tmp / "c.pgm").string() + " --b " +
                               (tmp / "c.pgm").string());
    REQUIRE(pq.code == 0);
    CHECK(json::parse(pq.out)["psnr_db"] == "inf");

    auto cr = run_cli(tmp, "cooc --image " + (tmp / "c.pgm").string() + " --out " +
                               (tmp / "cooc.pgm").string());
    REQUIRE(cr.code == 0);
    auto rendered = stego::load_pgm(tmp / "cooc.pgm");
    CHECK(rendered.width == 256);
    CHECK(rendered.height == 256);
}

TEST_CASE("cli baseline round trip") {
    TempDir tmp;
    stego::save_pgm(testsupport::natural_cover(53, 48, 48), tmp / "c.pgm");
    stego::Prng rng(stego::StegoKey{23});
    auto msg = testsupport::random_bytes(rng, 32);
    spit(tmp / "m.bin", msg);

    for (std::string method : {"lsb", "lsbm"}) {
        auto emb = run_cli(tmp, "baseline " + method + " embed --cover " +
                                    (tmp / "c.pgm").string() + " --message " +
                                    (tmp / "m.bin").string() + " --order random --key 99" +
                                    " --out " + (tmp / (method + ".pgm")).string());
        REQUIRE(emb.code == 0);
        auto ext = run_cli(tmp, "baseline " + method + " extract --stego " +
                                    (tmp / (method + ".pgm")).string() +
                                    " --bytes 32 --order random --key 99 --out " +
                                    (tmp / (method + ".bin")).string());
        REQUIRE(ext.code == 0);
        CHECK(slurp(tmp / (method + ".bin")) == msg);
    }
}

TEST_CASE("cli error exit codes") {
    TempDir tmp;
    spit(tmp / "garbage.pgm", {'P', '2', ' ', '1', ' ', '1', ' ', '2', '5', '5', '\n', 'x'});
    auto bad_format = run_cli(tmp, "capacity --cover " + (tmp / "garbage.pgm").string());
    CHECK(bad_format.code == 4);

    auto bad_flag = run_cli(tmp, "capacity --cover x.pgm --bogus 1");
    CHECK(bad_flag.code == 5);

    auto bad_sub = run_cli(tmp, "definitely-not-a-subcommand");
    CHECK(bad_sub.code == 5);

    stego::save_pgm(stego::Image(12, 12, 9), tmp / "c.pgm");
    auto bad_params = run_cli(tmp, "capacity --cover " + (tmp / "c.pgm").string() + " --m 5");
    CHECK(bad_params.code == 5); // 5 does not divide 6
}

TEST_CASE("cli embeds are byte identical across runs") {
    TempDir tmp;
    stego::save_pgm(testsupport::natural_cover(54, 60, 60), tmp / "c.pgm");
    stego::Prng rng(stego::StegoKey{29});
    spit(tmp / "m.bin", testsupport::random_bytes(rng, 40));

    const std::string base = "embed --cover " + (tmp / "c.pgm").string() + " --message " +
                             (tmp / "m.bin").string() + " --key 7 --flat-bits 4 ";
    REQUIRE(run_cli(tmp, base + "--out " + (tmp / "a.pgm").string()).code == 0);
    REQUIRE(run_cli(tmp, base + "--out " + (tmp / "b.pgm").string()).code == 0);
    CHECK(slurp(tmp / "a.pgm") == slurp(tmp / "b.pgm"));
    CHECK(slurp(tmp / "a.pgm.meta.json") == slurp(tmp / "b.pgm.meta.json"));
}
