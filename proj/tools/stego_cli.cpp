// Command-line front end: embed/extract plus segmentation, metrics and the
// attack bench. Prints a single-line JSON summary on stdout.
//
// Exit codes: 0 ok, 2 capacity exceeded, 3 corrupt stego, 4 bad file
// format, 5 bad arguments.

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "stego/baselines.hpp"
#include "stego/codec.hpp"
#include "stego/error.hpp"
#include "stego/image.hpp"
#include "stego/metadata.hpp"
#include "stego/segmenter.hpp"
#include "stego/stats.hpp"
#include "stego/steganalysis.hpp"

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

int exit_code_for(stego::Err code) {
    switch (code) {
        case stego::Err::CapacityExceeded:
            return 2;
        case stego::Err::CorruptStego:
        case stego::Err::HeaderOverrun:
            return 3;
        case stego::Err::BadMagic:
        case stego::Err::BadHeader:
        case stego::Err::UnsupportedMaxval:
        case stego::Err::Truncated:
            return 4;
        default:
            return 5;
    }
}

std::vector<std::uint8_t> read_file(const fs::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) stego::fail(stego::Err::BadParams, "cannot open " + path.string());
    return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

// temp file + rename, so a failed run never leaves a half-written output
void write_file_atomic(const fs::path& path, std::span<const std::uint8_t> bytes) {
    fs::path tmp = path;
    tmp += ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) stego::fail(stego::Err::BadParams, "cannot write " + tmp.string());
        out.write(reinterpret_cast<const char*>(bytes.data()),
                  static_cast<std::streamsize>(bytes.size()));
    }
    fs::rename(tmp, path);
}

void write_text_atomic(const fs::path& path, const std::string& text) {
    write_file_atomic(path, {reinterpret_cast<const std::uint8_t*>(text.data()), text.size()});
}

struct CommonParams {
    int n = 6;
    int r = 4;
    std::uint64_t threshold = 2500;
    int m = 3;
    int flat_bits = 3;
    std::string smooth = "on";
    std::uint64_t key = 0;

    // remembers what the user actually set, for --meta merging
    CLI::Option* n_opt = nullptr;
    CLI::Option* r_opt = nullptr;
    CLI::Option* t_opt = nullptr;
    CLI::Option* m_opt = nullptr;
    CLI::Option* fb_opt = nullptr;
    CLI::Option* smooth_opt = nullptr;

    void attach(CLI::App* cmd) {
        n_opt = cmd->add_option("--n", n, "block size for flat/noisy segmentation")
                    ->capture_default_str();
        r_opt = cmd->add_option("--r", r, "difference exponent")->capture_default_str();
        t_opt = cmd->add_option("--T", threshold, "flatness threshold")->capture_default_str();
        m_opt = cmd->add_option("--m", m, "flat sub-block size")->capture_default_str();
        fb_opt = cmd->add_option("--flat-bits", flat_bits, "bits per flat sub-block (3 or 4)")
                     ->check(CLI::IsMember({3, 4}))
                     ->capture_default_str();
        smooth_opt = cmd->add_option("--smooth", smooth, "smooth before segmentation (on|off)")
                         ->check(CLI::IsMember({"on", "off"}))
                         ->capture_default_str();
        cmd->add_option("--key", key, "64-bit embedding key, 0 = unkeyed")
            ->capture_default_str();
    }

    stego::SegParams seg() const {
        stego::SegParams p;
        p.n = n;
        p.r = r;
        p.threshold = threshold;
        p.m = m;
        p.flat_bits = flat_bits == 4 ? stego::FlatBits::PositionSign
                                     : stego::FlatBits::PositionOnly;
        p.smooth = smooth == "on";
        p.validate();
        return p;
    }

    // sidecar values fill in anything the user left at its default
    stego::SegParams merged_with_sidecar(const std::string& text) const {
        stego::SegParams p = stego::params_from_sidecar(text);
        if (n_opt->count()) p.n = n;
        if (r_opt->count()) p.r = r;
        if (t_opt->count()) p.threshold = threshold;
        if (m_opt->count()) p.m = m;
        if (fb_opt->count())
            p.flat_bits = flat_bits == 4 ? stego::FlatBits::PositionSign
                                         : stego::FlatBits::PositionOnly;
        if (smooth_opt->count()) p.smooth = smooth == "on";
        p.validate();
        return p;
    }

    stego::StegoKey stego_key() const { return {key}; }
};

void emit(const json& j) { std::cout << j.dump() << "\n"; }

json region_summary(const stego::RegionMap& map) {
    std::size_t flat = 0;
    for (auto f : map.flags) flat += f;
    return {{"blocks_x", map.blocks_x},
            {"blocks_y", map.blocks_y},
            {"flat_blocks", flat},
            {"noisy_blocks", map.block_count() - flat}};
}

json psnr_value(double db) {
    if (std::isinf(db)) return "inf";
    return db;
}

int run(int argc, char** argv) {
    CLI::App app{"adaptive two-region grayscale steganography toolkit"};
    app.require_subcommand(1);

    // ---- embed ----
    auto* embed_cmd = app.add_subcommand("embed", "embed a message file into a PGM cover");
    std::string embed_cover, embed_message, embed_out;
    bool embed_no_meta = false;
    embed_cmd->add_option("--cover", embed_cover, "cover PGM")->required();
    embed_cmd->add_option("--message", embed_message, "message file")->required();
    embed_cmd->add_option("--out", embed_out, "output stego PGM")->required();
    embed_cmd->add_flag("--no-meta", embed_no_meta, "skip the sidecar metadata file");
    CommonParams embed_params;
    embed_params.attach(embed_cmd);

    // ---- extract ----
    auto* extract_cmd = app.add_subcommand("extract", "recover a message (needs the cover)");
    std::string ext_cover, ext_stego, ext_out, ext_meta;
    extract_cmd->add_option("--cover", ext_cover, "cover PGM")->required();
    extract_cmd->add_option("--stego", ext_stego, "stego PGM")->required();
    extract_cmd->add_option("--out", ext_out, "recovered message file")->required();
    extract_cmd->add_option("--meta", ext_meta, "sidecar JSON with embedding parameters");
    CommonParams ext_params;
    ext_params.attach(extract_cmd);

    // ---- capacity ----
    auto* cap_cmd = app.add_subcommand("capacity", "gross capacity of a cover in bits");
    std::string cap_cover;
    cap_cmd->add_option("--cover", cap_cover, "cover PGM")->required();
    CommonParams cap_params;
    cap_params.attach(cap_cmd);

    // ---- segment ----
    auto* seg_cmd = app.add_subcommand("segment", "write the flat/noisy mask image");
    std::string seg_cover, seg_out;
    seg_cmd->add_option("--cover", seg_cover, "cover PGM")->required();
    seg_cmd->add_option("--out", seg_out, "mask PGM (flat=255, noisy=0, strips=128)")->required();
    CommonParams seg_params;
    seg_params.attach(seg_cmd);

    // ---- psnr ----
    auto* psnr_cmd = app.add_subcommand("psnr", "peak signal-to-noise ratio of two images");
    std::string psnr_a, psnr_b;
    psnr_cmd->add_option("--a", psnr_a, "first PGM")->required();
    psnr_cmd->add_option("--b", psnr_b, "second PGM")->required();

    // ---- cooc ----
    auto* cooc_cmd = app.add_subcommand("cooc", "render a co-occurrence matrix image");
    std::string cooc_image, cooc_out;
    int cooc_dx = 1, cooc_dy = 0;
    cooc_cmd->add_option("--image", cooc_image, "source PGM")->required();
    cooc_cmd->add_option("--out", cooc_out, "256x256 output PGM")->required();
    cooc_cmd->add_option("--dx", cooc_dx, "column offset")->capture_default_str();
    cooc_cmd->add_option("--dy", cooc_dy, "row offset")->capture_default_str();

    // ---- attack ----
    auto* attack_cmd = app.add_subcommand("attack", "run a steganalysis attack");
    std::string atk_method, atk_image, atk_cover, atk_stego;
    int atk_dx = 1, atk_dy = 0;
    attack_cmd->add_option("--method", atk_method, "chisq | rs | cooc")
        ->required()
        ->check(CLI::IsMember({"chisq", "rs", "cooc"}));
    attack_cmd->add_option("--image", atk_image, "image under test (chisq, rs)");
    attack_cmd->add_option("--cover", atk_cover, "cover PGM (cooc)");
    attack_cmd->add_option("--stego", atk_stego, "stego PGM (cooc)");
    attack_cmd->add_option("--dx", atk_dx, "column offset (cooc)")->capture_default_str();
    attack_cmd->add_option("--dy", atk_dy, "row offset (cooc)")->capture_default_str();

    // ---- baseline ----
    auto* base_cmd = app.add_subcommand("baseline", "reference LSB embedders");
    base_cmd->require_subcommand(1);
    struct BaselineArgs {
        std::string cover, message, out, stego, order = "sequential";
        std::uint64_t key = 0, bytes = 0;
    };
    BaselineArgs bl[4]; // lsb embed, lsb extract, lsbm embed, lsbm extract
    CLI::App* bl_cmds[4];
    const char* bl_names[2] = {"lsb", "lsbm"};
    for (int i = 0; i < 2; ++i) {
        auto* method = base_cmd->add_subcommand(
            bl_names[i], i == 0 ? "LSB replacement" : "LSB matching (+-1)");
        method->require_subcommand(1);
        auto* emb = method->add_subcommand("embed", "embed message bits");
        emb->add_option("--cover", bl[2 * i].cover)->required();
        emb->add_option("--message", bl[2 * i].message)->required();
        emb->add_option("--out", bl[2 * i].out)->required();
        emb->add_option("--order", bl[2 * i].order, "sequential | random")
            ->check(CLI::IsMember({"sequential", "random"}))
            ->capture_default_str();
        emb->add_option("--key", bl[2 * i].key, "key for random order / +-1 draws")
            ->capture_default_str();
        auto* ext = method->add_subcommand("extract", "read back LSBs");
        ext->add_option("--stego", bl[2 * i + 1].stego)->required();
        ext->add_option("--bytes", bl[2 * i + 1].bytes, "message length in bytes")->required();
        ext->add_option("--out", bl[2 * i + 1].out)->required();
        ext->add_option("--order", bl[2 * i + 1].order, "sequential | random")
            ->check(CLI::IsMember({"sequential", "random"}))
            ->capture_default_str();
        ext->add_option("--key", bl[2 * i + 1].key)->capture_default_str();
        bl_cmds[2 * i] = emb;
        bl_cmds[2 * i + 1] = ext;
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 5; // help/version exit clean, everything else is usage
    }

    auto order_for = [](const BaselineArgs& a) {
        stego::BaselineOrder order;
        order.mode = a.order == "random" ? stego::VisitOrder::KeyedRandom
                                         : stego::VisitOrder::Sequential;
        order.key = {a.key};
        return order;
    };

    try {
        if (*embed_cmd) {
            const stego::SegParams p = embed_params.seg();
            const stego::Image cover = stego::load_pgm(embed_cover);
            const auto message = read_file(embed_message);
            const stego::Image stego_img =
                stego::embed(cover, message, embed_params.stego_key(), p);
            write_file_atomic(embed_out, stego::write_pgm(stego_img));
            json summary = {
                {"action", "embed"},
                {"capacity_bits", stego::capacity_bits(stego::classify(cover, p))},
                {"payload_bytes", message.size()},
                {"psnr_db", psnr_value(stego::psnr(cover, stego_img))},
                {"out", embed_out}};
            if (!embed_no_meta) {
                fs::path meta = fs::path(embed_out);
                meta += ".meta.json";
                write_text_atomic(meta, stego::sidecar_json(p, embed_params.stego_key()));
                summary["meta"] = meta.string();
            }
            emit(summary);
        } else if (*extract_cmd) {
            stego::SegParams p;
            if (!ext_meta.empty()) {
                const auto meta_bytes = read_file(ext_meta);
                const std::string meta_text(meta_bytes.begin(), meta_bytes.end());
                if (!stego::sidecar_matches_key(meta_text, ext_params.stego_key()))
                    stego::fail(stego::Err::BadParams,
                                "key fingerprint in sidecar does not match --key");
                p = ext_params.merged_with_sidecar(meta_text);
            } else {
                p = ext_params.seg();
            }
            const stego::Image cover = stego::load_pgm(ext_cover);
            const stego::Image stego_img = stego::load_pgm(ext_stego);
            const auto payload =
                stego::extract(cover, stego_img, ext_params.stego_key(), p);
            write_file_atomic(ext_out, payload);
            emit({{"action", "extract"}, {"payload_bytes", payload.size()}, {"out", ext_out}});
        } else if (*cap_cmd) {
            const stego::SegParams p = cap_params.seg();
            const stego::Image cover = stego::load_pgm(cap_cover);
            const auto map = stego::classify(cover, p);
            json j = region_summary(map);
            j["capacity_bits"] = stego::capacity_bits(map);
            emit(j);
        } else if (*seg_cmd) {
            const stego::SegParams p = seg_params.seg();
            const stego::Image cover = stego::load_pgm(seg_cover);
            const auto map = stego::classify(cover, p);
            write_file_atomic(seg_out,
                              stego::write_pgm(stego::region_mask_image(map, cover.width,
                                                                        cover.height)));
            json j = region_summary(map);
            j["out"] = seg_out;
            emit(j);
        } else if (*psnr_cmd) {
            const double db = stego::psnr(stego::load_pgm(psnr_a), stego::load_pgm(psnr_b));
            emit({{"psnr_db", psnr_value(db)}});
        } else if (*cooc_cmd) {
            const stego::Image img = stego::load_pgm(cooc_image);
            const auto matrix = stego::cooccurrence(img, {cooc_dx, cooc_dy});
            write_file_atomic(cooc_out, stego::write_pgm(stego::render_cooc(matrix)));
            emit({{"total_pairs", matrix.total()}, {"out", cooc_out}});
        } else if (*attack_cmd) {
            stego::AttackReport rep;
            try {
                if (atk_method == "cooc") {
                    if (atk_cover.empty() || atk_stego.empty())
                        stego::fail(stego::Err::BadParams, "cooc attack needs --cover and --stego");
                    rep = stego::cooc_attack(stego::load_pgm(atk_cover),
                                             stego::load_pgm(atk_stego), {atk_dx, atk_dy});
                } else {
                    if (atk_image.empty())
                        stego::fail(stego::Err::BadParams, atk_method + " attack needs --image");
                    const stego::Image img = stego::load_pgm(atk_image);
                    rep = atk_method == "chisq" ? stego::chi_square_attack(img)
                                                : stego::rs_attack(img);
                }
            } catch (const stego::Error& e) {
                if (e.code() == stego::Err::Degenerate) {
                    emit({{"method", atk_method}, {"error", "degenerate"}});
                    return 0;
                }
                throw;
            }
            std::cout << rep.to_json() << "\n";
        } else if (*base_cmd) {
            int which = -1;
            for (int i = 0; i < 4; ++i)
                if (*bl_cmds[i]) which = i;
            BaselineArgs& a = bl[which];
            const bool matching = which >= 2;
            if (which % 2 == 0) { // embed
                const stego::Image cover = stego::load_pgm(a.cover);
                const auto message = read_file(a.message);
                const auto bits = stego::bytes_to_bits(message);
                stego::Image out_img;
                if (matching) {
                    stego::Prng rng(stego::StegoKey{a.key});
                    out_img = stego::lsb_match_embed(cover, bits, order_for(a), rng);
                } else {
                    out_img = stego::lsb_replace_embed(cover, bits, order_for(a));
                }
                write_file_atomic(a.out, stego::write_pgm(out_img));
                emit({{"action", matching ? "lsbm-embed" : "lsb-embed"},
                      {"payload_bytes", message.size()},
                      {"psnr_db", psnr_value(stego::psnr(cover, out_img))},
                      {"out", a.out}});
            } else { // extract
                const stego::Image img = stego::load_pgm(a.stego);
                const auto bits = stego::lsb_extract(img, 8 * a.bytes, order_for(a));
                write_file_atomic(a.out, stego::bits_to_bytes(bits));
                emit({{"action", "lsb-extract"}, {"payload_bytes", a.bytes}, {"out", a.out}});
            }
        }
    } catch (const stego::Error& e) {
        std::cerr << e.what() << "\n";
        return exit_code_for(e.code());
    } catch (const std::exception& e) {
        std::cerr << e.what() << "\n";
        return 5;
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) { return run(argc, argv); }
