#include "stego/metadata.hpp"

#include <json.hpp>

#include "stego/error.hpp"

namespace stego {

std::string flat_bits_name(FlatBits mode) {
    return mode == FlatBits::PositionSign ? "position+sign" : "position-only";
}

FlatBits flat_bits_from_name(const std::string& name) {
    if (name == "position-only") return FlatBits::PositionOnly;
    if (name == "position+sign") return FlatBits::PositionSign;
    fail(Err::BadParams, "unknown flat_bits_mode '" + name + "'");
}

std::string sidecar_json(const SegParams& p, StegoKey key) {
    nlohmann::json j;
    j["format_version"] = 1;
    j["n"] = p.n;
    j["r"] = p.r;
    j["T"] = p.threshold;
    j["m"] = p.m;
    j["flat_bits_mode"] = flat_bits_name(p.flat_bits);
    j["smooth"] = p.smooth;
    j["key_fingerprint"] = std::to_string(key.seed % 65521);
    return j.dump() + "\n";
}

SegParams params_from_sidecar(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        fail(Err::BadParams, std::string("sidecar is not valid JSON: ") + e.what());
    }
    try {
        if (j.at("format_version").get<int>() != 1)
            fail(Err::BadParams, "unsupported sidecar format_version");
        SegParams p;
        p.n = j.at("n").get<int>();
        p.r = j.at("r").get<int>();
        p.threshold = j.at("T").get<std::uint64_t>();
        p.m = j.at("m").get<int>();
        p.flat_bits = flat_bits_from_name(j.at("flat_bits_mode").get<std::string>());
        p.smooth = j.at("smooth").get<bool>();
        p.validate();
        return p;
    } catch (const nlohmann::json::exception& e) {
        fail(Err::BadParams, std::string("sidecar field error: ") + e.what());
    }
}

bool sidecar_matches_key(const std::string& text, StegoKey key) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception&) {
        return false;
    }
    if (!j.contains("key_fingerprint")) return true;
    return j["key_fingerprint"].get<std::string>() == std::to_string(key.seed % 65521);
}

} // namespace stego
